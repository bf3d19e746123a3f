"""Prime-spectrum screening of (group, maximal subgroup type) pairs.

screen compares the prime support of |G0| with that of |H0| (exactly, or
against a divisor bound) and reports how many primes of |G0| are missing
from |H0|: a pair can only support an almost elusive action when at most
one prime is missing.  s_screen implements the generic argument for
irreducible almost simple subgroups in dimension >= 13, driven by the
shipped table of socles whose order can be divisible by a primitive prime
divisor of q^i - 1 with n/2 < i <= n.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..groupid import GroupId
from ..numth import PrimePower, ppd_set_int
from .catalog import SubgroupSpec, UnsupportedSubgroupType, order_info
from .orders import order, spectrum


@dataclass(frozen=True)
class ScreenVerdict:
    tag: str                   # "equal_pi" | "diff_one" | "diff_at_least_two"
    mode: str                  # "exact" | "divides_bound"
    missing: tuple             # certified primes of |G0| absent from |H0|

    @property
    def r(self):
        return self.missing[0] if self.tag == "diff_one" else None

    def __str__(self):
        if self.tag == "equal_pi":
            return "EqualPi"
        if self.tag == "diff_one":
            return f"DiffOne({self.missing[0]})"
        return f"DiffAtLeastTwo{self.missing}"


def screen(g: GroupId, spec: SubgroupSpec) -> ScreenVerdict:
    """Spectrum comparison of a group against a cataloged subgroup type."""
    info = order_info(g, spec)
    pi_g = spectrum(order(g))
    support, exact = info.prime_support()
    missing = tuple(sorted(pi_g - support))
    mode = "exact" if exact else "divides_bound"
    if len(missing) == 0:
        if not exact:
            raise UnsupportedSubgroupType(
                f"divisor bound for {spec} cannot separate the spectra of {g}")
        return ScreenVerdict("equal_pi", mode, ())
    if len(missing) == 1:
        return ScreenVerdict("diff_one", mode, missing)
    return ScreenVerdict("diff_at_least_two", mode, missing[:2])


def omega_size(g: GroupId, spec: SubgroupSpec) -> int:
    """Degree |G0 : H0| of the associated primitive action; requires an
    exact catalog order."""
    info = order_info(g, spec)
    if info.exact is None:
        raise UnsupportedSubgroupType(f"{spec} has only a divisor bound")
    n = order(g)
    assert n % info.exact == 0, "Lagrange violation in the catalog"
    return n // info.exact


# ---------------------------------------------------------------------------
# the large-dimension screening of irreducible almost simple subgroups

# Socles whose order can be divisible by a primitive prime divisor of
# q^i - 1 with n/2 < i <= n, as (name, dimensions, i-values); parametric
# classical entries are handled by the closures below.
_PPD_SOCLES_FIXED = {
    "M23": ((22, (22,)),),
    "M24": ((23, (22,)),),
    "J1": ((20, (18,)),),
    "J3": ((18, (16, 18)),),
    "Co3": ((23, (22,)),),
    "Co2": ((23, (22,)),),
    "Co1": ((24, (22,)),),
    "Ru": ((28, (28,)),),
    "Sz(8)": ((14, (12,)),),
    "G2(3)": ((14, (12,)),),
    "PSp4(4)": ((18, (16,)),),
}


def _parametric_ppd_entries(name):
    """(dims, i-values) for the parametric socle families, or None."""
    import re

    m = re.fullmatch(r"L(\d+)\((\d+)\)", name)
    if m:
        d, s = int(m.group(1)), int(m.group(2))
        if d >= 3:
            v = (s**d - 1) // (s - 1)
            return ((v - 1, (v - 1,)), (v, (v - 1,)))
        if d == 2:
            out = [(s - 1, (s - 2, s - 1)), (s, (s - 2, s - 1, s)),
                   (s + 1, (s - 2, s - 1, s))]
            if s % 2 == 1:
                out.append(((s - 1) // 2, ((s - 1) // 2, (s - 3) // 2)))
                out.append(((s + 1) // 2, ((s - 1) // 2, (s - 3) // 2)))
            return tuple(out)
    m = re.fullmatch(r"U(\d+)\((\d+)\)", name)
    if m:
        d, s = int(m.group(1)), int(m.group(2))
        if d >= 3:
            v = (s**d + 1) // (s + 1)
            return ((v - 1, (v - 1,)), (v, (v - 1,)))
    m = re.fullmatch(r"PSp(\d+)\((\d+)\)", name)
    if m:
        two_d, s = int(m.group(1)), int(m.group(2))
        d = two_d // 2
        lo, hi = (s**d - 1) // 2, (s**d + 1) // 2
        ivals = [lo] if s != 3 else [lo, (3**d - 3) // 2]
        return ((lo, tuple(ivals)), (hi, tuple(ivals)))
    return None


def allowed_ppd_indices(socle_name: str, n: int):
    """The i in (n/2, n] for which |socle| may contain a primitive prime
    divisor of q^i - 1, per the shipped table; empty when the socle has no
    entry at this dimension."""
    entries = _PPD_SOCLES_FIXED.get(socle_name)
    if entries is None:
        entries = _parametric_ppd_entries(socle_name)
    if entries is None:
        return ()
    out = []
    for dim, ivals in entries:
        if dim == n:
            out.extend(ivals)
    return tuple(sorted(set(out)))


def s_screen(g: GroupId, socle_type: str, n: int | None = None) -> ScreenVerdict:
    """Screening of an irreducible almost simple subgroup with the given
    socle, for dimension n >= 13: at least two primitive-prime-divisor
    witnesses divide |G0| but not |H0|."""
    if n is None:
        n = g.n
    if n < 13:
        raise UnsupportedSubgroupType("s_screen needs dimension >= 13")
    q = g.q.q
    import re

    m = re.fullmatch(r"A(\d+)", socle_type)
    if m and int(m.group(1)) in (n + 1, n + 2):
        # all primes of |H0| are at most n+2; two bigger primes divide |G0|
        from ..numth import two_large_primes

        pair = two_large_primes(n, g.q)
        assert pair is not None, "no large prime pair below dimension 13 only"
        return ScreenVerdict("diff_at_least_two", "exact", pair)
    allowed = set(allowed_ppd_indices(socle_type, n))
    candidates = [2 * ((n - 1) // 2), 2 * ((n - 3) // 2), 2 * ((n - 5) // 2)]
    witnesses = []
    for i in sorted(set(candidates) - allowed, reverse=True):
        ppds = ppd_set_int(q, i)
        if ppds:
            witnesses.append(max(ppds))
        if len(witnesses) == 2:
            break
    assert len(witnesses) >= 2, (socle_type, n, q)
    return ScreenVerdict("diff_at_least_two", "exact", tuple(sorted(witnesses)))
