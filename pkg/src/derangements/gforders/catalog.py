"""Orders and order bounds for the cataloged maximal subgroup types.

Each catalog entry yields an OrderInfo: either an exact order of
H0 = H intersect G0, or a divisor bound A (every prime of |H0| divides A)
together with a lower-bound witness L (a divisor of some subgroup of H0,
so primes(L) <= primes(H0)).  When primes(L) = primes(A) the prime spectrum
of H0 is pinned exactly even though its order is not; the screen reports
such verdicts in exact mode.

Maximality is never decided here: the catalog covers exactly the types the
shipped tables and worked screening cases reach, and everything else raises
UnsupportedSubgroupType.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd, prod

from ..groupid import GroupId
from .orders import (gl_order, go_order, gu_order, nonsingular_point_count,
                     simple_order, singular_point_count, sl_order, sp_order,
                     spectrum, su_order, ts_count_orthogonal,
                     ts_count_symplectic, ts_count_unitary)


class UnsupportedSubgroupType(ValueError):
    def __init__(self, message):
        super().__init__(f"{message}; supported types: {sorted(CATALOG)}")


@dataclass(frozen=True)
class SubgroupSpec:
    """A maximal-subgroup description: Aschbacher class, catalog type name
    and integer/string parameters."""

    asch_class: str                    # C1..C8, N, S
    type_name: str
    params: tuple = ()

    def param(self, key, default=None):
        for k, v in self.params:
            if k == key:
                return v
        if default is None:
            raise UnsupportedSubgroupType(f"missing parameter {key} in {self}")
        return default

    @staticmethod
    def make(asch_class, type_name, **params):
        return SubgroupSpec(asch_class, type_name, tuple(sorted(params.items())))

    def __str__(self):
        ps = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.asch_class}:{self.type_name}" + (f"[{ps}]" if ps else "")


@dataclass(frozen=True)
class OrderInfo:
    exact: int | None = None
    bound: int | None = None
    lower: int | None = None

    def spectrum_exact(self):
        if self.exact is not None:
            return True
        return self.lower is not None and \
            spectrum(self.lower) == spectrum(self.bound)

    def prime_support(self):
        """(primes, exact_flag): the primes of |H0| when exact_flag, else a
        superset."""
        if self.exact is not None:
            return spectrum(self.exact), True
        ps = spectrum(self.bound)
        return ps, self.spectrum_exact()


_SOCLE_ORDERS = {
    "M11": 7920, "M12": 95040, "M22": 443520,
    "L2(7)": 168, "L2(11)": 660, "L2(13)": 1092,
    "L3(4)": 20160, "U4(2)": 25920, "U4(3)": 3265920,
    "Sp6(2)": 1451520, "O8+(2)": 174182400,
}

_SOCLE_OUT = {
    "M11": 1, "M12": 2, "M22": 2,
    "L2(7)": 2, "L2(11)": 2, "L2(13)": 2,
    "L3(4)": 12, "U4(2)": 2, "U4(3)": 8,
    "Sp6(2)": 1, "O8+(2)": 6,
}


def _alternating(m):
    return prod(range(1, m + 1)) // 2


def _socle_order(name, n, q):
    if name in _SOCLE_ORDERS:
        return _SOCLE_ORDERS[name], _SOCLE_OUT[name]
    if name.startswith("A") and name[1:].isdigit():
        m = int(name[1:])
        return _alternating(m), 4 if m == 6 else 2
    if name == "Sz":
        f = (q.bit_length() - 1)
        return q * q * (q * q + 1) * (q - 1), f
    if name == "G2":
        return q**6 * (q**6 - 1) * (q**2 - 1), 2 * q.bit_length()
    if name == "Omega7":
        return simple_order("Oo", 7, q), 2 * q.bit_length()
    if name == "Sp6":
        return simple_order("S", 6, q), 2 * q.bit_length()
    if name == "L2q":
        return simple_order("L", 2, q), 2 * q.bit_length()
    raise UnsupportedSubgroupType(f"unknown S-collection socle {name!r}")


def _c6_bound(n, q):
    """Divisor bound for the normalizer of a symplectic-type r-group in
    dimension n = r^m."""
    r = None
    for cand in (2, 3, 5, 7):
        m = 0
        k = n
        while k % cand == 0:
            k //= cand
            m += 1
        if k == 1 and m >= 1:
            r = cand
            break
    if r is None or q % r == 0:
        raise UnsupportedSubgroupType(f"no extraspecial type in dimension {n}")
    m = 0
    k = n
    while k > 1:
        k //= r
        m += 1
    a = r * prod((r**i + 1) * (r**i - 1) for i in range(1, m + 1))
    return OrderInfo(bound=a, lower=r)


# --- per-family catalog entries --------------------------------------------


def _linear(g, spec):
    n, q = g.n, g.q.q
    d = gcd(n, q - 1)
    t = spec.type_name
    if t == "P":
        m = spec.param("m")
        from .orders import gaussian_binomial

        return OrderInfo(exact=simple_order("L", n, q) // gaussian_binomial(n, m, q))
    if t == "Pflag":
        idx = (q**n - 1) * (q ** (n - 1) - 1) // (q - 1) ** 2
        return OrderInfo(exact=simple_order("L", n, q) // idx)
    if t == "GLsum":
        m = spec.param("m")
        from .orders import gaussian_binomial

        idx = gaussian_binomial(n, m, q) * q ** (m * (n - m))
        return OrderInfo(exact=simple_order("L", n, q) // idx)
    if t == "GL1wr":
        return OrderInfo(exact=(q - 1) ** (n - 1) * prod(range(1, n + 1)) // d)
    if t == "GLext":
        k = spec.param("k")
        m = n // k
        assert m * k == n
        exact = sl_order(m, q**k) * ((q**k - 1) // (q - 1)) * k // d
        return OrderInfo(exact=exact)
    if t == "GLsub":
        k = spec.param("k")
        q0 = round(q ** (1 / k))
        assert q0**k == q
        return OrderInfo(bound=gl_order(n, q0) * (q - 1) * k,
                         lower=sl_order(n, q0))
    if t == "Sp":
        return OrderInfo(bound=sp_order(n, q) * (q - 1) * 2,
                         lower=simple_order("S", n, q))
    if t == "O":
        eps = spec.param("eps")
        return OrderInfo(bound=go_order(n, q, eps) * (q - 1),
                         lower=_omega_simple(n, q, eps))
    if t == "C6":
        return _c6_bound(n, q)
    return None


def _omega_simple(n, q, eps):
    fam = {"+": "O+", "-": "O-", "o": "Oo"}[eps]
    if n == 2:
        e = 1 if eps == "+" else -1
        return (q - e) // gcd(2, q - 1)
    if n == 3:
        return simple_order("L", 2, q)
    if n == 4 and eps == "+":
        return simple_order("L", 2, q) ** 2 * gcd(2, q - 1)
    if n == 4 and eps == "-":
        return simple_order("L", 2, q * q)
    if n == 5:
        return simple_order("S", 4, q)
    if n == 6 and eps == "+":
        return simple_order("L", 4, q)
    if n == 6 and eps == "-":
        return simple_order("U", 4, q)
    return simple_order(fam, n, q)


def _unitary(g, spec):
    n, q = g.n, g.q.q
    d = gcd(n, q + 1)
    t = spec.type_name
    if t == "P":
        m = spec.param("m")
        return OrderInfo(exact=simple_order("U", n, q) // ts_count_unitary(n, m, q))
    if t == "GUsum":
        m = spec.param("m")
        exact = gu_order(m, q) * gu_order(n - m, q) // ((q + 1) * d)
        return OrderInfo(exact=exact)
    if t == "GU1wr":
        return OrderInfo(exact=(q + 1) ** (n - 1) * prod(range(1, n + 1)) // d)
    if t == "GLhalf.2":
        exact = 2 * gl_order(n // 2, q * q) // ((q + 1) * d)
        return OrderInfo(exact=exact)
    if t == "Sp":
        return OrderInfo(bound=sp_order(n, q) * (q + 1) * 2,
                         lower=simple_order("S", n, q))
    if t == "O":
        eps = spec.param("eps")
        return OrderInfo(bound=go_order(n, q, eps) * (q + 1) * 2,
                         lower=_omega_simple(n, q, eps))
    if t == "C6":
        return _c6_bound(n, q)
    return None


def _symplectic(g, spec):
    n, q = g.n, g.q.q
    d = gcd(2, q - 1)
    t = spec.type_name
    if t == "P":
        m = spec.param("m")
        return OrderInfo(
            exact=simple_order("S", n, q) // ts_count_symplectic(n, m, q))
    if t == "Spsum":
        m = spec.param("m")
        return OrderInfo(exact=sp_order(m, q) * sp_order(n - m, q) // d)
    if t == "Spwr":
        return OrderInfo(exact=sp_order(n // 2, q) ** 2 * 2 // d)
    if t == "SpGL.2":
        return OrderInfo(exact=gl_order(n // 2, q) * 2 // d)
    if t == "Spext":
        k = spec.param("k")
        return OrderInfo(exact=sp_order(n // k, q**k) * k // d)
    if t == "Spsub":
        k = spec.param("k", 2)
        q0 = round(q ** (1 / k))
        assert q0**k == q
        return OrderInfo(bound=sp_order(n, q0) * 2 * k,
                         lower=simple_order("S", n, q0))
    if t == "O":
        eps = spec.param("eps")
        assert q % 2 == 0
        return OrderInfo(exact=go_order(n, q, eps))
    if t == "C6":
        return _c6_bound(n, q)
    return None


def _orthogonal(g, spec):
    n, q = g.n, g.q.q
    eps = {"O+": "+", "O-": "-", "Oo": "o"}[g.family]
    t = spec.type_name
    own = simple_order(g.family, n, q)
    if t == "P":
        m = spec.param("m")
        return OrderInfo(exact=own // ts_count_orthogonal(n, m, q, eps))
    if t == "Spn-2":
        assert q % 2 == 0
        e = 1 if eps == "+" else -1
        return OrderInfo(exact=own // (q ** (n // 2 - 1) * (q ** (n // 2) - e)))
    if t == "O1sum":
        assert q % 2 == 1
        perp = spec.param("perp", "*")
        count = nonsingular_point_count(n, q, eps,
                                        None if perp == "*" else perp)
        if perp == "*" and eps in ("+", "-"):
            count //= 2   # one of the two equal-size square classes
        return OrderInfo(exact=own // count)
    if t == "O2sum":
        e1, e2 = spec.param("e1"), spec.param("e2")
        return OrderInfo(bound=go_order(2, q, e1) * go_order(n - 2, q, e2) * 4,
                         lower=(q - (1 if e1 == "+" else -1))
                         * _omega_simple(n - 2, q, e2))
    if t == "Omsum":
        m = spec.param("m")
        return OrderInfo(bound=go_order(m, q, "-") * go_order(n - m, q, "-") * 4,
                         lower=_omega_simple(m, q, "-")
                         * _omega_simple(n - m, q, "-"))
    if t == "O1wr":
        assert q % 2 == 1
        fact = prod(range(1, n + 1))
        return OrderInfo(bound=2**n * fact, lower=fact // 2)
    if t == "OGL.2":
        return OrderInfo(bound=gl_order(n // 2, q) * 8 * (q - 1),
                         lower=sl_order(n // 2, q))
    if t == "OGU":
        return OrderInfo(bound=gu_order(n // 2, q) * 8,
                         lower=simple_order("U", n // 2, q))
    if t == "Osub":
        k = spec.param("k", 2)
        sub_eps = spec.param("eps")
        q0 = round(q ** (1 / k))
        assert q0**k == q
        return OrderInfo(bound=go_order(n, q0, sub_eps) * 2 * k,
                         lower=_omega_simple(n, q0, sub_eps))
    if t == "Oext2":
        sub_eps = spec.param("eps")
        return OrderInfo(bound=go_order(n // 2, q * q, sub_eps) * 8,
                         lower=_omega_simple(n // 2, q * q, sub_eps))
    if t == "GL1xGL3":
        return OrderInfo(bound=q ** (n * (n - 1) // 2) * (q - 1)
                         * gl_order(3, q) * 8,
                         lower=sl_order(3, q))
    if t == "G2":
        return OrderInfo(exact=q**6 * (q**6 - 1) * (q**2 - 1))
    if t == "C6":
        return _c6_bound(n, q)
    return None


def _s_collection(g, spec):
    name = spec.type_name
    n, q = g.n, g.q.q
    socle, out = _socle_order(name, n, q)
    if name in ("Sz", "G2", "Omega7", "Sp6"):
        return OrderInfo(exact=socle)
    return OrderInfo(bound=socle * out, lower=socle)


CATALOG = {
    "L": ("P", "Pflag", "GLsum", "GL1wr", "GLext", "GLsub", "Sp", "O", "C6"),
    "U": ("P", "GUsum", "GU1wr", "GLhalf.2", "Sp", "O", "C6"),
    "S": ("P", "Spsum", "Spwr", "SpGL.2", "Spext", "Spsub", "O", "C6"),
    "O": ("P", "Spn-2", "O1sum", "O2sum", "Omsum", "O1wr", "OGL.2", "OGU",
          "Osub", "Oext2", "GL1xGL3", "G2", "C6"),
    "S-collection": "socle name (A<m>, M11, M12, M22, L2(7), L2(11), L2(13), "
                    "L2q, L3(4), U4(2), U4(3), Sp6(2), O8+(2), Sz, G2, "
                    "Omega7, Sp6)",
}


def order_info(g: GroupId, spec: SubgroupSpec) -> OrderInfo:
    """OrderInfo for a cataloged (group, subgroup-type) pair."""
    if spec.type_name == "G2":
        q = g.q.q
        return OrderInfo(exact=q**6 * (q**6 - 1) * (q**2 - 1))
    if spec.asch_class == "S":
        return _s_collection(g, spec)
    dispatch = {"L": _linear, "U": _unitary, "S": _symplectic,
                "O+": _orthogonal, "O-": _orthogonal, "Oo": _orthogonal}
    info = dispatch[g.family](g, spec)
    if info is None:
        raise UnsupportedSubgroupType(f"{spec} not in the catalog for {g}")
    return info


def subgroup_order(g: GroupId, spec: SubgroupSpec):
    """Spec-shaped surface: ('exact', N) or ('bound', A)."""
    info = order_info(g, spec)
    if info.exact is not None:
        return ("exact", info.exact)
    return ("bound", info.bound)
