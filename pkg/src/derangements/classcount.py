"""Symbolic conjugacy-class machinery for prime-order elements.

Semisimple elements of order r are labelled by multisets of eigenvalue
orbits: an orbit is a subset of the nonzero residues mod r closed under
multiplication by a step base (q, or q^2 in the relevant unitary setting),
and a class label lists orbit multiplicities together with the fixed-space
dimension.  Unipotent elements are labelled by Jordan partitions.  On top of
the labels sit the field-automorphism fusion count (with an enumeration
oracle guarding the closed formula), the unique-class criterion for the
unitary 2n-setting, the per-family class-count catalog, and the derangement
predicates behind the shipped witness records.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .groupid import GroupId
from .numth import (PreconditionViolation, PrimePower, is_prime,
                    multiplicative_order, ppd_set_int)


class FormulaMismatch(AssertionError):
    """The closed orbit-size formula disagrees with the enumeration oracle."""


class UnsupportedCountingCase(ValueError):
    pass


class PartitionDimensionMismatch(ValueError):
    pass


class UnknownCase(KeyError):
    pass


@dataclass(frozen=True)
class OrbitLabel:
    """An orbit of e -> step * e on the nonzero residues mod r, canonicalized
    by its least exponent."""

    r: int
    step: int
    exponents: frozenset

    def __post_init__(self):
        assert self.exponents, "empty orbit"
        e0 = min(self.exponents)
        orbit = {e0}
        e = e0 * self.step % self.r
        while e != e0:
            orbit.add(e)
            e = e * self.step % self.r
        if frozenset(orbit) != self.exponents:
            raise PreconditionViolation("exponent set is not a single orbit")

    @property
    def size(self):
        return len(self.exponents)

    @property
    def key(self):
        return min(self.exponents)

    def inverse(self):
        return OrbitLabel(self.r, self.step,
                          frozenset((-e) % self.r for e in self.exponents))


def sigma_orbits(r: int, base: int, count_only: bool = False):
    """Orbits of e -> base * e on {1, ..., r-1}; all have size ord_r(base)."""
    if not is_prime(r) or r == 2:
        raise PreconditionViolation(f"{r} must be an odd prime")
    if gcd(base, r) != 1:
        raise PreconditionViolation(f"gcd({base}, {r}) != 1")
    base %= r
    size = multiplicative_order(base, r)
    count = (r - 1) // size
    if count_only:
        return count, size
    seen = set()
    orbits = []
    for e0 in range(1, r):
        if e0 in seen:
            continue
        orbit = set()
        e = e0
        while e not in orbit:
            orbit.add(e)
            e = e * base % r
        seen |= orbit
        orbits.append(OrbitLabel(r, base, frozenset(orbit)))
    assert len(orbits) == count and all(o.size == size for o in orbits)
    return orbits


@dataclass(frozen=True)
class ClassLabel:
    """A prime-order class label: an eigenvalue-orbit multiset with fixed
    space, or a Jordan partition."""

    kind: str                       # "semisimple" | "unipotent"
    r: int | None = None            # element order (semisimple)
    orbits: tuple = ()              # ((OrbitLabel, multiplicity), ...) sorted
    e: int = 0                      # fixed-space dimension (semisimple)
    partition: tuple = ()           # Jordan block sizes, descending

    @staticmethod
    def semisimple(orbit_mults, e=0):
        om = tuple(sorted(((o, m) for o, m in orbit_mults),
                          key=lambda t: t[0].key))
        r = om[0][0].r
        return ClassLabel("semisimple", r=r, orbits=om, e=e)

    @staticmethod
    def unipotent(sizes):
        return ClassLabel("unipotent", partition=tuple(sorted(sizes, reverse=True)))

    def dimension(self, block_dim=None):
        if self.kind == "unipotent":
            return sum(self.partition)
        total = self.e
        for o, m in self.orbits:
            total += (block_dim if block_dim is not None else o.size) * m
        return total

    def multiplicities(self):
        out = {}
        for s in self.partition:
            out[s] = out.get(s, 0) + 1
        return out


@dataclass(frozen=True)
class AutSpec:
    """How an almost simple group sits over its socle: the field part is
    generated by the k-th power of the generating field automorphism."""

    k: int
    f: int
    projects_onto_phi: bool

    def __post_init__(self):
        if not (1 <= self.k <= 2 * self.f):
            raise PreconditionViolation("need 1 <= k <= 2f")


@dataclass(frozen=True)
class FieldOrbitReport:
    formula_size: Fraction
    oracle_size: int
    oracle_count: int
    agree: bool


def field_orbit_sizes(r: int, q: PrimePower, i: int, m: int, k: int,
                      strict: bool = True) -> FieldOrbitReport:
    """Size and count of the orbits of the field group <phi^k> on the set of
    eigenvalue orbits, both by the closed formula a*t/k (a = (m,f), t = 2
    iff k/(a,k) is odd) and by explicit enumeration.

    The enumeration is authoritative: with strict=True a disagreement raises
    FormulaMismatch, otherwise it is recorded on the report.
    """
    p, f = q.p, q.f
    if i % 4 != 2 or i < 10:
        raise PreconditionViolation("the setting needs i = 2 (mod 4), i >= 10")
    if (2 * f) % k != 0:
        raise PreconditionViolation("k must divide 2f")
    if r not in ppd_set_int(q.q, i):
        raise PreconditionViolation(f"{r} is not a primitive prime divisor of q^{i}-1")
    if r not in ppd_set_int(p, m):
        raise PreconditionViolation(f"{r} is not a primitive prime divisor of p^{m}-1")
    a = gcd(m, f)
    d = gcd(a, k)
    t = 2 if (k // d) % 2 == 1 else 1
    formula = Fraction(a * t, k)

    # oracle: orbits of e -> p^k e on the sigma^2-orbit set
    step = pow(q.q, 2, r)
    labels = {o.key: o for o in sigma_orbits(r, step)}
    keys = set(labels)
    mult = pow(p, k, r)
    seen = set()
    orbit_sizes = []
    for k0 in sorted(keys):
        if k0 in seen:
            continue
        orbit = set()
        cur = k0
        while cur not in orbit:
            orbit.add(cur)
            nxt = frozenset(e * mult % r for e in labels[cur].exponents)
            cur = min(nxt)
        seen |= orbit
        orbit_sizes.append(len(orbit))
    assert len(set(orbit_sizes)) == 1, "field orbits of unequal size"
    size = orbit_sizes[0]
    agree = formula == size
    if strict and not agree:
        raise FormulaMismatch(
            f"formula a*t/k = {formula} but enumeration gives {size} "
            f"(r={r}, q={q.q}, i={i}, m={m}, k={k})")
    return FieldOrbitReport(formula, size, len(orbit_sizes), agree)


def unique_semisimple_class(n: int, q: PrimePower, r: int, m: int,
                            aut: AutSpec) -> bool:
    """Whether an almost simple unitary group of odd degree n >= 5 has a
    single class of elements of order r (a primitive prime divisor of both
    q^2n - 1 and p^m - 1): exactly when r = 2na + 1 with a = (m, f) and the
    group covers the full field-automorphism quotient."""
    if n < 5 or n % 2 == 0:
        raise PreconditionViolation("need odd n >= 5")
    if r not in ppd_set_int(q.q, 2 * n):
        raise PreconditionViolation(f"{r} is not a ppd of q^{2 * n} - 1")
    if r not in ppd_set_int(q.p, m):
        raise PreconditionViolation(f"{r} is not a ppd of p^{m} - 1")
    a = gcd(m, q.f)
    return r == 2 * n * a + 1 and aut.projects_onto_phi


@dataclass(frozen=True)
class ClassCount:
    inndiag: int
    g_lower: int
    exact: bool        # g_lower is the exact G-class count


def class_count(g: GroupId, r: int, aut: AutSpec | None = None) -> ClassCount:
    """Class counts for full-support single-orbit labels of ppd order r:
    the number of classes at the inner-diagonal level and a lower bound for
    the number of G-classes.
    """
    n, q, p, f = g.n, g.q.q, g.q.p, g.q.f
    if r == p:
        raise UnsupportedCountingCase("unipotent orders are not counted here")
    i = multiplicative_order(q, r)
    fam = g.family
    if fam == "L" and i == n:
        inndiag = (r - 1) // n
        idx = 2 * f
        if aut is not None and aut.projects_onto_phi and aut.k == 1:
            # no graph part: the index over the socle is only f
            idx = f
        return ClassCount(inndiag, max(1, -(-inndiag // idx)), False)
    if fam == "U" and n % 2 == 1 and i == 2 * n:
        inndiag = (r - 1) // n
        if aut is not None:
            m = multiplicative_order(p, r)
            if unique_semisimple_class(n, g.q, r, m, aut):
                return ClassCount(inndiag, 1, True)
        return ClassCount(inndiag, max(1, -(-inndiag // (2 * f))), False)
    if fam == "U" and n % 2 == 0 and i == 2 * n - 2:
        inndiag = (r - 1) // (n - 1)
        return ClassCount(inndiag, max(1, -(-inndiag // (2 * f))), False)
    if fam == "S" and i == 4 and n in (4, 6):
        inndiag = (r - 1) // 4
        idx = f * (2 if (n == 4 and p == 2) else 1)
        return ClassCount(inndiag, max(1, -(-inndiag // idx)), False)
    if fam == "S" and i == n:
        inndiag = (r - 1) // n
        idx = f * (2 if (n == 4 and p == 2) else 1)
        return ClassCount(inndiag, max(1, -(-inndiag // idx)), False)
    if fam in ("S", "O+", "O-") and i % 2 == 1 and n % (2 * i) == 0:
        # blocks come in inverse pairs of total dimension 2i
        inndiag = (r - 1) // (2 * i)
        return ClassCount(inndiag, max(1, -(-inndiag // (2 * f))), False)
    if fam in ("O+", "O-", "Oo") and i % 2 == 0 and i in (4, n, n - 1, n - 2):
        inndiag = (r - 1) // i
        return ClassCount(inndiag, max(1, -(-inndiag // (2 * f))), False)
    raise UnsupportedCountingCase(
        f"no counting entry for {g} with r = {r} (index {i})")


def valid_jordan(family: str, partition, p: int) -> bool:
    """Whether a Jordan partition labels an order-p element of the family:
    symplectic groups pair odd block sizes, orthogonal groups pair even
    ones, and in characteristic 2 both only allow [J2^s, J1^(n-2s)]."""
    sizes = list(partition)
    if any(s < 1 for s in sizes):
        raise PartitionDimensionMismatch("block sizes must be positive")
    if max(sizes) > p:
        return False   # such an element has order p^2 or more
    if family in ("L", "U"):
        return True
    if family not in ("S", "O+", "O-", "Oo"):
        raise PreconditionViolation(f"unknown family {family}")
    mults = {}
    for s in sizes:
        mults[s] = mults.get(s, 0) + 1
    if p == 2:
        return set(mults) <= {1, 2}
    if family == "S":
        return all(m % 2 == 0 for s, m in mults.items() if s % 2 == 1)
    return all(m % 2 == 0 for s, m in mults.items() if s % 2 == 0)


# ---------------------------------------------------------------------------
# derangement predicates for the witness catalog


def _is_full_support(label: ClassLabel, min_orbit_size):
    return label.kind == "semisimple" and label.e == 0 and \
        all(o.size >= min_orbit_size for o, _ in label.orbits)


_PREDICATES = {}


def _predicate(name):
    def deco(fn):
        _PREDICATES[name] = fn
        return fn
    return deco


@_predicate("no-J1")
def _no_j1(label, params):
    """Unipotent fixing no nondegenerate 1-space: no Jordan 1-block."""
    return label.kind == "unipotent" and 1 not in label.partition


@_predicate("ext-field")
def _ext_field(label, params):
    """Unipotent outside a degree-k field-extension subgroup: some block
    multiplicity not divisible by k and not the single [J_k^(n/k)] shape."""
    k = params["k"]
    if label.kind != "unipotent":
        return False
    mults = label.multiplicities()
    if set(mults) == {k}:
        return False
    return any(m % k for m in mults.values())


@_predicate("sp-odd-block")
def _sp_odd_block(label, params):
    """Unipotent outside every symplectic-type subgroup: some odd block size
    with odd multiplicity."""
    return label.kind == "unipotent" and any(
        s % 2 == 1 and m % 2 == 1 for s, m in label.multiplicities().items())


@_predicate("o-even-block")
def _o_even_block(label, params):
    """Unipotent outside every orthogonal-type subgroup: some even block size
    with odd multiplicity."""
    return label.kind == "unipotent" and any(
        s % 2 == 0 and m % 2 == 1 for s, m in label.multiplicities().items())


@_predicate("o-point-perp")
def _o_point_perp(label, params):
    """Unipotent outside the stabilizer of a nonsingular point of a minus
    space: every odd block size occurs at most once."""
    return label.kind == "unipotent" and all(
        m == 1 for s, m in label.multiplicities().items() if s % 2 == 1)


@_predicate("support")
def _support(label, params):
    """Semisimple fixing no k-space: trivial fixed space and all eigenvalue
    orbits longer than k."""
    k = params.get("k", 1)
    return _is_full_support(label, k + 1)


@_predicate("tis-half")
def _tis_half(label, params):
    """Semisimple [orbit, fixed half]: moves every totally singular
    half-dimensional space."""
    if label.kind != "semisimple" or len(label.orbits) != 1:
        return False
    (o, m), = label.orbits
    return m == 1 and label.e == o.size


@_predicate("tis-pair")
def _tis_pair(label, params):
    """Two distinct orbits of equal size, no fixed space: moves every
    totally singular half-dimensional space in the unitary setting."""
    if label.kind != "semisimple" or label.e != 0:
        return False
    mults = [m for _, m in label.orbits]
    if params.get("shape") == "3+1":
        return sorted(mults) == [1, 3] and len(label.orbits) == 2
    return mults == [1, 1] and len(label.orbits) == 2


@_predicate("not-in-Oplus")
def _not_in_oplus(label, params):
    """Semisimple with elliptic blocks filling the space, an odd number of
    them: lies outside the plus-type orthogonal subgroup of an even-q
    symplectic group."""
    if label.kind != "semisimple" or label.e != 0:
        return False
    total = sum(m for _, m in label.orbits)
    return all(o.size % 2 == 0 for o, _ in label.orbits) and total % 2 == 1


@_predicate("not-in-Ominus")
def _not_in_ominus(label, params):
    """Semisimple whose blocks pair into hyperbolic halves: lies outside the
    minus-type orthogonal subgroup of an even-q symplectic group."""
    if label.kind != "semisimple" or label.e != 0:
        return False
    keys = {o.key for o, _ in label.orbits}
    return all(o.size % 2 == 1 and (-o.key) % o.r in keys
               for o, _ in label.orbits)


def derangement_predicate(case_id: str, label: ClassLabel) -> bool:
    """Whether the labelled element is a derangement for the catalog case."""
    rec = _witness_index().get(case_id)
    if rec is None:
        raise UnknownCase(
            f"unknown case {case_id!r}; known: {sorted(_witness_index())}")
    if rec.predicate == "count":
        raise UnknownCase(f"case {case_id} is settled by class counting, "
                          "not by a witness predicate")
    fn = _PREDICATES.get(rec.predicate)
    if fn is None:
        raise UnknownCase(f"case {case_id} has unregistered predicate "
                          f"{rec.predicate!r}")
    return fn(label, dict(rec.params))


# ---------------------------------------------------------------------------
# the witness catalog (shipped data)


@dataclass(frozen=True)
class WitnessRecord:
    case_id: str
    family: str
    subgroup: str          # stabilizer type the witness eludes
    predicate: str         # predicate name above, or "count"
    params: tuple          # extra predicate/action parameters
    element: str           # element template, or "" for counting arguments
    action: str            # action template for brute-force verification
    instance: tuple | None # (n, q) where the record is exercised, or None
    note: str = ""


def _witness_index():
    global _WITNESS_CACHE
    if _WITNESS_CACHE is None:
        from .witnessdata import load_witnesses

        _WITNESS_CACHE = {rec.case_id: rec for rec in load_witnesses()}
    return _WITNESS_CACHE


_WITNESS_CACHE = None


def witness_catalog() -> list[WitnessRecord]:
    """All shipped witness records (derangement witnesses and class-count
    argument markers), one or more per screening-table case id."""
    return list(_witness_index().values())
