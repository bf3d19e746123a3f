"""Permutation actions of matrix groups on canonically labelled objects.

Objects are hashable labels: a projective point is a normalized row vector
(first nonzero coordinate 1), a subspace is the tuple of rows of its reduced
row echelon basis, and compound objects are tuples or frozensets of labels.
Domains are built by orbit closure from seed objects, so an action never
enumerates more of the geometry than the orbit actually visits.
"""

from __future__ import annotations

from .fields import Field
from .matrices import Mat, FormSpec


class DomainTooLarge(RuntimeError):
    pass


MAX_DOMAIN = 10**6


def normalize_point(F: Field, v):
    piv = next((x for x in v if x), None)
    if piv is None:
        raise ValueError("zero vector is not a point")
    if piv == 1:
        return tuple(v)
    c = F.inv(piv)
    return tuple(F.mul(c, x) for x in v)


def rref(F: Field, rows):
    """Reduced row echelon canonical form; zero rows dropped."""
    m = [list(r) for r in rows]
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = next((r for r in range(rank, len(m)) if m[r][col]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        s = F.inv(m[rank][col])
        if s != 1:
            m[rank] = [F.mul(s, x) for x in m[rank]]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                c = m[r][col]
                m[r] = [F.sub(x, F.mul(c, y)) for x, y in zip(m[r], m[rank])]
        rank += 1
        if rank == len(m):
            break
    return tuple(tuple(r) for r in m[:rank])


def nullspace(F: Field, rows, ncols=None):
    """RREF basis of {w : rows . w^T = 0}."""
    if ncols is None:
        ncols = len(rows[0])
    r = rref(F, rows)
    pivots = []
    for row in r:
        pivots.append(next(i for i, x in enumerate(row) if x))
    free = [i for i in range(ncols) if i not in pivots]
    basis = []
    for fcol in free:
        v = [0] * ncols
        v[fcol] = 1
        for prow, pcol in zip(r, pivots):
            v[pcol] = F.neg(prow[fcol])
        basis.append(v)
    return rref(F, basis) if basis else ()


class Semilinear:
    """A semilinear map v -> frob^e(v) . M, used to realize outer
    automorphisms as permutations of object domains."""

    def __init__(self, mat: Mat, frob_power: int = 0):
        self.mat = mat
        self.e = frob_power
        self.field = mat.field

    def apply(self, v):
        F = self.field
        if self.e:
            v = tuple(F.frob(x, self.e) for x in v)
        return self.mat.apply(v)


def act_point(g, obj, F):
    return normalize_point(F, g.apply(obj))


def act_subspace(g, obj, F):
    return rref(F, [g.apply(r) for r in obj])


def make_act(F, kind):
    if kind == "point":
        return lambda g, o: act_point(g, o, F)
    if kind == "subspace":
        return lambda g, o: act_subspace(g, o, F)
    raise ValueError(kind)


def lift_act(act):
    """Extend an object action to tuples and frozensets of objects."""

    def go(g, obj):
        if isinstance(obj, frozenset):
            return frozenset(go(g, x) for x in obj)
        if isinstance(obj, tuple) and obj and not isinstance(obj[0], int):
            return tuple(go(g, x) for x in obj)
        return act(g, obj)

    return go


class Action:
    """A group action materialized on the orbit of a seed object."""

    def __init__(self, domain, index, act):
        self.domain = domain
        self.index = index
        self.act = act

    @property
    def degree(self):
        return len(self.domain)

    def perm_of(self, g):
        """Image permutation of a (semi)linear map on this domain."""
        act = self.act
        idx = self.index
        return tuple(idx[act(g, obj)] for obj in self.domain)

    def perms_of(self, gens):
        return [self.perm_of(g) for g in gens]


def orbit_action(gens, seed, act, max_size=MAX_DOMAIN) -> Action:
    """Close the orbit of `seed` under `gens` with the given object action."""
    domain = [seed]
    index = {seed: 0}
    i = 0
    while i < len(domain):
        obj = domain[i]
        for g in gens:
            img = act(g, obj)
            if img not in index:
                if len(domain) >= max_size:
                    raise DomainTooLarge(f"orbit exceeded {max_size} objects")
                index[img] = len(domain)
                domain.append(img)
        i += 1
    return Action(domain, index, act)


def all_vectors(F, n):
    """All of GF(q)^n in a fixed deterministic order."""
    q = F.q
    for code in range(q**n):
        v = []
        for _ in range(n):
            v.append(code % q)
            code //= q
        yield tuple(v)


def find_vector(F, n, pred):
    for v in all_vectors(F, n):
        if any(v) and pred(v):
            return v
    raise ValueError("no vector satisfies the predicate")


def quadratic_plane_type(form: FormSpec, rows):
    """Type of a nondegenerate 2-space for a quadratic form: '+' if it has
    singular points, '-' if anisotropic."""
    F = form.field
    u, w = rows
    for a in F.elements():
        for b in F.elements():
            if (a or b):
                v = tuple(F.add(F.mul(a, x), F.mul(b, y)) for x, y in zip(u, w))
                if form.q_value(v) == 0:
                    return "+"
    return "-"


def restricted_gram_det(form: FormSpec, rows):
    F = form.field
    g = Mat(F, [[form.value(u, v) for v in rows] for u in rows])
    return g.det()


# ---------------------------------------------------------------------------


def seed_point(form, F, n, kind, cls=None):
    """Deterministic seed object for the standard subspace domains."""
    if kind == "projective":
        return normalize_point(F, (1,) + (0,) * (n - 1))
    if kind == "isotropic":
        def iso(v):
            if form.kind == "quadratic":
                return form.q_value(v) == 0
            return form.value(v, v) == 0
        return normalize_point(F, find_vector(F, n, iso))
    if kind == "nondegenerate":
        if form.kind == "unitary":
            return normalize_point(F, find_vector(F, n, lambda v: form.value(v, v) != 0))
        if form.kind == "quadratic":
            if cls is None:
                return normalize_point(
                    F, find_vector(F, n, lambda v: form.q_value(v) != 0))

            def in_class(v):
                val = form.q_value(normalize_point(F, v))
                return val != 0 and _square_class(F, val) == cls

            return normalize_point(F, find_vector(F, n, in_class))
    raise ValueError(kind)


def _square_class(F, a):
    """0 for squares, 1 for nonsquares (odd q)."""
    if F.q % 2 == 0:
        return 0
    return 0 if F.pow(a, (F.q - 1) // 2) == 1 else 1


def subspace_action(gens, form, kind, k=1, F=None, cls=None,
                    max_size=MAX_DOMAIN) -> Action:
    """Induced permutation action on a standard family of subspaces.

    kind: "projective" | "isotropic" (k = 1 points), "totally_singular"
    (k-spaces spanned by the first k basis vectors' orbit), "nondegenerate"
    (points; cls picks the square class for odd-q quadratic forms).
    """
    if F is None:
        F = (form.field if form is not None else gens[0].field)
    n = gens[0].n
    if kind in ("projective", "isotropic", "nondegenerate"):
        seed = seed_point(form, F, n, kind, cls=cls)
        return orbit_action(gens, seed, make_act(F, "point"), max_size)
    if kind == "totally_singular":
        rows = [tuple(1 if j == i else 0 for j in range(n)) for i in range(k)]
        seed = rref(F, rows)
        if form is not None:
            for u in seed:
                assert form.is_isotropic(u)
            for a in range(k):
                for b in range(k):
                    assert form.value(seed[a], seed[b]) == 0
        return orbit_action(gens, seed, make_act(F, "subspace"), max_size)
    raise ValueError(f"unknown subspace action kind {kind!r}")
