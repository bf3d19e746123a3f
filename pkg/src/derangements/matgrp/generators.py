"""Form-preserving generating sets for the small classical matrix groups.

The sets built here favour robustness over minimality: root elements,
transvections and Siegel transformations in enough directions to generate,
each asserted to preserve the standard form at construction time.  Exact
group orders are verified downstream by stabilizer chains on a faithful
action; callers that care about generator count reduce the sets there.
"""

from __future__ import annotations

from ..groupid import GroupId
from .fields import make_field
from .matrices import Mat, FormSpec, standard_form, UnsupportedConstruction

# catalog bounds; generic constructions work a bit beyond the contract
_MAX_LINEAR = (10, 9)      # n <= 10, q <= 9
_MAX_UNITARY = (8, 5)      # n <= 8, q0 <= 5
_MAX_SYMPLECTIC = (10, 9)
_MAX_ORTHOGONAL = (8, 3)


def _basis(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def _elementary(F, n, i, j, lam):
    rows = [[1 if a == b else 0 for b in range(n)] for a in range(n)]
    rows[i][j] = lam
    return Mat(F, rows)


def _perm_mat(F, n, images, signs=None):
    rows = [[0] * n for _ in range(n)]
    for i, j in enumerate(images):
        rows[i][j] = 1 if signs is None else signs[i]
    return Mat(F, rows)


def sl_generators(n, q):
    """Generators of SL_n(q)."""
    F = make_field(*_pf(q))
    gens = [_elementary(F, n, 0, 1, 1)]
    if F.q > 2:
        gens.append(_elementary(F, n, 0, 1, F.gen))
        d = [[0] * n for _ in range(n)]
        for i in range(n):
            d[i][i] = 1
        d[0][0] = F.gen
        d[1][1] = F.inv(F.gen)
        gens.append(Mat(F, d))
    # cycle e_0 -> e_1 -> ... -> e_{n-1} -> (-1)^(n-1) e_0
    images = [(i + 1) % n for i in range(n)]
    signs = [1] * n
    signs[n - 1] = F.neg(1) if n % 2 == 0 else 1
    gens.append(_perm_mat(F, n, images, signs))
    for g in gens:
        assert g.det() == 1
    return gens, None


def unitary_transvection(form: FormSpec, v, lam):
    """x -> x + lam * f(x, v) * v for isotropic v with lam + conj(lam) = 0."""
    F = form.field
    assert form.value(v, v) == 0
    assert F.add(lam, form.conj(lam)) == 0
    n = len(v)
    rows = []
    for i in range(n):
        e = _basis(n, i)
        c = F.mul(lam, form.value(e, v))
        rows.append([F.add(e[j], F.mul(c, v[j])) for j in range(n)])
    m = Mat(F, rows)
    assert form.preserves(m)
    return m


def _trace_zero(F, q0):
    """A nonzero lam with lam + lam^q0 = 0."""
    if q0 % 2 == 0:
        return 1
    lam = F.pow(F.gen, (q0 + 1) // 2)
    assert F.add(lam, F.pow(lam, q0)) == 0
    return lam


def _solve_trace(F, q0, target):
    """Least c with c + c^q0 = target."""
    for c in F.elements():
        if F.add(c, F.pow(c, q0)) == target:
            return c
    raise AssertionError


def su_generators(n, q0):
    """Generators of SU_n(q0), preserving the antidiagonal hermitian form
    over GF(q0^2)."""
    p, f0 = _pf(q0)
    F = make_field(p, 2 * f0)
    form = standard_form("unitary", F, n)
    q = q0
    lam = _trace_zero(F, q)
    gens = [
        unitary_transvection(form, _basis(n, 0), lam),
        unitary_transvection(form, _basis(n, n - 1), lam),
    ]
    if F.q > 4:
        lam2 = F.mul(lam, F.pow(F.gen, q + 1))  # another trace-zero value
        gens.append(unitary_transvection(form, _basis(n, 0), lam2))
    m = n // 2
    if m >= 2:
        v = tuple(F.add(a, b) for a, b in zip(_basis(n, 0), _basis(n, 1)))
        gens.append(unitary_transvection(form, v, lam))
        # Levi mixer: e_0 += t e_1, paired with e_{n-2} -= conj(t) e_{n-1}
        for t in (1, F.gen):
            rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            rows[0][1] = t
            rows[n - 2][n - 1] = F.neg(F.pow(t, q))
            gens.append(Mat(F, rows))
        # cycle the hyperbolic pairs
        images = list(range(n))
        for i in range(m):
            images[i] = (i + 1) % m
            images[n - 1 - i] = n - 1 - ((i + 1) % m)
        gens.append(_perm_mat(F, n, images))
    # torus
    a = F.gen
    d = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    if n == 2:
        a0 = F.pow(F.gen, q + 1)  # generator of the norm-one... of GF(q0)*
        d[0][0] = a0
        d[1][1] = F.inv(a0)
    elif n == 3:
        d[0][0] = a
        d[1][1] = F.pow(a, q - 1)
        d[2][2] = F.inv(F.pow(a, q))
    else:
        d[0][0] = a
        d[1][1] = F.pow(a, q)
        d[n - 2][n - 2] = F.inv(a)
        d[n - 1][n - 1] = F.inv(F.pow(a, q))
    gens.append(Mat(F, d))
    if n % 2 == 1:
        # SU_3 piece on (e_0, e_mid, e_{n-1})
        mid = n // 2
        for b in (1, F.gen):
            c = _solve_trace(F, q, F.neg(F.mul(b, F.pow(b, q))))
            rows = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
            rows[n - 1][mid] = b
            rows[n - 1][0] = c
            rows[mid][0] = F.neg(F.pow(b, q))
            gens.append(Mat(F, rows))
            gens.append(Mat(F, rows).transpose())
    out = []
    for g in gens:
        assert form.preserves(g), g
        assert g.det() == 1, g
        if not g.is_identity():
            out.append(g)
    return out, form


def symplectic_transvection(form: FormSpec, a, lam):
    """x -> x + lam * f(x, a) * a; always an isometry of the alternating
    form."""
    F = form.field
    n = len(a)
    rows = []
    for i in range(n):
        e = _basis(n, i)
        c = F.mul(lam, form.value(e, a))
        rows.append([F.add(e[j], F.mul(c, a[j])) for j in range(n)])
    m = Mat(F, rows)
    assert form.preserves(m)
    return m


def sp_generators(n, q):
    """Generators of Sp_n(q) for the antidiagonal alternating form."""
    F = make_field(*_pf(q))
    form = standard_form("symplectic", F, n)
    m = n // 2
    dirs = [_basis(n, 0), _basis(n, n - 1),
            tuple(F.add(a, b) for a, b in zip(_basis(n, 0), _basis(n, n - 1)))]
    if m >= 2:
        dirs.append(tuple(F.add(a, b) for a, b in zip(_basis(n, 0), _basis(n, 1))))
        dirs.append(tuple(F.add(a, b) for a, b in zip(_basis(n, 0), _basis(n, n - 2))))
        dirs.append(tuple(F.add(a, b) for a, b in zip(_basis(n, 1), _basis(n, n - 1))))
    lams = [1] if F.q == 2 else [1, F.gen]
    gens = [symplectic_transvection(form, a, lam) for a in dirs for lam in lams]
    if m >= 2:
        images = list(range(n))
        for i in range(m):
            images[i] = (i + 1) % m
            images[n - 1 - i] = n - 1 - ((i + 1) % m)
        gens.append(_perm_mat(F, n, images))
    out = []
    for g in gens:
        assert form.preserves(g) and g.det() == 1
        if not g.is_identity():
            out.append(g)
    return out, form


def siegel_transformation(form: FormSpec, u, v):
    """x -> x + B(x,u) v - B(x,v) u - Q(v) B(x,u) u for singular u and
    v in the radical-complement of u; lies in the kernel of the spinor
    norm."""
    F = form.field
    assert form.q_value(u) == 0 and form.value(u, v) == 0
    n = len(u)
    qv = form.q_value(v)
    rows = []
    for i in range(n):
        e = _basis(n, i)
        bu = form.value(e, u)
        bv = form.value(e, v)
        row = []
        for j in range(n):
            x = e[j]
            x = F.add(x, F.mul(bu, v[j]))
            x = F.sub(x, F.mul(bv, u[j]))
            x = F.sub(x, F.mul(qv, F.mul(bu, u[j])))
            row.append(x)
        rows.append(row)
    m = Mat(F, rows)
    assert form.preserves(m), (u, v)
    return m


def omega_generators(n, q, sign):
    """Generators of Omega_n^sign(q) via Siegel transformations."""
    F = make_field(*_pf(q))
    form = standard_form("quadratic", F, n, sign=sign)
    basis = [_basis(n, i) for i in range(n)]
    singular = [v for v in basis if form.q_value(v) == 0]
    for i in range(n):
        for j in range(i + 1, n):
            v = tuple(F.add(a, b) for a, b in zip(basis[i], basis[j]))
            if form.q_value(v) == 0:
                singular.append(v)
    gens = []
    seen = set()
    for u in singular:
        for w in basis:
            if form.value(u, w) == 0 and not _proportional(F, u, w):
                g = siegel_transformation(form, u, w)
                if not g.is_identity() and g.rows not in seen:
                    seen.add(g.rows)
                    gens.append(g)
    if not gens:
        raise UnsupportedConstruction(f"no Siegel generators for O{sign}_{n}({q})")
    return gens, form


def _proportional(F, u, w):
    piv = next((i for i, x in enumerate(u) if x), None)
    if piv is None or w[piv] == 0:
        return False
    c = F.mul(w[piv], F.inv(u[piv]))
    return all(w[i] == F.mul(c, u[i]) for i in range(len(u)))


def _pf(q):
    from ..numth import PrimePower

    pp = PrimePower.of(q)
    return pp.p, pp.f


def standard_generators(g: GroupId):
    """Matrix generators (and the preserved FormSpec, None for linear) for
    the groups in the construction catalog."""
    n, q = g.n, g.q.q
    if g.family == "L":
        if (n, q) > _MAX_LINEAR:
            raise UnsupportedConstruction(f"{g} outside construction catalog")
        return sl_generators(n, q)
    if g.family == "U":
        if n > _MAX_UNITARY[0] or q > _MAX_UNITARY[1]:
            raise UnsupportedConstruction(f"{g} outside construction catalog")
        return su_generators(n, q)
    if g.family == "S":
        if n > _MAX_SYMPLECTIC[0] or q > _MAX_SYMPLECTIC[1]:
            raise UnsupportedConstruction(f"{g} outside construction catalog")
        return sp_generators(n, q)
    if g.family in ("O+", "O-", "Oo"):
        if n > _MAX_ORTHOGONAL[0] or q > _MAX_ORTHOGONAL[1]:
            raise UnsupportedConstruction(f"{g} outside construction catalog")
        sign = {"O+": "+", "O-": "-", "Oo": "o"}[g.family]
        return omega_generators(n, q, sign)
    raise UnsupportedConstruction(f"unknown family {g.family}")
