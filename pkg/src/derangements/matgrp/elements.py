"""Explicit matrix realizations of prime-order class labels.

Unipotent labels are built from form-preserving root elements (transvections,
Siegel transformations, hyperbolic Eichler maps) placed on disjoint supports;
semisimple labels are built from companion blocks of eigenvalue-orbit
polynomials, each carrying an invariant form found by linear algebra, glued
by one global change of basis onto the standard form.  Everything is
assert-checked on the way out: form preservation, Jordan type or eigenvalue
orbits, and exact element order.
"""

from __future__ import annotations

from ..groupid import GroupId
from ..numth import PrimePower
from .fields import Field, make_field, embedding
from .matrices import Mat, FormSpec, standard_form, UnsupportedConstruction
from .actions import all_vectors, find_vector
from .generators import (siegel_transformation, symplectic_transvection,
                         unitary_transvection, _trace_zero, _solve_trace,
                         _basis)


class UnsupportedLabelShape(ValueError):
    pass


# ---------------------------------------------------------------------------
# unipotent labels


def _unitary_j3(form, F, n, q0):
    """An order-p element with Jordan type [J3, J1^(n-3)]: the hyperbolic
    Eichler map y -> y + f(y,u) b w + (f(y,u) c - f(y,w) conj(b)) u for an
    isotropic u, a perpendicular w of norm mu and mu b conj(b) + c + conj(c)
    = 0."""
    u = _basis(n, 0)
    v = _basis(n, n - 1)
    w = None
    for cand in all_vectors(F, n):
        if not any(cand) or cand[0] or cand[n - 1]:
            continue
        if form.value(cand, u) == 0 and form.value(cand, v) == 0 \
                and form.value(cand, cand) != 0:
            w = cand
            break
    assert w is not None
    mu = form.value(w, w)
    b = 1
    c = _solve_trace(F, q0, F.neg(F.mul(mu, F.mul(b, F.pow(b, q0)))))
    bbar = F.pow(b, q0)
    rows = []
    for idx in range(n):
        e = _basis(n, idx)
        fu = form.value(e, u)
        fw = form.value(e, w)
        row = list(e)
        for j in range(n):
            term = F.mul(fu, F.mul(b, w[j]))
            term = F.add(term, F.mul(F.sub(F.mul(fu, c), F.mul(fw, bbar)), u[j]))
            row[j] = F.add(row[j], term)
        rows.append(row)
    m = Mat(F, rows)
    assert form.preserves(m), "hyperbolic Eichler map broke the form"
    return m


def _jordan_type(m: Mat):
    """Jordan partition of a unipotent matrix."""
    F, n = m.field, m.n
    ident = Mat.identity(F, n)
    d = Mat(F, [[F.sub(a, b) for a, b in zip(r1, r2)]
                for r1, r2 in zip(m.rows, ident.rows)])
    ranks = [n]
    power = d
    while ranks[-1] > 0:
        ranks.append(power.rank())
        power = power * d
    # number of blocks of size >= k is rank(d^(k-1)) - rank(d^k)
    sizes = []
    for k in range(1, len(ranks)):
        atleast_k = ranks[k - 1] - ranks[k]
        sizes.append(atleast_k)
    partition = []
    for k in range(len(sizes), 0, -1):
        count = sizes[k - 1] - (sizes[k] if k < len(sizes) else 0)
        partition.extend([k] * count)
    return tuple(sorted(partition, reverse=True))


def _linear_unipotent(F, n, partition):
    rows = [[0] * n for _ in range(n)]
    pos = 0
    for size in partition:
        for j in range(size):
            rows[pos + j][pos + j] = 1
            if j + 1 < size:
                rows[pos + j][pos + j + 1] = 1
        pos += size
    for j in range(pos, n):
        rows[j][j] = 1
    return Mat(F, rows)


def _unitary_unipotent(form, F, n, q0, partition):
    counts = {}
    for s in partition:
        counts[s] = counts.get(s, 0) + 1
    lam = _trace_zero(F, q0)
    if set(counts) <= {1, 2}:
        # product of transvections on disjoint hyperbolic pairs
        k = counts.get(2, 0)
        if k > n // 2:
            raise UnsupportedLabelShape(f"too many 2-blocks for dimension {n}")
        m = Mat.identity(F, n)
        for j in range(k):
            m = m * unitary_transvection(form, _basis(n, j), lam)
        return m
    if sorted(partition, reverse=True) == [3] + [1] * (n - 3):
        if F.p == 2:
            raise UnsupportedLabelShape("a J3 block has order 4 in characteristic 2")
        return _unitary_j3(form, F, n, q0)
    raise UnsupportedLabelShape(f"unitary unipotent shape {partition}")


def _symplectic_unipotent(form, F, n, partition):
    counts = {}
    for s in partition:
        counts[s] = counts.get(s, 0) + 1
    if set(counts) <= {1, 2}:
        k = counts.get(2, 0)
        m = Mat.identity(F, n)
        for j in range(k):
            m = m * symplectic_transvection(form, _basis(n, j), 1)
        return m
    raise UnsupportedLabelShape(f"symplectic unipotent shape {partition}")


def _orthogonal_unipotent(form, F, n, partition):
    """Products of Siegel transformations on disjoint supports: a J3 block
    from a nonsingular direction, a J2^2 pair from a singular one."""
    if F.p == 2:
        raise UnsupportedLabelShape("even-characteristic orthogonal unipotents "
                                    "are not in the construction catalog")
    counts = {}
    for s in partition:
        counts[s] = counts.get(s, 0) + 1
    n_j3 = counts.get(3, 0)
    n_j2 = counts.get(2, 0)
    if set(counts) - {1, 2, 3} or n_j2 % 2:
        raise UnsupportedLabelShape(f"orthogonal unipotent shape {partition}")
    pairs = []  # available hyperbolic pair (u_i singular, partner)
    m_half = n // 2
    singular_basis = [i for i in range(m_half)
                      if form.q_value(_basis(n, i)) == 0]
    pair_queue = list(singular_basis)
    mat = Mat.identity(F, n)
    used = set()

    def take_pair():
        for i in pair_queue:
            if i not in used:
                used.add(i)
                return i
        raise UnsupportedLabelShape("not enough hyperbolic pairs")

    for _ in range(n_j3):
        i = take_pair()
        u = _basis(n, i)
        # a nonsingular vector perpendicular to the pair, on fresh support
        w = None
        for cand in all_vectors(F, n):
            if not any(cand):
                continue
            if any(cand[j] or cand[n - 1 - j] for j in used if j < m_half):
                continue
            support = [j for j, x in enumerate(cand) if x]
            if any(j in used or (n - 1 - j) in used for j in support):
                continue
            if form.q_value(cand) != 0 and form.value(cand, u) == 0 \
                    and form.value(cand, _basis(n, n - 1 - i)) == 0:
                w = cand
                break
        assert w is not None
        for j, x in enumerate(w):
            if x:
                used.add(min(j, n - 1 - j))
        mat = mat * siegel_transformation(form, u, w)
    for _ in range(n_j2 // 2):
        i = take_pair()
        j = take_pair()
        mat = mat * siegel_transformation(form, _basis(n, i), _basis(n, j))
    return mat


# ---------------------------------------------------------------------------
# semisimple labels


def _orbit_polynomial(F, big, emb, r, step, rep, size):
    """Coefficients (in F, low first, monic) of prod (x - zeta^(rep*step^j))."""
    zeta = big.pow(big.gen, (big.q - 1) // r)
    poly = [1]
    e = rep
    seen = []
    for _ in range(size):
        root = big.pow(zeta, e)
        poly = [big.sub(0, big.mul(poly[0], root))] + [
            big.sub(poly[k - 1], big.mul(poly[k], root)) for k in range(1, len(poly))
        ] + [1] if False else _poly_mul_linear(big, poly, root)
        seen.append(e)
        e = e * step % r
    assert len(set(seen)) == size
    back = {emb[a]: a for a in range(F.q)}
    out = []
    for c in poly:
        if c not in back:
            raise UnsupportedConstruction("orbit polynomial not over the base field")
        out.append(back[c])
    return out


def _poly_mul_linear(big, poly, root):
    # multiply poly (low first, monic) by (x - root)
    out = [0] * (len(poly) + 1)
    for k, c in enumerate(poly):
        out[k + 1] = big.add(out[k + 1], c)
        out[k] = big.sub(out[k], big.mul(c, root))
    return out


def _companion(F, poly):
    n = len(poly) - 1
    rows = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        rows[i][i + 1] = 1
    for j in range(n):
        rows[n - 1][j] = F.neg(poly[j])
    return Mat(F, rows)


def _solve_invariant_form(F, c: Mat, kind, conj_power=0):
    """A nonzero invariant form of the requested kind for the companion
    block c, by solving the linear system over F."""
    n = c.n
    if kind == "quadratic":
        unknowns = [(i, j) for i in range(n) for j in range(i, n)]
    else:
        unknowns = [(i, j) for i in range(n) for j in range(n)]
    cols = len(unknowns)
    vectors = [v for v in all_vectors(F, n) if any(v)]
    system = []
    if kind == "quadratic":
        for v in vectors:
            w = c.apply(v)
            row = []
            for (i, j) in unknowns:
                term = F.sub(F.mul(w[i], w[j]), F.mul(v[i], v[j]))
                row.append(term)
            system.append(row)
    else:
        basis = [_basis(n, i) for i in range(n)]
        imgs = [c.apply(b) for b in basis]
        for a in range(n):
            for b in range(n):
                row = []
                for (i, j) in unknowns:
                    wa = imgs[a][i]
                    wb = F.frob(imgs[b][j], conj_power) if conj_power else imgs[b][j]
                    va = basis[a][i]
                    vb = F.frob(basis[b][j], conj_power) if conj_power else basis[b][j]
                    row.append(F.sub(F.mul(wa, wb), F.mul(va, vb)))
                system.append(row)
    from .actions import nullspace

    sols = nullspace(F, tuple(tuple(r) for r in system), ncols=cols)
    for sol in sols:
        gram = [[0] * n for _ in range(n)]
        for (i, j), cf in zip(unknowns, sol):
            gram[i][j] = cf
        g = Mat(F, gram)
        if kind == "quadratic":
            polar = [[0] * n for _ in range(n)]
            for i in range(n):
                for j in range(n):
                    if i < j:
                        polar[i][j] = gram[i][j]
                    elif i > j:
                        polar[i][j] = gram[j][i]
                    else:
                        polar[i][j] = F.add(gram[i][i], gram[i][i])
            if Mat(F, polar).det() != 0:
                return g, Mat(F, polar)
        else:
            if g.det() == 0:
                continue
            if kind == "symplectic":
                ok = all(g.rows[i][i] == 0 for i in range(n)) and all(
                    g.rows[i][j] == F.neg(g.rows[j][i])
                    for i in range(n) for j in range(n))
                if ok:
                    return g, g
            if kind == "unitary":
                # hermitize: S + conj(S)^T is hermitian and stays invariant;
                # scan scalar twists for a nondegenerate result
                for scale in range(1, F.q):
                    s = [[F.mul(scale, x) for x in row] for row in g.rows]
                    h = Mat(F, [[F.add(s[i][j], F.frob(s[j][i], conj_power))
                                 for j in range(n)] for i in range(n)])
                    if h.det() == 0:
                        continue
                    conj_c = c.conj(conj_power)
                    if c * h * conj_c.transpose() == h:
                        return h, h
    raise UnsupportedConstruction(f"no invariant {kind} form for the block")


def _form_value(F, gram, kind, conj_power, u, v):
    acc = 0
    for i, ui in enumerate(u):
        if ui:
            row = gram.rows[i]
            for j, vj in enumerate(v):
                if vj and row[j]:
                    w = F.frob(vj, conj_power) if kind == "unitary" else vj
                    acc = F.add(acc, F.mul(ui, F.mul(row[j], w)))
    return acc


def _standard_basis_for(F, kind, conj_power, gram, quad, n, sign=None):
    """Rows of a base-change matrix T with T . std_gram . conj(T)^t = gram,
    i.e. a basis whose Gram matrix under the given form is the standard one.

    Returns None when the given form is not equivalent to the standard form
    of this kind/sign (the caller may rescale or flip the sign and retry).
    """
    def val(u, v):
        return _form_value(F, gram, kind, conj_power, u, v)

    def qval(v):
        acc = 0
        for i in range(n):
            if v[i]:
                for j in range(i, n):
                    if v[j] and quad.rows[i][j]:
                        acc = F.add(acc, F.mul(quad.rows[i][j],
                                               F.mul(v[i], v[j])))
        return acc

    def sub_mul(u, t, v):
        return tuple(F.sub(a, F.mul(t, b)) for a, b in zip(u, v))

    space = [tuple(v) for v in all_vectors(F, n) if any(v)]
    pairs = []
    remaining = space
    dims_left = n
    while dims_left >= 2:
        x = None
        for v in remaining:
            isotropic = qval(v) == 0 if kind == "quadratic" else val(v, v) == 0
            if isotropic and any(val(v, w) != 0 for w in remaining):
                x = v
                break
        if x is None:
            break
        y0 = next(w for w in remaining if val(x, w) != 0)
        c = val(x, y0)
        y = tuple(F.mul(F.inv(c), a) for a in y0) if kind != "unitary" else \
            tuple(F.mul(F.frob(F.inv(c), conj_power), a) for a in y0)
        assert val(x, y) == 1
        if kind == "quadratic":
            y = sub_mul(y, qval(y), x)
            assert qval(y) == 0
        elif kind == "unitary":
            t = _solve_trace(F, F.p ** conj_power, val(y, y))
            y = sub_mul(y, t, x)
            assert val(y, y) == 0
        pairs.append((x, y))
        remaining = [v for v in remaining
                     if val(v, x) == 0 and val(v, y) == 0 and
                     v not in (x, y)]
        dims_left -= 2
    # leftover anisotropic part
    left = []
    for v in remaining:
        if len(left) == dims_left:
            break
        if _independent(F, left, v):
            left.append(v)
    if len(left) != dims_left:
        return None
    # match against the standard layout
    if kind in ("unitary", "symplectic"):
        if dims_left > 1 or (dims_left == 1 and kind == "symplectic"):
            return None
        rows = [None] * n
        for idx, (x, y) in enumerate(pairs):
            rows[idx] = x
            rows[n - 1 - idx] = y
        if dims_left == 1:
            s = _norm_one_scale(F, conj_power, val(left[0], left[0]))
            if s is None:
                return None
            rows[n // 2] = tuple(F.mul(s, a) for a in left[0])
        return rows
    # quadratic: leftover of dimension 0, 1 or 2
    rows = [None] * n
    for idx, (x, y) in enumerate(pairs):
        rows[idx] = x
        rows[n - 1 - idx] = y
    if dims_left == 0:
        return rows if sign == "+" else None
    if dims_left == 1:
        v = left[0]
        c = qval(v)
        s = _square_scale(F, c)
        if s is None:
            return None
        rows[n // 2] = tuple(F.mul(s, a) for a in v)
        return rows if sign == "o" else None
    if dims_left == 2:
        std = standard_form("quadratic", F, 2, sign="-")
        cc = std.quad.rows[1][1]
        span = []
        for a in F.elements():
            for bcoef in F.elements():
                if a or bcoef:
                    span.append(tuple(F.add(F.mul(a, x), F.mul(bcoef, y))
                                      for x, y in zip(left[0], left[1])))
        for u in span:
            if qval(u) != 1:
                continue
            for w in span:
                if val(u, w) == 1 and qval(w) == cc:
                    m = len(pairs)
                    rows[m] = u
                    rows[m + 1] = w
                    return rows if sign == "-" else None
        return None
    return None


def _independent(F, vecs, v):
    from .actions import rref

    if not vecs:
        return any(v)
    before = rref(F, vecs)
    after = rref(F, list(vecs) + [v])
    return len(after) > len(before)


def _norm_one_scale(F, conj_power, c):
    """s with s * conj(s) * c = 1."""
    for s in range(1, F.q):
        if F.mul(F.mul(s, F.frob(s, conj_power)), c) == 1:
            return s
    return None


def _square_scale(F, c):
    """s with s^2 c = 1."""
    for s in range(1, F.q):
        if F.mul(F.mul(s, s), c) == 1:
            return s
    return None


def _block_for_orbit(gid, F, conj_power, r, rep, solve_form=True):
    """(matrix block, gram, quad) realizing one eigenvalue orbit."""
    q = gid.q.q
    fam = gid.family
    from ..numth import multiplicative_order

    step = pow(q, 2, r) if fam == "U" else q % r
    size = multiplicative_order(step, r)
    big = make_field(gid.q.p, F.f * size)
    emb = embedding(F, big)
    poly = _orbit_polynomial(F, big, emb, r, step, rep, size)
    c = _companion(F, poly)
    if fam == "L" or not solve_form:
        return c, None, None
    if fam == "U":
        gram, _ = _solve_invariant_form(F, c, "unitary", conj_power)
        return c, gram, None
    if fam == "S":
        gram, _ = _solve_invariant_form(F, c, "symplectic")
        return c, gram, None
    gram_q, polar = _solve_invariant_form(F, c, "quadratic")
    return c, polar, gram_q


def _pair_block(F, form_kind, c):
    """Block-diagonal (c, dual of c) on a hyperbolic pairing."""
    n = c.n
    cinv_t = c.inv().transpose()
    p_rev = Mat(F, [[1 if j == n - 1 - i else 0 for j in range(n)]
                    for i in range(n)])
    dual = p_rev * cinv_t * p_rev
    return dual


def element_from_label(label, g: GroupId, form: FormSpec | None = None):
    """A matrix of the labelled class inside the standard-form matrix group.

    Unipotent labels need valid_jordan to hold; semisimple labels carry the
    eigenvalue-orbit multiset.  The result provably preserves the standard
    form and has the exact prime order of the label.
    """
    from ..classcount import ClassLabel, valid_jordan

    n, q = g.n, g.q.q
    fam = g.family
    if fam == "U":
        F = make_field(g.q.p, 2 * g.q.f)
        if form is None:
            form = standard_form("unitary", F, n)
    elif fam == "L":
        F = make_field(g.q.p, g.q.f)
    else:
        F = make_field(g.q.p, g.q.f)
        if form is None:
            kind = "symplectic" if fam == "S" else "quadratic"
            sign = {"O+": "+", "O-": "-", "Oo": "o", "S": None}[fam]
            form = standard_form(kind, F, n, sign=sign)

    if label.kind == "unipotent":
        assert sum(label.partition) == n, "partition does not fill the dimension"
        if not valid_jordan(fam, label.partition, g.q.p):
            raise UnsupportedLabelShape(
                f"{label.partition} is not a valid order-{g.q.p} shape for {fam}")
        if fam == "L":
            m = _linear_unipotent(F, n, label.partition)
        elif fam == "U":
            m = _unitary_unipotent(form, F, n, q, label.partition)
        elif fam == "S":
            m = _symplectic_unipotent(form, F, n, label.partition)
        else:
            m = _orthogonal_unipotent(form, F, n, label.partition)
        assert _jordan_type(m) == tuple(sorted(label.partition, reverse=True))
        assert m.order() == g.q.p
        if form is not None:
            assert form.preserves(m)
        return m

    # semisimple
    r = label.r
    conj_power = g.q.f if fam == "U" else 0
    blocks = []
    paired = set()
    orbit_list = list(label.orbits)
    for idx, (orb, mult) in enumerate(orbit_list):
        if idx in paired:
            continue
        pair_idx = None
        if fam in ("S", "O+", "O-", "Oo") and orb.size % 2 == 1:
            for jdx in range(idx + 1, len(orbit_list)):
                other, omult = orbit_list[jdx]
                if jdx not in paired and other == orb.inverse() and omult == mult:
                    pair_idx = jdx
                    break
            if pair_idx is None:
                raise UnsupportedLabelShape(
                    "odd-length orbits must come in inverse pairs here")
        c, gram, quad = _block_for_orbit(g, F, conj_power, r, orb.key,
                                         solve_form=pair_idx is None)
        for _ in range(mult):
            if pair_idx is not None:
                dual = _pair_block(F, form.kind, c)
                blocks.append(("pair", c, dual))
            else:
                blocks.append(("single", c, gram, quad))
        if pair_idx is not None:
            paired.add(pair_idx)
    return _assemble_semisimple(g, F, form, blocks, label.e, r)


def _assemble_semisimple(g, F, form, blocks, e_dim, r):
    fam = g.family
    n = g.n
    if fam == "L":
        rows = [[0] * n for _ in range(n)]
        pos = 0
        for b in blocks:
            c = b[1]
            for i in range(c.n):
                for j in range(c.n):
                    rows[pos + i][pos + j] = c.rows[i][j]
            pos += c.n
        for j in range(pos, n):
            rows[j][j] = 1
        m = Mat(F, rows)
        assert m.order() == r
        return m

    kind = form.kind
    conj_power = form.half if kind == "unitary" else 0
    # build the block matrix and its block form
    total = 0
    mat_rows = []
    gram_rows = []
    quad_rows = []
    placed = []
    for b in blocks:
        if b[0] == "pair":
            _, c, dual = b
            k = c.n
            zero = [[0] * k for _ in range(k)]
            top = [list(c.rows[i]) + zero[i] for i in range(k)]
            bot = [zero[i] + list(dual.rows[i]) for i in range(k)]
            block_m = Mat(F, [r_ for r_ in top + bot])
            rev = [[1 if jj == k - 1 - ii else 0 for jj in range(k)]
                   for ii in range(k)]
            if kind == "symplectic":
                g_rows = [[0] * (2 * k) for _ in range(2 * k)]
                for ii in range(k):
                    g_rows[ii][k + (k - 1 - ii)] = 1
                    g_rows[k + (k - 1 - ii)][ii] = F.neg(1)
                placed.append((block_m, Mat(F, g_rows), None))
            else:
                g_rows = [[0] * (2 * k) for _ in range(2 * k)]
                q_rows = [[0] * (2 * k) for _ in range(2 * k)]
                for ii in range(k):
                    g_rows[ii][k + (k - 1 - ii)] = 1
                    g_rows[k + (k - 1 - ii)][ii] = 1
                    q_rows[ii][k + (k - 1 - ii)] = 1
                placed.append((block_m, Mat(F, g_rows), Mat(F, q_rows)))
            total += 2 * k
        else:
            _, c, gram, quad = b
            placed.append((c, gram, quad))
            total += c.n
    if e_dim:
        ident = Mat.identity(F, e_dim)
        if kind == "unitary":
            placed.append((ident, ident, None))
        elif kind == "symplectic":
            placed.append((ident, standard_form("symplectic", F, e_dim).gram, None))
        else:
            placed.append((ident, None, "STD_E"))
        total += e_dim
    assert total == n, f"blocks fill {total} of {n} dimensions"

    sign = form.sign if kind == "quadratic" else None
    variants = [None]
    if kind == "quadratic" and e_dim:
        variants = ["+", "-"] if e_dim % 2 == 0 else ["o"]
    last_error = None
    for e_sign in variants:
        big_m, big_gram, big_quad = _direct_sum(F, kind, placed, e_sign, e_dim)
        rows = _standard_basis_for(F, kind, conj_power, big_gram, big_quad,
                                   n, sign=sign)
        if rows is None and kind == "quadratic" and F.q % 2 == 1:
            # retry with the form rescaled by a nonsquare
            zeta = F.gen
            big_gram = Mat(F, [[F.mul(zeta, x) for x in row]
                               for row in big_gram.rows])
            if big_quad is not None:
                big_quad = Mat(F, [[F.mul(zeta, x) for x in row]
                                   for row in big_quad.rows])
            rows = _standard_basis_for(F, kind, conj_power, big_gram, big_quad,
                                       n, sign=sign)
        if rows is None:
            last_error = f"no isometry onto the standard {kind} form"
            continue
        t = Mat(F, rows)
        m = t * big_m * t.inv()
        if not form.preserves(m):
            last_error = "conjugated block matrix broke the form"
            continue
        assert m.order() == r
        return m
    raise UnsupportedConstruction(last_error or "semisimple assembly failed")


def _direct_sum(F, kind, placed, e_sign, e_dim):
    n = sum(b[0].n for b in placed)
    rows = [[0] * n for _ in range(n)]
    gram = [[0] * n for _ in range(n)]
    quad = [[0] * n for _ in range(n)]
    pos = 0
    for block_m, block_g, block_q in placed:
        k = block_m.n
        if block_q == "STD_E":
            std = standard_form("quadratic", F, k, sign=e_sign)
            block_g = std.gram
            block_q = std.quad
        for i in range(k):
            for j in range(k):
                rows[pos + i][pos + j] = block_m.rows[i][j]
                if block_g is not None:
                    gram[pos + i][pos + j] = block_g.rows[i][j]
                if kind == "quadratic" and block_q is not None:
                    quad[pos + i][pos + j] = block_q.rows[i][j]
        pos += k
    return Mat(F, rows), Mat(F, gram), (Mat(F, quad) if kind == "quadratic" else None)
