"""Brute-force verification of derangement witnesses.

verify_witness builds the witness element and the stabilizer-type action of
a record at a concrete instantiation, then simply counts fixed points: the
record passes when the element moves every point of the domain.
"""

from __future__ import annotations

from ..groupid import GroupId, group_id
from ..matgrp.actions import (Action, normalize_point, nullspace, orbit_action,
                              rref, all_vectors, subspace_action)
from ..matgrp.elements import element_from_label
from ..matgrp.fields import make_field, embedding
from ..matgrp.generators import standard_generators
from ..matgrp.matrices import Mat, standard_form
from ..objects import make_object_act, pair_seed, quadric_seed, subfield_points_seed


class WitnessActionError(ValueError):
    pass


def _perp_type(form, F, v):
    """Type of the quadratic space perpendicular to a nonsingular point."""
    n = len(v)
    perp = nullspace(F, (tuple(form.value(_e(n, i), v) for i in range(n)),))
    k = len(perp)
    singular = 0
    for coeffs in all_vectors(F, k):
        if any(coeffs):
            w = [0] * n
            for c, b in zip(coeffs, perp):
                for j in range(n):
                    w[j] = F.add(w[j], F.mul(c, b[j]))
            if form.q_value(tuple(w)) == 0:
                singular += 1
    q = F.q
    m = k // 2
    if k % 2 == 1:
        return "o"
    plus = (q ** (m - 1) + 1) * (q ** m - 1)
    minus = (q ** (m - 1) - 1) * (q ** m + 1)
    if singular == plus:
        return "+"
    assert singular == minus, (singular, plus, minus)
    return "-"


def _e(n, i):
    return tuple(1 if j == i else 0 for j in range(n))


def _nonsingular_seed_with_perp(form, F, n, target):
    for v in all_vectors(F, n):
        if any(v) and form.q_value(v) != 0 and _perp_type(form, F, v) == target:
            return normalize_point(F, v)
    raise WitnessActionError(f"no nonsingular point with {target} perp")


def _plane_type(form, F, u, w):
    for a in F.elements():
        for b in F.elements():
            if a or b:
                v = tuple(F.add(F.mul(a, x), F.mul(b, y)) for x, y in zip(u, w))
                if form.q_value(v) == 0:
                    return "+"
    return "-"


def _nd2_seed(form, F, n, target=None):
    if form.kind == "symplectic":
        return rref(F, [_e(n, 0), _e(n, n - 1)])
    if target in (None, "+"):
        return rref(F, [_e(n, 0), _e(n, n - 1)])
    # search a definite 2-space
    vecs = [v for v in all_vectors(F, n) if any(v) and form.q_value(v) != 0]
    for i, u in enumerate(vecs):
        for w in vecs:
            if w == u:
                continue
            if form.value(u, w) == 0 and len(rref(F, [u, w])) == 2:
                if _plane_type(form, F, u, w) == "-":
                    return rref(F, [u, w])
    raise WitnessActionError("no definite 2-space found")


def extension_structure_seed(F, n, k, form=None):
    """The set of 1-spaces of a degree-k extension-field structure on the
    natural module (the trace-form model when a symplectic form is given,
    moved onto the standard form), as a frozenset of subspace labels."""
    m = n // k
    assert m * k == n
    big = make_field(F.p, F.f * k)
    emb = embedding(F, big)
    back = {emb[a]: a for a in range(F.q)}

    def down(x):
        if x not in back:
            raise WitnessActionError("trace landed outside the base field")
        return back[x]

    def trace(x):
        acc = 0
        cur = x
        for _ in range(k):
            acc = big.add(acc, cur)
            cur = big.pow(cur, F.q)
        return acc

    # model coordinates: (block i, power j) encodes omega^j e'_i
    if form is None:
        t_mat = Mat.identity(F, n)
    else:
        if form.kind != "symplectic" or m % 2:
            raise WitnessActionError("only symplectic extension structures "
                                     "are in the catalog")
        gram = [[0] * n for _ in range(n)]
        for i1 in range(m):
            i2 = m - 1 - i1
            sign = 1 if i1 < i2 else -1
            for j1 in range(k):
                for j2 in range(k):
                    tr = down(trace(big.pow(big.gen, j1 + j2)))
                    gram[i1 * k + j1][i2 * k + j2] = tr if sign == 1 else F.neg(tr)
        from ..matgrp.elements import _standard_basis_for

        rows = _standard_basis_for(F, "symplectic", 0, Mat(F, gram), None, n)
        if rows is None:
            raise WitnessActionError("extension-form standardization failed")
        t_mat = Mat(F, rows)
    # scalar action: multiplication by omega, one companion block per e'_i
    from ..matgrp.elements import _companion

    comp = _companion(F, _minimal_poly(big, F, k))
    s_rows = [[0] * n for _ in range(n)]
    for i in range(m):
        for a in range(k):
            for b in range(k):
                s_rows[i * k + a][i * k + b] = comp.rows[a][b]
    s_model = Mat(F, s_rows)
    scalar = t_mat * s_model * t_mat.inv()
    if form is not None:
        # scalars of a compatible extension structure are self-adjoint
        basis = [_e(n, i) for i in range(n)]
        for a in range(n):
            for b in range(n):
                assert form.value(scalar.apply(basis[a]), basis[b]) == \
                    form.value(basis[a], scalar.apply(basis[b]))
    members = set()
    seen = set()
    for v in all_vectors(F, n):
        v = tuple(v)
        if not any(v) or v in seen:
            continue
        basis = [v]
        cur = v
        for _ in range(k - 1):
            cur = scalar.apply(cur)
            basis.append(cur)
        member = rref(F, basis)
        assert len(member) == k, "extension orbit is not k-dimensional"
        members.add(member)
        for coeffs in all_vectors(F, k):
            if any(coeffs):
                vec = [0] * n
                for c, b in zip(coeffs, basis):
                    if c:
                        for j in range(n):
                            vec[j] = F.add(vec[j], F.mul(c, b[j]))
                seen.add(tuple(vec))
    assert len(members) == (F.q**n - 1) // (F.q**k - 1)
    return frozenset(members)


def _minimal_poly(big, F, k):
    """Minimal polynomial of big's generator over F (low first, monic),
    encoded over F."""
    emb = embedding(F, big)
    gen = big.gen
    powers = [1]
    for _ in range(k):
        powers.append(big.mul(powers[-1], gen))
    for coeffs in all_vectors(F, k):
        acc = 0
        for c, pw in zip(coeffs, powers[:k]):
            if c:
                acc = big.add(acc, big.mul(emb[c], pw))
        if acc == big.neg(powers[k]):
            return list(coeffs) + [1]
    raise WitnessActionError("no minimal polynomial found")


def _form_orbit_action(mats, F, kind):
    """Action on scalar-classes of invariant forms (symplectic Grams or
    quadratic upper matrices)."""
    n = mats[0].n
    if kind == "sp":
        seed = standard_form("symplectic", F, n).gram
        def transform(g, gram):
            return g * gram * g.transpose()
    else:
        sign = "o" if n % 2 else "+"
        seed = standard_form("quadratic", F, n, sign=sign).quad
        def transform(g, qmat):
            msq = g * qmat * g.transpose()
            rows = [[0] * n for _ in range(n)]
            for i in range(n):
                rows[i][i] = msq.rows[i][i]
                for j in range(i + 1, n):
                    rows[i][j] = F.add(msq.rows[i][j], msq.rows[j][i])
            return Mat(F, rows)

    def normalize(mat):
        piv = next((x for row in mat.rows for x in row if x), None)
        if piv == 1:
            return mat.rows
        c = F.inv(piv)
        return tuple(tuple(F.mul(c, x) for x in row) for row in mat.rows)

    def act(g, label):
        return normalize(transform(g, Mat(F, label)))

    return orbit_action(mats, normalize(seed), act)


def witness_action(record, gens, form, F, n, q) -> Action:
    spec = record.action
    act = make_object_act(F)
    if spec == "proj":
        return subspace_action(gens, form, "projective")
    if spec == "iso":
        return subspace_action(gens, form, "isotropic")
    if spec == "nondeg":
        return subspace_action(gens, form, "nondegenerate")
    if spec == "nonsing":
        return subspace_action(gens, form, "nondegenerate")
    if spec.startswith("nonsing:"):
        seed = _nonsingular_seed_with_perp(form, F, n, spec[-1])
        return orbit_action(gens, seed, lambda g, v: normalize_point(F, g.apply(v)))
    if spec.startswith("ts:"):
        return subspace_action(gens, form, "totally_singular", k=int(spec[3:]))
    if spec == "nd2" or spec.startswith("nd2:"):
        target = spec[4:] if ":" in spec else None
        seed = _nd2_seed(form, F, n, target)
        return orbit_action(gens, seed,
                            lambda g, s: rref(F, [g.apply(r) for r in s]))
    if spec == "pairPH":
        return orbit_action(gens, pair_seed(F, n), act)
    if spec.startswith("spread:"):
        k = int(spec[7:])
        seed = extension_structure_seed(F, n, k, form)
        return orbit_action(gens, seed, act)
    if spec == "subfieldpts":
        return orbit_action(gens, subfield_points_seed(F, n), act)
    if spec.startswith("forms:"):
        return _form_orbit_action(gens, F, spec[6:])
    if spec.startswith("quadric:"):
        return orbit_action(gens, quadric_seed(F, n, spec[-1]), act)
    raise WitnessActionError(f"unknown action template {spec!r}")


def verify_witness(record, instantiation: GroupId | None = None,
                   max_degree=10**5) -> bool:
    """Build the record's witness element and action at the given (or the
    record's own) instantiation and check it moves every point."""
    from ..witnessdata import expand_element

    if instantiation is None:
        if record.instance is None:
            raise WitnessActionError(f"record {record.case_id} has no instance")
        instantiation = group_id(record.family, *record.instance)
    g = instantiation
    n, q = g.n, g.q.q
    mats, form = standard_generators(g)
    F = mats[0].field
    label = expand_element(record.element, g.family, n, q)
    elem = element_from_label(label, g, form)
    action = witness_action(record, mats, form, F, n, q)
    if action.degree > max_degree:
        raise WitnessActionError(f"degree {action.degree} exceeds {max_degree}")
    perm = action.perm_of(elem)
    return all(perm[i] != i for i in range(len(perm)))
