"""Canonically labelled geometric objects and their seeds.

Shared by the brute-force corpus and the witness verifier: tagged point and
line labels, compound objects (pairs, frames, subgeometries, quadric point
sets), the object action of matrices / semilinear maps / the linear duality,
and deterministic seed constructors for each stabilizer type.
"""

from __future__ import annotations

from .matgrp.actions import (Semilinear, all_vectors, normalize_point,
                             nullspace, rref, seed_point)
from .matgrp.matrices import Mat, standard_form


class Iota:
    """Point-hyperplane duality of PG(n-1, q) on tagged point/line labels,
    realizing the inverse-transpose outer automorphism of a linear group."""

    def __init__(self, field):
        self.field = field


class Comp:
    """Composition of actors, applied left to right."""

    def __init__(self, *actors):
        self.actors = actors


def _act_leaf(actor, obj, F):
    if isinstance(obj, tuple) and obj and obj[0] in ("p", "l"):
        tag, val = obj
        if isinstance(actor, Iota):
            if tag == "p":
                return ("l", nullspace(F, (val,)))
            return ("p", normalize_point(F, nullspace(F, val)[0]))
        if tag == "p":
            return ("p", normalize_point(F, actor.apply(val)))
        return ("l", rref(F, [actor.apply(r) for r in val]))
    if isinstance(actor, Iota):
        raise ValueError("duality needs tagged point/line objects")
    if isinstance(obj, tuple) and obj and isinstance(obj[0], tuple):
        return rref(F, [actor.apply(r) for r in obj])
    return normalize_point(F, actor.apply(obj))


def make_object_act(F):
    def act_one(actor, obj):
        if isinstance(obj, frozenset):
            return frozenset(act_one(actor, x) for x in obj)
        if isinstance(obj, tuple) and obj and obj[0] == "pair":
            parts = obj[1:]
            if isinstance(actor, Iota):
                # duality reverses the flag: (point, hyperplane) stays typed
                parts = tuple(reversed(parts))
            return ("pair",) + tuple(act_one(actor, x) for x in parts)
        return _act_leaf(actor, obj, F)

    def act(actor, obj):
        if isinstance(actor, Comp):
            for a in actor.actors:
                obj = act(a, obj)
            return obj
        return act_one(actor, obj)

    return act


# ---------------------------------------------------------------------------
# seed construction


def frame_seed(form, F, n, size):
    """Pairwise orthogonal nondegenerate points (the frame a wreathed
    GU_1-stabilizer fixes)."""
    chosen = []
    for v in all_vectors(F, n):
        if any(v) and form.value(v, v) != 0 and \
                all(form.value(v, w) == 0 for w in chosen):
            chosen.append(normalize_point(F, v))
            if len(chosen) == size:
                return frozenset(("p", v) for v in chosen)
    raise ValueError("no orthogonal frame found")


def subfield_points_seed(F, n):
    """Points of the prime-subfield subgeometry."""
    return frozenset(("p", normalize_point(F, v)) for v in all_vectors(F, n)
                     if any(v) and all(x < F.p for x in v))


def fano_seed(F, n=3):
    """Self-dual encoding of the prime-subfield subplane: its points plus
    its lines."""
    pts = sorted({normalize_point(F, v) for v in all_vectors(F, n)
                  if any(v) and all(x < F.p for x in v)})
    lines = {rref(F, [pts[i], pts[j]])
             for i in range(len(pts)) for j in range(i + 1, len(pts))}
    return frozenset({("p", v) for v in pts} | {("l", w) for w in lines})


def hyperoval_seed(F):
    """Conic plus nucleus in PG(2, 4), encoded self-dually with its six
    external lines."""
    assert F.q == 4
    pts = {("p", normalize_point(F, (1, t, F.mul(t, t)))) for t in F.elements()}
    pts.add(("p", (0, 0, 1)))
    pts.add(("p", (0, 1, 0)))  # nucleus of the conic
    assert len(pts) == 6
    points = sorted({normalize_point(F, v) for v in all_vectors(F, 3) if any(v)})
    lines = sorted({rref(F, [points[i], points[j]])
                    for i in range(len(points)) for j in range(i + 1, len(points))})
    assert len(lines) == 21

    def on_line(p, line):
        return rref(F, list(line) + [p]) == line

    external = {("l", L) for L in lines if not any(on_line(p[1], L) for p in pts)}
    assert len(external) == 6
    return frozenset(pts | external)


def quadric_seed(F, n, sign):
    """Singular points of the standard quadratic form polarizing to the
    standard symplectic form (q even)."""
    form = standard_form("quadratic", F, n, sign=sign)
    return frozenset(("p", normalize_point(F, v)) for v in all_vectors(F, n)
                     if any(v) and form.q_value(v) == 0)


def pair_seed(F, n):
    """A (point, complementary hyperplane) pair for the linear GL_1 + GL_(n-1)
    stabilizer."""
    point = ("p", normalize_point(F, tuple(1 if i == 0 else 0 for i in range(n))))
    hyper = ("l", rref(F, [tuple(1 if j == i else 0 for j in range(n))
                           for i in range(1, n)]))
    return ("pair", point, hyper)


def ts_seed(F, n, k):
    return rref(F, [tuple(1 if j == i else 0 for j in range(n)) for i in range(k)])


def nondeg2_seed(F, n):
    return rref(F, [tuple(1 if j == 0 else 0 for j in range(n)),
                    tuple(1 if j == n - 1 else 0 for j in range(n))])


