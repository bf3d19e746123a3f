"""The small-group verification corpus.

Builds explicit permutation realizations of the candidate almost elusive
actions of the small classical socles (and M11 on 12 points), together with
their relevant outer extensions, and runs derangement verdicts on each.
Socle conjugacy data is computed once per socle on a small faithful work
action and reused across all rows and extensions; class representatives
travel to each action domain as generator words.

Outer automorphisms are realized concretely: field automorphisms as
semilinear maps, diagonal automorphisms as conjugation by a non-central
isometry, and the linear duality (inverse-transpose) as the standard
point-hyperplane correspondence on a mixed point/line domain.  For U4(3)
the two candidate graph involutions are told apart by the order of their
centralizer in the socle (the one with centralizer PSp4(3), order 25920,
is the extension the classification singles out).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .groupid import group_id
from .matgrp.actions import (Action, Semilinear, normalize_point, orbit_action,
                             rref, seed_point)
from .matgrp.blackbox import perm_group
from .matgrp.generators import standard_generators
from .matgrp.matrices import Mat
from .permgrp import (DEFAULT_SEED, SocleClassData, Verdict, bsgs,
                      derangement_verdict, pinv, pmul, reduce_generators,
                      socle_class_data)
from .permgrp.classes import _dtype


from .objects import (Comp, Iota, fano_seed, frame_seed, hyperoval_seed,
                      make_object_act, nondeg2_seed, pair_seed, quadric_seed,
                      subfield_points_seed, ts_seed)


# ---------------------------------------------------------------------------
# socle contexts


@dataclass
class SocleContext:
    name: str
    field: object
    form: object
    mats: list                      # reduced matrix generators of the socle
    outer: dict                     # label -> actor
    act: object                     # object action closure
    work: Action                    # small faithful work action
    work_perms: list                # socle generator images on work domain
    order: int
    seed: int = DEFAULT_SEED
    socle_data: SocleClassData | None = None

    def classes(self, exact_limit) -> SocleClassData:
        if self.socle_data is None:
            chain = bsgs(self.work_perms, known_order=self.order)
            keep = bool(self.outer) and self.order <= exact_limit
            self.socle_data = socle_class_data(chain, seed=self.seed,
                                               exact_limit=exact_limit,
                                               keep_elements=keep)
        return self.socle_data


_ORDERS = {
    "L3(4)": 20160,
    "U4(2)": 25920,
    "U5(2)": 13685760,
    "U4(3)": 3265920,
    "Sp6(2)": 1451520,
}


def _reduced_matrix_gens(gid, order, act_kind, seed=DEFAULT_SEED):
    """Standard generators reduced to a short list, order-checked on a small
    faithful action."""
    mats, form = standard_generators(gid)
    from .matgrp.actions import subspace_action

    action = subspace_action(mats, form, act_kind)
    perms = action.perms_of(mats)
    _, words = reduce_generators(perms, order, seed=seed)
    red_mats = []
    for w in words:
        acc = Mat.identity(mats[0].field, mats[0].n)
        for s in w:
            m = mats[s - 1] if s > 0 else mats[-s - 1].inv()
            acc = acc * m
        red_mats.append(acc)
    return red_mats, form


def build_linear34(seed=DEFAULT_SEED) -> SocleContext:
    mats, _ = _reduced_matrix_gens(group_id("L", 3, 4), _ORDERS["L3(4)"],
                                   "projective", seed)
    F = mats[0].field
    act = make_object_act(F)
    # duality-stable work domain: all points followed by all lines
    points = orbit_action(mats, ("p", normalize_point(F, (1, 0, 0))), act)
    lines = orbit_action(mats, ("l", rref(F, [(0, 1, 0), (0, 0, 1)])), act)
    domain = points.domain + lines.domain
    work = Action(domain, {obj: i for i, obj in enumerate(domain)}, act)
    outer = {
        "phi": Semilinear(Mat.identity(F, 3), 1),
        "iota": Iota(F),
        "iota*phi": Comp(Iota(F), Semilinear(Mat.identity(F, 3), 1)),
    }
    return SocleContext("L3(4)", F, None, mats, outer, act, work,
                        work.perms_of(mats), _ORDERS["L3(4)"], seed)


def build_unitary(n, q0, name, seed=DEFAULT_SEED) -> SocleContext:
    mats, form = _reduced_matrix_gens(group_id("U", n, q0), _ORDERS[name],
                                      "isotropic", seed)
    F = mats[0].field
    act = make_object_act(F)
    if name == "U4(3)":
        # the totally singular 2-space action is the smallest faithful one
        work = orbit_action(mats, ts_seed(F, n, 2), act)
    else:
        work = orbit_action(mats, ("p", seed_point(form, F, n, "isotropic")), act)
    outer = {"phi": Semilinear(Mat.identity(F, n), 1)}
    if name == "U4(3)":
        zeta = F.gen
        d = [[0] * n for _ in range(n)]
        d[0][0] = zeta
        d[1][1] = d[2][2] = 1
        d[3][3] = F.inv(F.pow(zeta, 3))
        dmat = Mat(F, d)
        assert form.preserves(dmat)
        outer["delta2"] = dmat * dmat
        outer["delta*phi"] = Comp(Semilinear(Mat.identity(F, n), 1), dmat)
    return SocleContext(name, F, form, mats, outer, act, work,
                        work.perms_of(mats), _ORDERS[name], seed)


def build_symplectic62(seed=DEFAULT_SEED) -> SocleContext:
    mats, form = _reduced_matrix_gens(group_id("S", 6, 2), _ORDERS["Sp6(2)"],
                                      "projective", seed)
    F = mats[0].field
    act = make_object_act(F)
    work = orbit_action(mats, ("p", seed_point(form, F, 6, "projective")), act)
    return SocleContext("Sp6(2)", F, form, mats, {}, act, work,
                        work.perms_of(mats), _ORDERS["Sp6(2)"], seed)


_BUILDERS = {
    "L3(4)": build_linear34,
    "U4(2)": lambda seed=DEFAULT_SEED: build_unitary(4, 2, "U4(2)", seed),
    "U5(2)": lambda seed=DEFAULT_SEED: build_unitary(5, 2, "U5(2)", seed),
    "U4(3)": lambda seed=DEFAULT_SEED: build_unitary(4, 3, "U4(3)", seed),
    "Sp6(2)": build_symplectic62,
}


def has_symplectic_type_involution(verdict: Verdict, socle_order: int) -> bool:
    """Whether the extension's outer coset contains an involution whose socle
    centralizer is PSp4(3): such an involution sits in an outer class of size
    exactly |G0| / 25920."""
    target = socle_order // 25920
    return any(c.coset > 0 and c.element_order == 2 and c.class_size == target
               for c in verdict.classes)


# ---------------------------------------------------------------------------
# corpus rows


@dataclass
class CorpusRow:
    socle: str
    subgroup: str
    seed_builder: object            # SocleContext -> seed object
    extensions: dict                # label -> expected verdict descriptor
    # expected: "AE:<r>" | "not-AE" | "absent-or-not-AE" | "gamma:AE:7"


def corpus_rows():
    return [
        CorpusRow("L3(4)", "C1 GL1+GL2 (point-hyperplane pair)",
                  lambda c: pair_seed(c.field, 3),
                  {"1": "not-AE", "iota*phi": "AE:7", "phi": "not-AE",
                   "iota": "AE:7", "iota,phi": "AE:7"}),
        CorpusRow("L3(4)", "C5 GL3(2) (subplane)",
                  lambda c: fano_seed(c.field),
                  {"1": "not-AE", "iota*phi": "AE:5", "phi": "AE:5",
                   "iota": "not-AE", "iota,phi": "AE:5"}),
        CorpusRow("L3(4)", "S A6 (hyperoval)",
                  lambda c: hyperoval_seed(c.field),
                  {"1": "not-AE", "iota*phi": "absent-or-not-AE",
                   "phi": "absent-or-not-AE", "iota": "AE:7",
                   "iota,phi": "absent-or-not-AE"}),
        CorpusRow("U5(2)", "C1 GU1+GU4 (nondegenerate point)",
                  lambda c: ("p", seed_point(c.form, c.field, 5, "nondegenerate")),
                  {"1": "not-AE", "phi": "AE:11"}),
        CorpusRow("U5(2)", "C2 GU1 wr S5 (orthogonal frame)",
                  lambda c: frame_seed(c.form, c.field, 5, 5),
                  {"1": "not-AE", "phi": "AE:11"}),
        CorpusRow("U4(3)", "C1 P2 (totally singular 2-space)",
                  lambda c: ts_seed(c.field, 4, 2),
                  {"1": "not-AE", "delta2": "not-AE", "phi": "gamma?",
                   "delta*phi": "gamma?"}),
        CorpusRow("U4(2)", "C1 P1 (isotropic point)",
                  lambda c: ("p", seed_point(c.form, c.field, 4, "isotropic")),
                  {"1": "AE:5", "phi": "AE:5"}),
        CorpusRow("U4(2)", "C2 GU1 wr S4 (orthogonal frame)",
                  lambda c: frame_seed(c.form, c.field, 4, 4),
                  {"1": "AE:5", "phi": "AE:5"}),
        CorpusRow("U4(2)", "C5 Sp4(2) (subfield geometry)",
                  lambda c: subfield_points_seed(c.field, 4),
                  {"1": "not-AE", "phi": "AE:3"}),
        CorpusRow("Sp6(2)", "C1 Sp2+Sp4 (nondegenerate 2-space)",
                  lambda c: nondeg2_seed(c.field, 6),
                  {"1": "AE:7"}),
        CorpusRow("Sp6(2)", "C8 O6+ (plus-type quadratic form)",
                  lambda c: quadric_seed(c.field, 6, "+"),
                  {"1": "AE:3"}),
        CorpusRow("Sp6(2)", "C8 O6- (minus-type quadratic form)",
                  lambda c: quadric_seed(c.field, 6, "-"),
                  {"1": "AE:7"}),
    ]


@dataclass
class RowResult:
    socle: str
    subgroup: str
    extension: str
    expected: str
    degree: int | None
    verdict: Verdict | None
    status: str          # "ok" or "absent"
    omega_gens: list | None = None

    def agrees(self) -> bool:
        if self.expected.startswith("AE:"):
            return (self.status == "ok"
                    and self.verdict.tag == "almost_elusive"
                    and self.verdict.r == int(self.expected[3:]))
        if self.expected == "Elusive":
            return self.status == "ok" and self.verdict.tag == "elusive"
        if self.expected == "not-AE":
            return self.status == "ok" and self.verdict.tag != "almost_elusive"
        if self.expected == "absent-or-not-AE":
            return (self.status == "absent"
                    or self.verdict.tag != "almost_elusive")
        raise ValueError(f"unresolved expectation {self.expected!r}")


def _extension_actors(ctx, label):
    if label == "1":
        return []
    return [ctx.outer[part] for part in label.split(",")]


def _extension_order(ctx, chain, actors):
    """Order of the quotient the actors generate on top of the socle."""
    if not actors:
        return 1
    perms = [ctx.work.perm_of(a) for a in actors]
    reps = [tuple(range(ctx.work.degree))]
    i = 0
    while i < len(reps):
        for w in perms:
            c = pmul(reps[i], w)
            if not any(chain.contains(pmul(c, pinv(r))) for r in reps):
                reps.append(c)
        i += 1
    return len(reps)


def run_row(ctx: SocleContext, row: CorpusRow, exact_limit=10**7):
    """Verdicts for one (socle, stabilizer-type) row across its extensions."""
    seed_obj = row.seed_builder(ctx)
    omega = orbit_action(ctx.mats, seed_obj, ctx.act)
    omega_socle = omega.perms_of(ctx.mats)
    data = ctx.classes(exact_limit)

    verdicts: dict[str, Verdict | None] = {}
    gen_lists: dict[str, list] = {}
    for label in row.extensions:
        actors = _extension_actors(ctx, label)
        if any(ctx.act(a, seed_obj) not in omega.index for a in actors):
            verdicts[label] = None
            continue
        omega_gens = list(omega_socle) + [omega.perm_of(a) for a in actors]
        gen_lists[label] = omega_gens
        work_gens = list(ctx.work_perms) + [ctx.work.perm_of(a) for a in actors]
        ext_order = _extension_order(ctx, data.chain, actors)
        verdicts[label] = derangement_verdict(
            omega_gens, socle_count=len(omega_socle), work_gens=work_gens,
            seed=ctx.seed, known_socle_order=ctx.order,
            known_full_order=ctx.order * ext_order, exact_limit=exact_limit,
            socle_data=data)

    expectations = dict(row.extensions)
    unresolved = [lbl for lbl, e in expectations.items() if e == "gamma?"]
    if unresolved:
        # the distinguished graph extension is the one whose outer coset
        # carries an involution centralized by a PSp4(3)
        marked = [lbl for lbl in unresolved
                  if verdicts[lbl] is not None
                  and has_symplectic_type_involution(verdicts[lbl], ctx.order)]
        assert len(marked) == 1, (marked, unresolved)
        for lbl in unresolved:
            expectations[lbl] = "AE:7" if lbl == marked[0] else "not-AE"

    results = []
    for label, expected in expectations.items():
        v = verdicts[label]
        if v is None:
            results.append(RowResult(ctx.name, row.subgroup, label, expected,
                                     None, None, "absent"))
        else:
            results.append(RowResult(ctx.name, row.subgroup, label, expected,
                                     omega.degree, v, "ok",
                                     omega_gens=gen_lists[label]))
    return results


def run_corpus(seed=DEFAULT_SEED, exact_limit=10**7, socles=None):
    """All corpus rows plus M11 on 12 points; returns RowResult list."""
    results = []
    wanted = set(socles) if socles else None
    by_socle: dict[str, list[CorpusRow]] = {}
    for row in corpus_rows():
        by_socle.setdefault(row.socle, []).append(row)
    for socle, socle_rows in by_socle.items():
        if wanted and socle not in wanted:
            continue
        ctx = _BUILDERS[socle](seed)
        for row in socle_rows:
            results.extend(run_row(ctx, row, exact_limit))
        ctx.socle_data = None   # release the class sets
    if wanted is None or "M11" in wanted:
        gens, order = perm_group("M11_12")
        v = derangement_verdict(list(gens), seed=seed,
                                known_socle_order=order,
                                exact_limit=exact_limit)
        results.append(RowResult("M11", "L2(11) cosets (12 points)", "1",
                                 "Elusive", 12, v, "ok",
                                 omega_gens=list(gens)))
    return results
