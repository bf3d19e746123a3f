import random

import pytest

from derangements.groupid import group_id
from derangements.matgrp.actions import subspace_action
from derangements.matgrp.blackbox import perm_group
from derangements.matgrp.generators import standard_generators
from derangements.permgrp import (BSGS, NotASubgroup, ProductReplacer, bsgs,
                                  class_fusion, coset_action,
                                  derangement_verdict, enumerate_group,
                                  evaluate_word, find_derangement,
                                  find_prime_power_derangement, fixed_points,
                                  is_transitive, perm_order, perm_power, pinv,
                                  pmul, prime_order_classes,
                                  socle_class_data)
from derangements.permgrp.classes import NotTransitive


def cyc(n, *cycles):
    p = list(range(n))
    for c in cycles:
        for i in range(len(c)):
            p[c[i]] = c[(i + 1) % len(c)]
    return tuple(p)


S5 = [cyc(5, (0, 1, 2, 3, 4)), cyc(5, (0, 1))]
A5 = [cyc(5, (0, 1, 2, 3, 4)), cyc(5, (0, 1, 2))]


def test_bsgs_orders():
    assert bsgs(S5).order == 120
    assert bsgs(A5).order == 60
    gens, _ = perm_group("M11_12")
    assert bsgs(gens).order == 7920
    g, form = standard_generators(group_id("U", 4, 2))
    act = subspace_action(g, form, "isotropic")
    assert bsgs(act.perms_of(g)).order == 25920


def test_bsgs_matches_full_enumeration():
    for gens in (S5, A5, list(perm_group("M11_11")[0])):
        chain = bsgs(gens)
        seen, _ = enumerate_group(chain.gens, chain.degree)
        assert len(seen) == chain.order


def test_factor_word_roundtrip():
    chain = bsgs(S5)
    pr = ProductReplacer(S5, seed=3)
    for _ in range(25):
        x = pr.sample()
        assert evaluate_word(chain.factor_word(x), S5) == x
    with pytest.raises(NotASubgroup):
        bsgs(A5).factor_word(cyc(5, (0, 1)))


def test_coset_action_examples():
    d10 = [cyc(5, (0, 1, 2, 3, 4)), (4, 3, 2, 1, 0)]
    perms, reps = coset_action(bsgs(A5), d10)
    assert len(reps) == 6 and is_transitive(perms, 6)
    # degree-1 action on the whole group
    perms, reps = coset_action(bsgs(S5), S5)
    assert len(reps) == 1
    with pytest.raises(NotASubgroup):
        coset_action(bsgs(A5), S5)


def test_coset_action_hyperoval_stabilizer():
    """index-56 subgroup of L3(4): cosets of the stabilizer of a hyperoval."""
    from derangements.corpus import build_linear34, hyperoval_seed
    from derangements.matgrp.actions import orbit_action

    ctx = build_linear34()
    seed = hyperoval_seed(ctx.field)
    omega = orbit_action(ctx.mats, seed, ctx.act)
    assert omega.degree == 56
    # find the A6 stabilizer generators via the work action and use cosets
    work_perms = ctx.work_perms
    chain = bsgs(work_perms, known_order=20160)
    act56 = omega.perms_of(ctx.mats)
    # point stabilizer of the hyperoval in the 56-point action has index 56
    stab_word_gens = []
    pr = ProductReplacer(work_perms, seed=11)
    stab = []
    for _ in range(4000):
        x = pr.sample()
        w = chain.factor_word(x)
        img = evaluate_word(w, act56)
        if img[0] == 0:
            stab.append(x)
            if len(stab) >= 6 and bsgs(stab).order == 360:
                break
    assert bsgs(stab).order == 360
    perms, reps = coset_action(chain, stab)
    assert len(reps) == 56


def test_prime_order_classes_m11():
    gens, _ = perm_group("M11_11")
    classes = prime_order_classes(bsgs(gens))
    data = sorted((c.element_order, c.class_size) for c in classes)
    assert data == [(2, 165), (3, 440), (5, 1584), (11, 720), (11, 720)]


def test_prime_order_classes_s5():
    classes = prime_order_classes(bsgs(S5))
    fives = [c for c in classes if c.element_order == 5]
    assert len(fives) == 1 and fives[0].class_size == 24


def test_class_members_closed_under_conjugation():
    gens, _ = perm_group("M11_11")
    chain = bsgs(gens)
    classes = prime_order_classes(chain)
    pr = ProductReplacer(gens, seed=99)
    import numpy as np

    for c in classes:
        for _ in range(20):
            g = pr.sample()
            img = pmul(pmul(pinv(g), c.representative), g)
            assert np.array(img, dtype=np.uint8).tobytes() in c.members
            assert fixed_points(img) == c.fixed_points


def test_class_fusion_identity_for_m11():
    gens, _ = perm_group("M11_11")
    chain = bsgs(gens)
    classes = prime_order_classes(chain)
    fused = class_fusion(chain, classes)
    assert len(fused) == len(classes)


def test_verdict_examples(corpus_results=None):
    assert str(derangement_verdict(S5)) == "AlmostElusive(5)"
    d10 = [cyc(5, (0, 1, 2, 3, 4)), (4, 3, 2, 1, 0)]
    perms, _ = coset_action(bsgs(A5), d10)
    v = derangement_verdict(perms)
    assert v.tag == "almost_elusive" and v.r == 3
    gens, _ = perm_group("M11_12")
    assert derangement_verdict(gens).tag == "elusive"
    g, form = standard_generators(group_id("U", 4, 2))
    act = subspace_action(g, form, "isotropic")
    v = derangement_verdict(act.perms_of(g), known_socle_order=25920)
    assert v.tag == "almost_elusive" and v.r == 5


def test_verdict_not_transitive():
    with pytest.raises(NotTransitive):
        derangement_verdict([cyc(6, (0, 1, 2)), cyc(6, (1, 2, 0))])


def test_sp62_order7_class():
    g, form = standard_generators(group_id("S", 6, 2))
    act = subspace_action(g, form, "projective")
    chain = bsgs(act.perms_of(g), known_order=1451520)
    classes = prime_order_classes(chain)
    sevens = [c for c in classes if c.element_order == 7]
    assert len(sevens) == 1 and sevens[0].class_size == 207360


def test_derangement_search():
    gens, _ = perm_group("M11_12")
    x = find_derangement(gens)
    assert fixed_points(x) == 0
    y, pk = find_prime_power_derangement(gens)
    assert fixed_points(y) == 0 and perm_order(y) == pk
    # the group is elusive, so any prime-power witness has composite order
    assert pk in (4, 8)
