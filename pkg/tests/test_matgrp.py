import pytest

from derangements.groupid import group_id
from derangements.matgrp.actions import (normalize_point, orbit_action, rref,
                                         subspace_action)
from derangements.matgrp.blackbox import perm_group
from derangements.matgrp.elements import (UnsupportedLabelShape, _jordan_type,
                                          element_from_label)
from derangements.matgrp.fields import OutOfRange, make_field
from derangements.matgrp.generators import (UnsupportedConstruction,
                                            standard_generators)
from derangements.matgrp.matrices import Mat, standard_form
from derangements.classcount import ClassLabel, sigma_orbits
from derangements.permgrp import bsgs


def test_field_conventions():
    f4 = make_field(2, 2)
    assert f4.poly == (1, 1, 1)          # x^2 + x + 1
    f9 = make_field(3, 2)
    assert f9.poly == (2, 1, 1)          # x^2 + x + 2 (x^2 + 1 is not primitive)
    f5 = make_field(5, 1)
    assert f5.q == 5


@pytest.mark.parametrize("p,f", [(2, 2), (3, 2), (2, 3), (5, 1), (2, 4), (3, 3)])
def test_field_axioms(p, f):
    F = make_field(p, f)
    for a in F.elements():
        if a:
            assert F.mul(a, F.inv(a)) == 1
        assert F.add(a, F.neg(a)) == 0
        for b in F.elements():
            assert F.mul(a, b) == F.mul(b, a)
    # Frobenius has order f
    x = F.gen
    y = x
    for k in range(1, f + 1):
        y = F.frob_map[y] if f > 1 else y
    if f > 1:
        assert y == x
        assert F.frob(x, 1) != x or f == 1


def test_field_range():
    with pytest.raises(OutOfRange):
        make_field(2, 25)


def test_standard_generator_orders():
    cases = [
        ("U", 4, 2, "isotropic", 25920),
        ("S", 6, 2, "projective", 1451520),
        ("L", 3, 4, "projective", 20160),
        ("U", 4, 3, "totally_singular", 3265920),
        ("O+", 6, 2, "isotropic", 20160),
        ("O-", 6, 2, "isotropic", 25920),
    ]
    for fam, n, q, kind, order in cases:
        gens, form = standard_generators(group_id(fam, n, q))
        for g in gens:
            if form is not None:
                assert form.preserves(g)
        k = 2 if kind == "totally_singular" else 1
        act = subspace_action(gens, form, kind, k=k)
        assert bsgs(act.perms_of(gens), known_order=order).order == order


def test_generator_catalog_bounds():
    with pytest.raises(UnsupportedConstruction):
        standard_generators(group_id("U", 9, 2))


def test_blackbox_m11():
    gens, order = perm_group("M11_12")
    assert order == 7920 and len(gens[0]) == 12
    with pytest.raises(KeyError):
        perm_group("M13")


def test_subspace_action_degrees():
    gens, form = standard_generators(group_id("U", 4, 2))
    assert subspace_action(gens, form, "isotropic").degree == 45
    assert subspace_action(gens, form, "nondegenerate").degree == 40
    g6, f6 = standard_generators(group_id("S", 6, 2))
    assert subspace_action(g6, f6, "projective").degree == 63
    go, fo = standard_generators(group_id("O+", 8, 2))
    assert subspace_action(go, fo, "isotropic").degree == 135
    assert subspace_action(go, fo, "totally_singular", k=4).degree == 135


def test_canonical_labels_idempotent():
    F = make_field(2, 2)
    rows = ((1, 2, 3, 0), (0, 1, 2, 2), (1, 0, 1, 1))
    once = rref(F, rows)
    assert rref(F, once) == once
    v = (0, 2, 3, 1)
    assert normalize_point(F, normalize_point(F, v)) == normalize_point(F, v)


def test_element_from_label_examples():
    m = element_from_label(ClassLabel.semisimple([(sigma_orbits(5, 2)[0], 1)]),
                           group_id("S", 4, 2))
    assert m.order() == 5
    m = element_from_label(ClassLabel.unipotent([2, 1, 1]), group_id("U", 4, 2))
    assert _jordan_type(m) == (2, 1, 1) and m.order() == 2
    orb = sigma_orbits(7, 2)[0]
    m = element_from_label(ClassLabel.semisimple([(orb, 1)], e=3),
                           group_id("L", 6, 2))
    assert m.order() == 7


def test_element_invalid_shape():
    with pytest.raises(UnsupportedLabelShape):
        element_from_label(ClassLabel.unipotent([3, 1, 1, 1]), group_id("S", 6, 3))


def test_element_degree_matches_omega_size():
    """Subspace action degrees agree with the symbolic index computation."""
    from derangements.gforders import SubgroupSpec, omega_size

    g = group_id("U", 4, 2)
    gens, form = standard_generators(g)
    assert subspace_action(gens, form, "isotropic").degree == \
        omega_size(g, SubgroupSpec.make("C1", "P", m=1))
    g = group_id("O+", 8, 3)
    gens, form = standard_generators(g)
    assert subspace_action(gens, form, "totally_singular", k=4).degree == \
        omega_size(g, SubgroupSpec.make("C1", "P", m=4)) == 1120


def test_simple_orders_match_chains_small():
    """Product-formula orders equal stabilizer-chain orders of the
    constructed actions for the small instances."""
    from derangements.gforders import order

    for fam, n, q, kind in [("L", 3, 2, "projective"), ("L", 3, 3, "projective"),
                            ("U", 3, 3, "isotropic"), ("U", 4, 2, "isotropic"),
                            ("S", 4, 3, "projective"), ("Oo", 5, 3, "isotropic"),
                            ("O+", 6, 2, "isotropic"), ("O-", 6, 2, "isotropic")]:
        g = group_id(fam, n, q)
        gens, form = standard_generators(g)
        act = subspace_action(gens, form, kind)
        assert bsgs(act.perms_of(gens)).order == order(g), str(g)
