import pytest

from derangements.gforders import (ScreenVerdict, SubgroupSpec,
                                   UnsupportedSubgroupType,
                                   allowed_ppd_indices, omega_size, order,
                                   order_info, pi, s_screen, screen, spectrum,
                                   subgroup_order, tables_verify)
from derangements.gforders.tables import load_tables, verify_row
from derangements.groupid import InvalidParameters, group_id

S = SubgroupSpec.make


def test_order_spot_checks():
    assert order(group_id("S", 4, 5)) == 2**6 * 3**2 * 5**4 * 13
    assert order(group_id("L", 7, 2)) == 2**21 * 3**4 * 5 * 7**2 * 31 * 127
    assert order(group_id("U", 4, 2)) == 25920
    assert order(group_id("U", 6, 2)) == 9196830720
    assert order(group_id("O+", 8, 2)) == 174182400
    assert order(group_id("Oo", 7, 3)) == 4585351680


def test_spectrum_examples():
    assert spectrum(4680000) == {2, 3, 5, 13} and pi(4680000) == 4
    assert spectrum(1) == set() and pi(1) == 0
    assert spectrum(7920) == {2, 3, 5, 11} and pi(7920) == 4


def test_subgroup_order_examples():
    g = group_id("U", 4, 2)
    assert subgroup_order(g, S("C1", "P", m=1)) == ("exact", 576)
    assert omega_size(g, S("C1", "P", m=1)) == 45
    kind, a = subgroup_order(group_id("S", 4, 5), S("C6", "C6"))
    assert kind == "bound" and spectrum(a) == {2, 3, 5}
    q = 8
    assert subgroup_order(group_id("S", 4, 8), S("S", "Sz")) == \
        ("exact", q**2 * (q**2 + 1) * (q - 1))


def test_screen_examples():
    assert str(screen(group_id("U", 4, 2), S("C1", "P", m=1))) == "DiffOne(5)"
    assert str(screen(group_id("S", 4, 5), S("C6", "C6"))) == "DiffOne(13)"
    v = screen(group_id("L", 7, 2), S("C6", "C6"))
    assert v.tag == "diff_at_least_two" and set(v.missing) <= {5, 31, 127}
    assert screen(group_id("U", 5, 2), S("C1", "P", m=2)).missing == (11,)


def test_screen_modes():
    # a divisor bound can certify missing primes but never equal spectra
    info = order_info(group_id("S", 4, 5), S("C6", "C6"))
    assert info.exact is None and not info.spectrum_exact()
    v = screen(group_id("S", 4, 5), S("C6", "C6"))
    assert v.mode == "divides_bound" and v.tag != "equal_pi"


def test_omega_size_examples():
    assert omega_size(group_id("O+", 8, 3), S("C1", "P", m=4)) == 1120
    assert omega_size(group_id("S", 6, 2), S("C8", "O", eps="+")) == 36
    assert omega_size(group_id("S", 6, 2), S("C8", "O", eps="-")) == 28
    with pytest.raises(UnsupportedSubgroupType):
        omega_size(group_id("S", 4, 5), S("C6", "C6"))


def test_lagrange_for_exact_entries():
    cases = [
        (group_id("L", 6, 2), S("C1", "P", m=2)),
        (group_id("L", 6, 2), S("C1", "GLsum", m=2)),
        (group_id("U", 5, 2), S("C2", "GU1wr")),
        (group_id("U", 6, 3), S("C1", "P", m=3)),
        (group_id("S", 8, 2), S("C1", "Spsum", m=2)),
        (group_id("O-", 10, 2), S("C1", "P", m=1)),
        (group_id("Oo", 9, 3), S("C1", "O1sum", perp="+")),
        (group_id("O+", 8, 4), S("C1", "Spn-2")),
    ]
    for g, spec in cases:
        info = order_info(g, spec)
        assert info.exact is not None and order(g) % info.exact == 0, (g, spec)


def test_unsupported_type():
    with pytest.raises(UnsupportedSubgroupType):
        screen(group_id("L", 5, 2), S("C4", "Tensor"))


def test_group_id_validation():
    with pytest.raises(InvalidParameters):
        group_id("S", 5, 4)
    with pytest.raises(InvalidParameters):
        group_id("Oo", 7, 4)
    assert not group_id("L", 3, 2).in_working_set()
    assert not group_id("S", 4, 3).in_working_set()
    assert group_id("U", 4, 2).in_working_set()
    with pytest.raises(InvalidParameters):
        group_id("L", 3, 2).require_working_set()


def test_s_screen_examples():
    v = s_screen(group_id("L", 20, 2), "J1")
    assert v.tag == "diff_at_least_two"
    assert allowed_ppd_indices("J1", 20) == (18,)
    v = s_screen(group_id("L", 15, 2), "M11")
    assert v.tag == "diff_at_least_two" and len(v.missing) == 2
    v = s_screen(group_id("L", 13, 2), "A14")
    assert v.tag == "diff_at_least_two"
    assert allowed_ppd_indices("L3(3)", 13) == (12,)
    assert allowed_ppd_indices("L3(3)", 12) == (12,)
    with pytest.raises(UnsupportedSubgroupType):
        s_screen(group_id("L", 9, 2), "J1")


def test_table5_sample_rows():
    rows = {r.case: r for r in load_tables() if r.table == "T5"}
    checks = verify_row(rows["U52a"])
    assert all(c.status == "agree" and str(c.computed) == "DiffOne(11)"
               for c in checks)
    checks = verify_row(rows["S45a"])
    assert checks[0].computed.missing == (13,)
    checks = verify_row(rows["L2mP1"])
    assert all(c.computed.missing == (2,) for c in checks)


def test_table6_sample_rows():
    rows = {r.case: r for r in load_tables() if r.table == "T6"}
    checks = verify_row(rows["L1"])
    # (3,4): the unique missing prime is 7; (3,3): 13; (3,5): 31
    assert [c.computed.missing for c in checks] == [(13,), (7,), (31,)]
    assert all(c.status == "agree" for c in checks)
    checks = verify_row(rows["O9"])
    assert all(c.status == "agree" for c in checks)


def test_table6_linear_prime_side_condition():
    """Unique missing primes at prime degree over even fields have shape
    k*n*f + 1 with k >= 2 even."""
    rows = {r.case: r for r in load_tables() if r.table == "T6"}
    for case in ("L1", "L2"):
        for c in verify_row(rows[case]):
            if c.unique_ppd and c.q % 2 == 0 and _is_prime(c.n):
                (r,) = c.computed.missing
                n, q = c.n, c.q
                f = 1
                qq = q
                while qq % 2 == 0 and qq > 2:
                    qq //= 2
                    f += 1
                assert r % (n * f) == 1 and r % 2 == 1
                k = (r - 1) // (n * f)
                assert k >= 2 and k % 2 == 0, (c.n, c.q, r)


def _is_prime(n):
    from derangements.numth import is_prime

    return is_prime(n)


def test_tables_verify_known_defects_only():
    checks = tables_verify()
    bad = [(c.row.table, c.row.case) for c in checks if c.status != "agree"]
    assert sorted(set(bad)) == [("T4", "XIIx"), ("T5", "Om10a"),
                                ("T5", "Om10b"), ("T5", "U45a")]
