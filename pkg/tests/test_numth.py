import random

import pytest
from hypothesis import given, settings, strategies as st

from derangements import numth as nt
from derangements.numth import PrimePower


def test_factor_examples():
    assert nt.factor(63).entries == {3: 2, 7: 1}
    assert nt.factor(2**20 - 1).entries == {3: 1, 5: 2, 11: 1, 31: 1, 41: 1}
    assert nt.factor(1).entries == {}


def test_factor_remultiplies_and_deterministic():
    rng = random.Random(7)
    for _ in range(50):
        n = rng.randrange(2, 10**12)
        fm = nt.factor(n)
        prod = 1
        for p, e in fm.entries.items():
            assert nt.is_prime(p)
            prod *= p**e
        assert prod == n
        assert nt.factor(n).entries == fm.entries


def test_factor_budget():
    hard = (2**101 - 1)  # has two large prime factors
    with pytest.raises(nt.FactorizationTimeout):
        nt.factor(hard * (2**103 - 1), budget=10**3)


def test_primality_edges():
    assert not nt.is_prime(1)
    assert nt.is_prime(2) and nt.is_prime(3)
    assert not nt.is_prime(561)          # Carmichael
    assert nt.is_prime(2**61 - 1)
    assert not nt.is_prime(2**67 - 1)


def test_ppd_set_zsigmondy_examples():
    assert nt.ppd_set(PrimePower(2, 1), 6) == set()
    assert nt.ppd_set(PrimePower(3, 1), 2) == set()      # Mersenne prime
    assert nt.ppd_set(PrimePower(2, 1), 4) == {5}
    assert nt.ppd_set(PrimePower(2, 2), 3) == {7}
    assert nt.ppd_set(PrimePower(2, 1), 1) == set()


@given(st.sampled_from([2, 3, 4, 5, 7, 8, 9, 11, 13]),
       st.integers(min_value=2, max_value=18))
@settings(max_examples=60, deadline=None)
def test_ppd_membership_properties(q, n):
    """Every primitive prime divisor is 1 mod n and divides q^m - 1 exactly
    when n divides m."""
    ppds = nt.ppd_set_int(q, n)
    for r in ppds:
        assert r % n == 1
        for m in range(1, 3 * n + 1):
            assert ((q**m - 1) % r == 0) == (m % n == 0)


def test_ppd_exists_matches_set():
    for q in (2, 3, 4, 5, 7, 8, 9, 16, 31, 127):
        for n in range(1, 13):
            assert nt.ppd_exists(q, n) == bool(nt.ppd_set_int(q, n))


def test_lifted_valuation_examples():
    assert nt.lifted_valuation(PrimePower(7, 1), 1, 3, 6) == 2
    assert nt.lifted_valuation(PrimePower(7, 1), 1, 2, 2) == 4
    assert nt.lifted_valuation(PrimePower(3, 1), -1, 2, 2) == 1
    with pytest.raises(nt.PreconditionViolation):
        nt.lifted_valuation(PrimePower(7, 1), 1, 5, 4)


def test_lifted_valuation_randomized_500():
    """The three-case formula equals the direct valuation of q^n - eps."""
    rng = random.Random(20260809)
    checked = 0
    while checked < 500:
        q = PrimePower.of(rng.choice([2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27]))
        eps = rng.choice([1, -1])
        n = rng.randrange(1, 30)
        divisors = nt.factor(q.q - eps).primes() if q.q != 2 or eps != 1 else set()
        if not divisors:
            continue
        r = rng.choice(sorted(divisors))
        got = nt.lifted_valuation(q, eps, r, n)
        assert got == nt.valuation(q.q**n - eps, r), (q, eps, r, n)
        checked += 1


def test_ppd_lift_relation_examples():
    assert nt.ppd_lift_relation(2, 2, 6) == nt.LiftRelation(True, "i")
    assert nt.ppd_lift_relation(2, 3, 4) == nt.LiftRelation(False, None)
    assert nt.ppd_lift_relation(2, 4, 4) == nt.LiftRelation(True, "iii")
    assert nt.ppd_lift_relation(7, 3, 2) == nt.LiftRelation(True, "ii")


@given(st.sampled_from([2, 3, 5, 7]), st.integers(2, 4), st.integers(2, 8))
@settings(max_examples=40, deadline=None)
def test_ppd_lift_containment(b, c, n):
    lower = nt.ppd_set_int(b, c * n)
    upper = nt.ppd_set_int(b**c, n)
    assert lower <= upper


def test_unique_ppd_classify_examples():
    rep = nt.unique_ppd_classify(PrimePower(2, 1), 8)
    assert (rep.unique, rep.r, rep.d_class) == (True, 17, "exceptional:2^a:2nf+1")
    rep = nt.unique_ppd_classify(PrimePower(239, 1), 4)
    assert (rep.unique, rep.r, rep.d_class) == (True, 13, "exceptional:2^a:3nf+1")
    rep = nt.unique_ppd_classify(PrimePower(23, 1), 6)
    assert (rep.unique, rep.r, rep.d_class) == (True, 13, "exceptional:2^a*3:2nf+1")
    rep = nt.unique_ppd_classify(PrimePower(11, 1), 4)
    assert (rep.unique, rep.r, rep.d_class) == (True, 61, "general_bound")
    assert nt.unique_ppd_classify(PrimePower(2, 1), 10).d_class == "exceptional:2n:i"


def test_unique_agrees_with_ppd_set():
    for q in (2, 3, 4, 5, 7, 9, 16, 23, 239):
        for n in (1, 2, 3, 4, 6, 8, 12):
            rep = nt.unique_ppd_classify(PrimePower.of(q), n)
            direct = nt.ppd_set_int(q, n)
            assert rep.unique == (len(direct) == 1)
            assert rep.ppds == direct


def test_prime_power_plus_one():
    assert nt.prime_power_plus_one(2, 3) == nt.PrimePowerPlusOne(True, 3, 2, "sporadic")
    assert nt.prime_power_plus_one(2, 4) == nt.PrimePowerPlusOne(True, 17, 1, "fermat")
    assert nt.prime_power_plus_one(7, 1) == nt.PrimePowerPlusOne(True, 2, 3, "mersenne")
    assert nt.prime_power_plus_one(2, 5).is_prime_power is False


def test_repunit_power_check():
    assert nt.repunit_power_check(3, 5) == nt.RepunitPower(True, 11, 2, True)
    assert nt.repunit_power_check(18, 3) == nt.RepunitPower(True, 7, 3, True)
    assert nt.repunit_power_check(7, 4) == nt.RepunitPower(True, 20, 2, True)
    assert nt.repunit_power_check(-19, 3) == nt.RepunitPower(True, 7, 3, True)
    assert nt.repunit_power_check(2, 5).is_power is False
    # negative repunit value: x < 0, a even
    res = nt.repunit_power_check(-3, 4)
    assert res.is_power is False and (((-3) ** 4 - 1) // (-4)) == -20


def test_congruence_solution_count():
    assert nt.congruence_solution_count(4, 2, 6) == 2
    assert nt.congruence_solution_count(4, 3, 6) == 0
    assert nt.congruence_solution_count(1, 0, 5) == 1
    # brute-force comparison
    rng = random.Random(3)
    for _ in range(60):
        a = rng.randrange(-10, 11) or 1
        b = rng.randrange(-10, 11)
        c = rng.randrange(1, 13)
        direct = sum(1 for x in range(c) if (a * x - b) % c == 0)
        assert nt.congruence_solution_count(a, b, c) == direct


def test_case_i_search_small():
    survivors, log = nt.case_i_search(20, 10)
    assert survivors == []
    by_key = {(e.n, e.f): e for e in log}
    assert "n does not divide q+1" in by_key[(5, 1)].reason
    assert "not prime" in by_key[(5, 2)].reason


def test_two_large_primes():
    assert nt.two_large_primes(12, PrimePower(2, 1)) == (17, 31)
    assert nt.two_large_primes(7, PrimePower(2, 1)) is None
    pair = nt.two_large_primes(25, PrimePower(2, 1))
    assert pair is not None and pair[0] != pair[1]
    n = 25
    prod = 1
    for i in range(1, (n - 1) // 2 + 1):
        prod *= 2 ** (2 * i) - 1
    for r in pair:
        assert r > n + 2 and prod % r == 0
    # the six exceptional pairs have no such pair
    for (n, q) in [(10, 2), (9, 2), (8, 3), (8, 2), (7, 3), (7, 2)]:
        assert nt.two_large_primes(n, PrimePower.of(q)) is None


def test_cyclotomic_value():
    assert nt.cyclotomic_value(1, 5) == 4
    assert nt.cyclotomic_value(6, 2) == 3
    assert nt.cyclotomic_value(12, 3) == 3**4 - 3**2 + 1
