"""Exact integer arithmetic for primitive prime divisors.

Everything here is plain big-integer arithmetic: deterministic primality
testing, budgeted factorization (trial division + Brent's rho), cyclotomic
values, primitive prime divisor (ppd) sets and the classification of unique
ppds of q^n - 1, plus the Diophantine-style checks and searches the
classification rests on.

A prime r is a primitive prime divisor of a^n - 1 if r divides a^n - 1 but
does not divide a^i - 1 for any 0 <= i < n.  For n >= 2 every such r is odd
and satisfies r = 1 (mod n).
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field


class FactorizationTimeout(Exception):
    """The configured work budget was exhausted before factoring finished."""


class PreconditionViolation(ValueError):
    """An argument violates a documented precondition."""


DEFAULT_BUDGET = 10**9

# Deterministic Miller-Rabin witness set: correct for all n < 3.3 * 10^24,
# which comfortably covers the 64-bit range required to be deterministic.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)

_MR_ROUNDS_LARGE = 40
_MR_SEED = 0x5EED_DE9A


def _miller_rabin(n, base):
    d = n - 1
    s = 0
    while d % 2 == 0:
        d //= 2
        s += 1
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Primality test: deterministic below 3.3e24, 40 seeded rounds above."""
    if n < 2:
        return False
    for p in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % p == 0:
            return n == p
    if n < 3317044064679887385961981:
        bases = _MR_BASES
    else:
        rng = random.Random(_MR_SEED ^ (n & 0xFFFFFFFFFFFFFFFF))
        bases = tuple(rng.randrange(2, n - 1) for _ in range(_MR_ROUNDS_LARGE))
    return all(_miller_rabin(n, b) for b in bases)


class Budget:
    """Mutable work counter shared across a factorization call tree."""

    def __init__(self, limit=DEFAULT_BUDGET):
        self.limit = limit
        self.used = 0

    def spend(self, amount):
        self.used += amount
        if self.used > self.limit:
            raise FactorizationTimeout(
                f"work budget exhausted ({self.used} > {self.limit} steps)")


_TRIAL_LIMIT = 10**6


def _brent_rho(n, budget):
    # Deterministic parameter schedule; n is odd, composite, not a prime power
    # of a small prime (trial division already ran).
    for c in range(1, 64):
        y, r, q_acc, g = 2, 1, 1, 1
        x = ys = y
        m = 128
        while g == 1:
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q_acc = q_acc * abs(x - y) % n
                budget.spend(min(m, r - k))
                g = math.gcd(q_acc, n)
                k += m
            r *= 2
        if g == n:
            g = 1
            while g == 1:
                ys = (ys * ys + c) % n
                budget.spend(1)
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g
    raise FactorizationTimeout(f"rho failed to split {n}")


def _factor_into(n, out, budget):
    if n == 1:
        return
    if is_prime(n):
        out[n] = out.get(n, 0) + 1
        return
    # perfect powers: rho behaves poorly on them, peel them off first
    root, exp = _perfect_power(n)
    if exp > 1:
        sub: dict[int, int] = {}
        _factor_into(root, sub, budget)
        for p, e in sub.items():
            out[p] = out.get(p, 0) + e * exp
        return
    d = _brent_rho(n, budget)
    _factor_into(d, out, budget)
    _factor_into(n // d, out, budget)


def _perfect_power(n):
    """Return (root, e) with root**e == n and e maximal (e == 1 if none)."""
    for e in range(n.bit_length(), 1, -1):
        root = _iroot(n, e)
        if root > 1 and root**e == n:
            return root, e
    return n, 1


def _iroot(n, k):
    if n < 0:
        raise ValueError("negative radicand")
    if n == 0:
        return 0
    x = 1 << (n.bit_length() // k + 1)
    while True:
        y = ((k - 1) * x + n // x ** (k - 1)) // k
        if y >= x:
            return x
        x = y


@dataclass(frozen=True)
class FactorMap:
    """A fully factored positive integer."""

    value: int
    entries: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        prod = 1
        for p, e in self.entries.items():
            if e <= 0 or not is_prime(p):
                raise ValueError(f"bad factor map entry {p}^{e}")
            prod *= p**e
        if prod != self.value:
            raise ValueError("factor map entries do not multiply to value")

    def primes(self):
        return set(self.entries)


def factor(n: int, budget: int | Budget = DEFAULT_BUDGET) -> FactorMap:
    """Factor n >= 1 deterministically within a work budget.

    Trial division up to 10^6, then Brent-cycle rho on the cofactor with a
    fixed parameter schedule, recursing on composite parts.  Raises
    FactorizationTimeout once the budget is spent.
    """
    if n < 1:
        raise PreconditionViolation(f"factor() needs n >= 1, got {n}")
    if not isinstance(budget, Budget):
        budget = Budget(budget)
    out: dict[int, int] = {}
    m = n
    for p in (2, 3, 5):
        while m % p == 0:
            out[p] = out.get(p, 0) + 1
            m //= p
    d = 7
    wheel = (4, 2, 4, 2, 4, 6, 2, 6)
    i = 0
    while d <= _TRIAL_LIMIT and d * d <= m:
        budget.spend(1)
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += wheel[i]
        i = (i + 1) % 8
    _factor_into(m, out, budget)
    return FactorMap(n, out)


def valuation(n: int, p: int) -> int:
    """Largest e with p^e dividing n (n != 0)."""
    if n == 0:
        raise PreconditionViolation("valuation of 0 is undefined")
    e = 0
    n = abs(n)
    while n % p == 0:
        n //= p
        e += 1
    return e


def multiplicative_order(a: int, r: int, budget: int | Budget = DEFAULT_BUDGET) -> int:
    """Order of a modulo r (r prime, r does not divide a)."""
    if a % r == 0:
        raise PreconditionViolation(f"{r} divides {a}")
    order = r - 1
    for p in factor(r - 1, budget).entries:
        while order % p == 0 and pow(a, order // p, r) == 1:
            order //= p
    return order


@dataclass(frozen=True)
class PrimePower:
    """A prime power q = p^f carried with its decomposition."""

    p: int
    f: int

    def __post_init__(self):
        if self.f < 1:
            raise PreconditionViolation(f"exponent must be positive, got {self.f}")
        if not is_prime(self.p):
            raise PreconditionViolation(f"{self.p} is not prime")

    @property
    def q(self) -> int:
        return self.p**self.f

    @staticmethod
    def of(q: int) -> "PrimePower":
        """Decompose an integer known to be a prime power."""
        root, e = _perfect_power(q)
        if not is_prime(root):
            raise PreconditionViolation(f"{q} is not a prime power")
        return PrimePower(root, e)

    def __repr__(self):
        return f"PrimePower({self.p}^{self.f})"


def _mobius_factored(fm):
    if any(e > 1 for e in fm.values()):
        return 0
    return -1 if len(fm) % 2 else 1


def _divisors(n):
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
        d += 1
    return small + large[::-1]


def cyclotomic_value(n: int, a: int) -> int:
    """The n-th cyclotomic polynomial evaluated at a (n >= 1, a >= 2)."""
    fm = factor(n).entries
    num, den = 1, 1
    for d in _divisors(n):
        mu = _mobius_factored(factor(n // d).entries)
        if mu == 1:
            num *= a**d - 1
        elif mu == -1:
            den *= a**d - 1
    assert num % den == 0
    return num // den


def _stripped_cyclotomic(a, n):
    """Phi_n(a) with the single possible non-primitive ("intrinsic") prime
    divisor removed; the remaining prime support is exactly P_a^n.  n >= 3."""
    v = cyclotomic_value(n, a)
    s = max(factor(n).entries)
    if v % s == 0:
        v //= s
        # the intrinsic prime divides Phi_n(a) at most once for n >= 3
        assert v % s != 0, (a, n, s)
    return v


def ppd_exists(a: int, n: int) -> bool:
    """Whether a^n - 1 has a primitive prime divisor.  No factorization."""
    if a < 2 or n < 1:
        raise PreconditionViolation("need a >= 2, n >= 1")
    if n == 1:
        return a > 2
    if n == 2:
        return (a + 1) >> valuation(a + 1, 2) > 1
    return _stripped_cyclotomic(a, n) > 1


def ppd_set_int(a: int, n: int, budget: int | Budget = DEFAULT_BUDGET) -> set[int]:
    """Primitive prime divisors of a^n - 1 for any integer a >= 2."""
    if a < 2 or n < 1:
        raise PreconditionViolation("need a >= 2, n >= 1")
    if not isinstance(budget, Budget):
        budget = Budget(budget)
    if n == 1:
        return factor(a - 1, budget).primes()
    if n == 2:
        odd = (a + 1) >> valuation(a + 1, 2)
        return factor(odd, budget).primes()
    v = _stripped_cyclotomic(a, n)
    primes = factor(v, budget).primes()
    for r in primes:
        assert pow(a, n, r) == 1 and r % n == 1, (a, n, r)
    return primes


def ppd_set(q: PrimePower, n: int, budget: int | Budget = DEFAULT_BUDGET) -> set[int]:
    """Primitive prime divisors of q^n - 1; empty exactly in the Zsigmondy
    exceptional cases (n, q) = (1, 2), (6, 2) and n = 2 with q a Mersenne
    prime."""
    return ppd_set_int(q.q, n, budget)


def lifted_valuation(q: PrimePower, eps: int, r: int, n: int) -> int:
    """Exponent of r in q^n - eps, computed by the three-case lifting formula
    for a prime r dividing q - eps (eps = +1 or -1)."""
    if eps not in (1, -1):
        raise PreconditionViolation("eps must be +1 or -1")
    if (q.q - eps) % r != 0:
        raise PreconditionViolation(f"{r} does not divide q - ({eps:+d})")
    if n < 1:
        raise PreconditionViolation("n must be positive")
    qq = q.q
    if n % 2 == 1 or (r % 2 == 1 and eps == 1):
        return valuation(qq - eps, r) + valuation(n, r)
    if r == 2 and eps == 1:
        return valuation(qq * qq - 1, 2) + valuation(n, 2) - 1
    # n even, eps == -1: the r-part of q^n + 1 is gcd(r, 2)
    return 1 if r == 2 else 0


@dataclass(frozen=True)
class LiftRelation:
    """Comparison of P_b^(cn) with P_a^n for a = b^c."""

    equal: bool
    case: str | None  # "i", "ii", "iii" when equal, else None


def _is_mersenne_prime(b):
    return is_prime(b) and (b + 1) & b == 0


def ppd_lift_relation(b: int, c: int, n: int, verify: bool = True,
                      budget: int | Budget = DEFAULT_BUDGET) -> LiftRelation:
    """Classify the containment P_b^(cn) <= P_(b^c)^n as equality or proper.

    Equality holds exactly when (i) (n, b) = (6, 2) with c prime, (ii) n = 2
    with c prime and b a Mersenne prime, or (iii) the prime support of c is
    contained in that of n.
    """
    if b < 2 or c < 1 or n < 2:
        raise PreconditionViolation("need b >= 2, c >= 1, n >= 2")
    if not isinstance(budget, Budget):
        budget = Budget(budget)
    n_primes = factor(n, budget).primes()
    k = c
    for s in n_primes:
        while k % s == 0:
            k //= s
    if n == 6 and b == 2 and is_prime(c):
        rel = LiftRelation(True, "i")
    elif n == 2 and is_prime(c) and _is_mersenne_prime(b):
        rel = LiftRelation(True, "ii")
    elif k == 1:
        rel = LiftRelation(True, "iii")
    else:
        rel = LiftRelation(False, None)
    if verify:
        lower = ppd_set_int(b, c * n, budget)
        upper = ppd_set_int(b**c, n, budget)
        assert lower <= upper, (b, c, n)
        assert (lower == upper) == rel.equal, (b, c, n, rel)
    return rel


@dataclass(frozen=True)
class PpdReport:
    """Primitive prime divisors of q^n - 1 with uniqueness classification."""

    q: PrimePower
    n: int
    ppds: set[int]
    unique: bool
    r: int | None
    d_class: str  # "general_bound", "exceptional:<id>", "inapplicable"


# (n, q) -> r-shape for the two complete exceptional lists (n = 2^a with
# a >= 2, and n = 2^a * 3), plus the 2n-shape pairs with n/2 an odd prime
# and q even that are classified separately below.
_EXC_POW2 = {
    (4, 2): 1, (4, 3): 1, (4, 7): 1,
    (4, 4): 2, (8, 2): 2,
    (4, 5): 3, (4, 239): 3,
}
_EXC_POW2_TIMES3 = {
    (3, 4): 1, (6, 3): 1, (6, 4): 1, (6, 5): 1, (6, 8): 1, (6, 19): 1, (12, 2): 1,
    (3, 2): 2, (6, 23): 2,
}

_D_NAMES = {1: "nf+1", 2: "2nf+1", 3: "3nf+1"}


def _n_shape(n):
    m = n
    while m % 2 == 0:
        m //= 2
    if m == 1 and n >= 4:
        return "pow2"
    if m == 3:
        return "pow2*3"
    if is_prime(m) and m >= 5:
        return "pow2*prime" if n != m else "odd_prime"
    return "other"


def unique_ppd_classify(q: PrimePower, n: int,
                        budget: int | Budget = DEFAULT_BUDGET) -> PpdReport:
    """Decide whether q^n - 1 has a unique primitive prime divisor and, when
    it does, classify its size against the 4nf+1 bound and the shipped
    exceptional lists."""
    if not isinstance(budget, Budget):
        budget = Budget(budget)
    a, f = q.q, q.f
    if n == 1:
        odd_part = a - 1
    elif n == 2:
        odd_part = (a + 1) >> valuation(a + 1, 2)
    else:
        odd_part = _stripped_cyclotomic(a, n)
    if odd_part == 1:
        return PpdReport(q, n, set(), False, None, "inapplicable")
    root, _ = _perfect_power(odd_part)
    if not is_prime(root):
        # at least two distinct primitive primes; list them if feasible
        ppds = factor(odd_part, budget).primes()
        return PpdReport(q, n, ppds, False, None, "inapplicable")
    r = root
    if n >= 2:
        assert r % n == 1, (q, n, r)
    if r >= 4 * n * f + 1:
        return PpdReport(q, n, {r}, True, r, "general_bound")
    shape = _n_shape(n)
    key = (n, a)
    if shape == "pow2" and key in _EXC_POW2:
        d = _EXC_POW2[key]
        assert r == d * n * f + 1, (key, r)
        return PpdReport(q, n, {r}, True, r, f"exceptional:2^a:{_D_NAMES[d]}")
    if shape == "pow2*3" and key in _EXC_POW2_TIMES3:
        d = _EXC_POW2_TIMES3[key]
        assert r == d * n * f + 1, (key, r)
        return PpdReport(q, n, {r}, True, r, f"exceptional:2^a*3:{_D_NAMES[d]}")
    if shape == "pow2*prime" and n % 4 != 0 and q.p == 2 and r == n * f + 1:
        # 2n-shape with n/2 an odd prime and q even: r = 2(n/2)f + 1
        if (n, a) == (10, 2):
            return PpdReport(q, n, {r}, True, r, "exceptional:2n:i")
        if (a + 1) % (n // 2) == 0:
            return PpdReport(q, n, {r}, True, r, "exceptional:2n:ii")
    return PpdReport(q, n, {r}, True, r, "inapplicable")


@dataclass(frozen=True)
class PrimePowerPlusOne:
    """Classification of r^v + 1 as a prime power s^w."""

    is_prime_power: bool
    s: int | None
    w: int | None
    case: str | None  # "sporadic", "fermat", "mersenne"


def prime_power_plus_one(r: int, v: int) -> PrimePowerPlusOne:
    """Decide whether r^v + 1 is a prime power and which shape applies:
    the sporadic solution 2^3 + 1 = 3^2, a Fermat prime 2^v + 1, or a
    Mersenne prime r = 2^w - 1."""
    if not is_prime(r) or v < 1:
        raise PreconditionViolation("need r prime and v >= 1")
    value = r**v + 1
    s, w = _perfect_power(value)
    if not is_prime(s):
        return PrimePowerPlusOne(False, None, None, None)
    if (r, s, v, w) == (2, 3, 3, 2):
        return PrimePowerPlusOne(True, s, w, "sporadic")
    if r == 2 and w == 1:
        return PrimePowerPlusOne(True, s, w, "fermat")
    if s == 2 and v == 1:
        return PrimePowerPlusOne(True, s, w, "mersenne")
    raise AssertionError(f"{r}^{v}+1 = {s}^{w} escapes the classification")


@dataclass(frozen=True)
class RepunitPower:
    """Perfect-power status of (x^a - 1)/(x - 1)."""

    is_power: bool
    y: int | None
    b: int | None
    exceptional: bool


_REPUNIT_EXCEPTIONS = {(3, 11, 5, 2), (7, 20, 4, 2), (18, 7, 3, 3), (-19, 7, 3, 3)}


def repunit_power_check(x: int, a: int) -> RepunitPower:
    """Decide whether (x^a - 1)/(x - 1) = y^b with |y| > 1 and b >= 2,
    flagging the four known exceptional quadruples.  Negative x is allowed."""
    if abs(x) <= 1 or a <= 2:
        raise PreconditionViolation("need |x| > 1 and a > 2")
    value = (x**a - 1) // (x - 1)
    assert value * (x - 1) == x**a - 1
    if value < 0:
        mag, e = _perfect_power(-value)
        while e > 1 and e % 2 == 0:
            mag, e = mag * mag, e // 2  # need an odd exponent for a negative root
        if e > 1:
            y, b = -mag, e
            return RepunitPower(True, y, b, (x, y, a, b) in _REPUNIT_EXCEPTIONS)
        return RepunitPower(False, None, None, False)
    if value <= 1:
        return RepunitPower(False, None, None, False)
    y, b = _perfect_power(value)
    if b >= 2:
        return RepunitPower(True, y, b, (x, y, a, b) in _REPUNIT_EXCEPTIONS)
    return RepunitPower(False, None, None, False)


def congruence_solution_count(a: int, b: int, c: int) -> int:
    """Number of solutions x (mod c) of a x - b = 0 (mod c)."""
    if a == 0 or c == 0:
        raise PreconditionViolation("a and c must be nonzero")
    d = math.gcd(abs(a), abs(c))
    return d if b % d == 0 else 0


@dataclass(frozen=True)
class CaseISample:
    n: int
    f: int
    accepted: bool
    reason: str


def case_i_search(n_max: int, f_max: int):
    """Search for pairs (n, f), n an odd prime >= 5 and f = 2^a n^b, where
    q = 2^f could support a unique primitive prime divisor r = 2nf + 1 of
    q^(2n) - 1 with n dividing q + 1.

    The test uses the exact identity (q^n + 1)/(q + 1) = (n, q+1) * r^l,
    decided by repeated division; the huge left side is never factored.
    Returns (survivors, log).
    """
    survivors = []
    log = []
    for n in range(5, n_max + 1):
        if not is_prime(n):
            continue
        fs = sorted({(2**i) * (n**j)
                     for i in range(f_max.bit_length() + 1)
                     for j in range(f_max.bit_length() + 1)
                     if (2**i) * (n**j) <= f_max})
        for f in fs:
            q = 2**f
            if (q + 1) % n != 0:
                log.append(CaseISample(n, f, False, "n does not divide q+1"))
                continue
            r = 2 * n * f + 1
            if not is_prime(r):
                log.append(CaseISample(n, f, False, f"r = {r} is not prime"))
                continue
            m = (q**n + 1) // (q + 1)
            g = math.gcd(n, q + 1)
            if m % g != 0:
                log.append(CaseISample(n, f, False, "(n, q+1) does not divide the quotient"))
                continue
            m //= g
            l = 0
            while m % r == 0:
                m //= r
                l += 1
            if m == 1 and l >= 1:
                survivors.append((n, f))
                log.append(CaseISample(n, f, True, f"survives with l = {l}"))
            else:
                log.append(CaseISample(
                    n, f, False, f"quotient is not a power of r (residue {m})"))
    return survivors, log


def two_large_primes(n: int, q: PrimePower,
                     budget: int | Budget = DEFAULT_BUDGET):
    """Two distinct primes r, s > n + 2 dividing prod(q^(2i) - 1) for
    i = 1..ceil((n-2)/2), or None when no such pair exists (only finitely
    many (n, q) fail, all with q <= 3 and n <= 10)."""
    if n < 7:
        raise PreconditionViolation("need n >= 7")
    if not isinstance(budget, Budget):
        budget = Budget(budget)
    m = (n - 1) // 2  # ceil((n-2)/2)
    found: set[int] = set()
    for i in range(1, m + 1):
        for d in _divisors(2 * i):
            for r in factor(cyclotomic_value(d, q.q), budget).primes():
                if r > n + 2:
                    found.add(r)
        if len(found) >= 2:
            break
    if len(found) < 2:
        return None
    pair = sorted(found)[:2]
    return pair[0], pair[1]
