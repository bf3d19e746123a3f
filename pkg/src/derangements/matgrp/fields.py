"""Small finite fields with table-driven arithmetic.

Elements of GF(p^f) are integers 0..p^f-1 encoding polynomial coefficient
vectors in base p (value = sum c_i * p^i).  The defining polynomial is the
lexicographically least primitive monic polynomial of degree f over GF(p),
where candidates are ordered by the integer encoding of their coefficient
vector; reproducibility of that convention matters more than Conway
compatibility, and the convention travels with any exported generator data.
"""

from __future__ import annotations

from ..numth import is_prime


class OutOfRange(ValueError):
    """Field parameters outside the supported desk-scale range."""


MAX_FIELD = 2**20


def _poly_mul_mod(a, b, mod, p):
    # polynomial coefficient lists, low degree first
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] = (out[i + j] + x * y) % p
    deg = len(mod) - 1
    for i in range(len(out) - 1, deg - 1, -1):
        c = out[i]
        if c:
            for j in range(deg + 1):
                out[i - deg + j] = (out[i - deg + j] - c * mod[j]) % p
    return out[:deg]


def _encode(coeffs, p):
    v = 0
    for c in reversed(coeffs):
        v = v * p + c
    return v


def _decode(v, p, f):
    out = []
    for _ in range(f):
        out.append(v % p)
        v //= p
    return out


def _is_primitive_poly(mod, p, f):
    # mod: monic, low-first coefficient list of length f+1
    if mod[0] == 0:
        return False
    q1 = p**f - 1
    x = [0, 1] if f > 1 else [1 % p]
    # fast check: order of x modulo (mod) equals p^f - 1; also catches
    # reducibility, since a zero divisor can never have full order
    acc = [1]
    seen = 0
    cur = x[:]
    # compute x^q1 and x^(q1 / r) for prime r | q1 via repeated squaring
    def poly_pow(base, e):
        result = [1]
        b = base[:]
        while e:
            if e & 1:
                result = _poly_mul_mod(result, b, mod, p)
            b = _poly_mul_mod(b, b, mod, p)
            e >>= 1
        return result

    if poly_pow(x, q1) != [1] + [0] * (f - 1):
        return False
    from ..numth import factor

    for r in factor(q1).entries:
        res = poly_pow(x, q1 // r)
        if res == [1] + [0] * (f - 1):
            return False
    return True


_FIELD_CACHE: dict[tuple[int, int], "Field"] = {}


class Field:
    """GF(p^f) with exp/log multiplication tables."""

    def __init__(self, p, f, _poly=None):
        if not is_prime(p):
            raise OutOfRange(f"{p} is not prime")
        if f < 1 or p**f > MAX_FIELD:
            raise OutOfRange(f"GF({p}^{f}) outside supported range")
        self.p = p
        self.f = f
        self.q = p**f
        if _poly is None:
            _poly = self._least_primitive_poly()
        self.poly = tuple(_poly)
        self._build_tables()

    def _least_primitive_poly(self):
        p, f = self.p, self.f
        if f == 1:
            # x - g for the least primitive root g; irrelevant to arithmetic
            g = next(g for g in range(1, p)
                     if all(pow(g, (p - 1) // r, p) != 1
                            for r in _prime_divisors(p - 1)))
            return [(-g) % p, 1]
        for low in range(p**f):
            cand = _decode(low, p, f) + [1]
            if _is_primitive_poly(cand, p, f):
                return cand
        raise AssertionError("no primitive polynomial found")

    def _build_tables(self):
        p, f, q = self.p, self.f, self.q
        exp = [0] * (q - 1)
        log = [0] * q
        if f == 1:
            g = (-self.poly[0]) % p
            acc = 1
            for i in range(q - 1):
                exp[i] = acc
                log[acc] = i
                acc = acc * g % p
        else:
            acc = [1] + [0] * (f - 1)
            x = [0, 1] + [0] * (f - 2)
            for i in range(q - 1):
                v = _encode(acc, p)
                exp[i] = v
                log[v] = i
                acc = _poly_mul_mod(acc, x, list(self.poly), p)
        self.exp = exp
        self.log = log
        # addition: coefficientwise mod p; table for small q, else on demand
        if q <= 4096:
            if p == 2:
                self._add_table = None  # xor is enough
            else:
                self._add_table = [
                    [self._add_slow(a, b) for b in range(q)] for a in range(q)]
        else:
            self._add_table = None
        self.frob_map = tuple(self.pow(a, p) for a in range(q))

    def _add_slow(self, a, b):
        p = self.p
        out = 0
        mult = 1
        while a or b:
            out += ((a % p + b % p) % p) * mult
            a //= p
            b //= p
            mult *= p
        return out

    # -- arithmetic on encoded elements ------------------------------------
    def add(self, a, b):
        if self.p == 2:
            return a ^ b
        if self._add_table is not None:
            return self._add_table[a][b]
        return self._add_slow(a, b)

    def neg(self, a):
        if self.p == 2:
            return a
        return self._neg_slow(a)

    def _neg_slow(self, a):
        p = self.p
        out = 0
        mult = 1
        while a:
            out += ((-(a % p)) % p) * mult
            a //= p
            mult *= p
        return out

    def sub(self, a, b):
        return self.add(a, self.neg(b))

    def mul(self, a, b):
        if a == 0 or b == 0:
            return 0
        return self.exp[(self.log[a] + self.log[b]) % (self.q - 1)]

    def inv(self, a):
        if a == 0:
            raise ZeroDivisionError("inverse of 0")
        return self.exp[(-self.log[a]) % (self.q - 1)]

    def pow(self, a, k):
        if a == 0:
            if k == 0:
                return 1
            if k < 0:
                raise ZeroDivisionError
            return 0
        return self.exp[(self.log[a] * k) % (self.q - 1)]

    def frob(self, a, times=1):
        """Frobenius a -> a^(p^times)."""
        for _ in range(times % self.f if self.f > 1 else 0):
            a = self.frob_map[a]
        return a

    def element_order(self, a):
        if a == 0:
            raise ZeroDivisionError
        from math import gcd

        return (self.q - 1) // gcd(self.log[a], self.q - 1)

    @property
    def gen(self):
        """A fixed primitive element (the class of x for f > 1)."""
        return self.exp[1]

    def elements(self):
        return range(self.q)

    def trace_to_prime(self, a):
        t = 0
        cur = a
        for _ in range(self.f):
            t = self.add(t, cur)
            cur = self.frob_map[cur]
        return t

    def __repr__(self):
        return f"GF({self.p}^{self.f})" if self.f > 1 else f"GF({self.p})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.p, self.f) == (other.p, other.f)

    def __hash__(self):
        return hash((self.p, self.f))


def _prime_divisors(n):
    from ..numth import factor

    return factor(n).primes()


def make_field(p: int, f: int) -> Field:
    """GF(p^f) with the documented least-primitive-polynomial convention."""
    key = (p, f)
    if key not in _FIELD_CACHE:
        _FIELD_CACHE[key] = Field(p, f)
    return _FIELD_CACHE[key]


def embedding(small: Field, big: Field) -> list[int]:
    """Embedding table GF(p^f) -> GF(p^(fk)) as a ring homomorphism.

    Maps the class of x in `small` to the least root of small.poly in `big`;
    deterministic, cached on the big field.
    """
    if small.p != big.p or big.f % small.f != 0:
        raise OutOfRange("no subfield embedding")
    cache = getattr(big, "_embeddings", None)
    if cache is None:
        cache = big._embeddings = {}
    if small.f in cache:
        return cache[small.f]
    if small.f == 1:
        table = [a % small.p for a in range(small.p)]
        cache[1] = table
        return table
    root = None
    for cand in range(big.q):
        acc = 0
        power = 1
        for c in small.poly:
            if c:
                acc = big.add(acc, big.mul(c % big.p, power))
            power = big.mul(power, cand)
        if acc == 0:
            root = cand
            break
    assert root is not None
    table = [0] * small.q
    for v in range(small.q):
        coeffs = _decode(v, small.p, small.f)
        acc = 0
        power = 1
        for c in coeffs:
            if c:
                acc = big.add(acc, big.mul(c, power))
            power = big.mul(power, root)
        table[v] = acc
    # sanity: multiplicative on the generator
    g = small.gen
    assert table[small.mul(g, g)] == big.mul(table[g], table[g])
    cache[small.f] = table
    return table
