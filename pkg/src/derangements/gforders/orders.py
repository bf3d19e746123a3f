"""Exact orders of classical groups and prime spectra.

Simple-group orders follow the standard product formulas with the usual
gcd denominators; the raw matrix-group orders (GL, GU, Sp, GO) are kept
separate because the subgroup catalog builds with them.
"""

from __future__ import annotations

from math import gcd, prod

from ..groupid import GroupId, InvalidParameters
from ..numth import Budget, factor


def gl_order(n, q):
    return q ** (n * (n - 1) // 2) * prod(q**i - 1 for i in range(1, n + 1))


def sl_order(n, q):
    return gl_order(n, q) // (q - 1)


def gu_order(n, q):
    return q ** (n * (n - 1) // 2) * prod(q**i - (-1) ** i for i in range(1, n + 1))


def su_order(n, q):
    return gu_order(n, q) // (q + 1)


def sp_order(n, q):
    m = n // 2
    return q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))


def go_order(n, q, eps):
    """Order of the full orthogonal group O^eps_n(q)."""
    if n % 2 == 1:
        m = (n - 1) // 2
        base = q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))
        return 2 * base if q % 2 else base
    m = n // 2
    e = 1 if eps == "+" else -1
    return 2 * q ** (m * (m - 1)) * (q**m - e) * \
        prod(q ** (2 * i) - 1 for i in range(1, m))


def simple_order(family, n, q):
    """Order of the simple classical group, no working-set restriction."""
    if family == "L":
        return sl_order(n, q) // gcd(n, q - 1)
    if family == "U":
        return su_order(n, q) // gcd(n, q + 1)
    if family == "S":
        return sp_order(n, q) // gcd(2, q - 1)
    if family == "Oo":
        m = (n - 1) // 2
        base = q ** (m * m) * prod(q ** (2 * i) - 1 for i in range(1, m + 1))
        return base // gcd(2, q - 1)
    if family in ("O+", "O-"):
        m = n // 2
        e = 1 if family == "O+" else -1
        base = q ** (m * (m - 1)) * (q**m - e) * \
            prod(q ** (2 * i) - 1 for i in range(1, m))
        return base // gcd(4, q**m - e)
    raise InvalidParameters(f"unknown family {family}")


def order(g: GroupId) -> int:
    """Exact order of the simple group g."""
    return simple_order(g.family, g.n, g.q.q)


def center_order(family, n, q):
    """Order of the center of the corresponding quasisimple matrix group
    (SL, SU, Sp, Omega)."""
    if family == "L":
        return gcd(n, q - 1)
    if family == "U":
        return gcd(n, q + 1)
    if family == "S":
        return gcd(2, q - 1)
    if family == "Oo":
        return 1
    m = n // 2
    e = 1 if family == "O+" else -1
    # |Omega : POmega| = (4, q^m - e) / (2, q - 1)
    return gcd(4, q**m - e) // gcd(2, q - 1)


def spectrum(n: int, budget=None) -> set[int]:
    """Prime support of n."""
    if n == 1:
        return set()
    return factor(n, budget if budget is not None else Budget()).primes()


def pi(n: int, budget=None) -> int:
    """Number of distinct prime divisors."""
    return len(spectrum(n, budget))


def gaussian_binomial(n, k, q):
    num = prod(q**i - 1 for i in range(n - k + 1, n + 1))
    den = prod(q**i - 1 for i in range(1, k + 1))
    assert num % den == 0
    return num // den


def ts_count_symplectic(n, k, q):
    """Totally singular k-spaces of a symplectic space of dimension n."""
    num = prod(q ** (n - i + 1) - q ** (i - 1) for i in range(1, k + 1))
    den = prod(q**k - q ** (i - 1) for i in range(1, k + 1))
    assert num % den == 0
    return num // den


def ts_count_unitary(n, k, q):
    """Totally singular k-spaces of a unitary space of dimension n over
    GF(q^2), by counting ordered isotropic frames."""

    def iso_vectors(m):
        return (q**m - (-1) ** m) * (q ** (m - 1) - (-1) ** (m - 1))

    num = prod(q ** (2 * i) * iso_vectors(n - 2 * i) for i in range(k))
    den = prod(q ** (2 * k) - q ** (2 * i) for i in range(k))
    assert num % den == 0
    return num // den


def ts_count_orthogonal(n, k, q, eps):
    """Totally singular k-spaces of an orthogonal space (one family when
    k = n/2 in the hyperbolic case)."""
    if eps == "o":
        m = (n - 1) // 2
        num = prod(q ** (2 * (m - i)) - 1 for i in range(k))
    elif eps == "+":
        m = n // 2
        num = prod((q ** (m - i) - 1) * (q ** (m - 1 - i) + 1) for i in range(k))
    else:
        m = n // 2
        num = prod((q ** (m - i) + 1) * (q ** (m - 1 - i) - 1) for i in range(k))
    den = prod(q ** (i + 1) - 1 for i in range(k))
    assert num % den == 0
    count = num // den
    if eps == "+" and k == n // 2:
        assert count % 2 == 0
        count //= 2
    return count


def singular_point_count(n, q, eps):
    """Singular projective points of an orthogonal space."""
    return ts_count_orthogonal(n, 1, q, eps)


def nonsingular_point_count(n, q, eps, perp_type=None):
    """Nonsingular projective points; for odd q the class with prescribed
    type of the perpendicular hyperplane (perp_type in '+', '-', or None
    for both classes together)."""
    total = (q**n - 1) // (q - 1) - singular_point_count(n, q, eps)
    if q % 2 == 0 or perp_type is None:
        return total
    if eps == "o":
        m = (n - 1) // 2
        plus = q**m * (q**m + 1) // 2
        minus = q**m * (q**m - 1) // 2
        assert plus + minus == total
        return plus if perp_type == "+" else minus
    # even-dimensional ambient: the two square classes have equal size
    assert total % 2 == 0
    return total // 2
