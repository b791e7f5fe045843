"""Exact integer arithmetic: valuations, irreducible counts, resultants."""

from __future__ import annotations

from math import gcd, isqrt
from typing import NamedTuple

from .intpoly import IntPoly


class Valuation(NamedTuple):
    k: int
    cofactor: int


def pval(m: int, p: int) -> Valuation:
    """Return ``(k, m / p^k)`` with ``p`` not dividing the cofactor."""
    if m == 0:
        raise ValueError("valuation of zero undefined")
    if p < 2:
        raise ValueError(f"invalid prime {p}")
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return Valuation(k, m)


def nu(m: int, p: int) -> float | int:
    """p-adic valuation with ``nu(0) == inf``."""
    if m == 0:
        return float("inf")
    return pval(m, p).k


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    for d in range(3, isqrt(n) + 1, 2):
        if n % d == 0:
            return False
    return True


def primes_up_to(n: int) -> list[int]:
    return [q for q in range(2, n + 1) if is_prime(q)]


def factorize(n: int) -> dict[int, int]:
    """Trial-division factorization of ``|n|``; inputs are desk-scale."""
    n = abs(n)
    if n == 0:
        raise ValueError("cannot factor zero")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def mobius(n: int) -> int:
    fac = factorize(n)
    if any(e > 1 for e in fac.values()):
        return 0
    return -1 if len(fac) % 2 else 1


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


def count_monic_irreducibles(p: int, f: int) -> int:
    """Number of monic irreducible polynomials of degree ``f`` over F_p."""
    if f < 1:
        raise ValueError("degree must be positive")
    total = sum(mobius(d) * p ** (f // d) for d in divisors(f))
    return total // f


def _bareiss_det(rows: list[list[int]]) -> int:
    m = [row[:] for row in rows]
    n = len(m)
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k] != 0:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
            m[i][k] = 0
        prev = pivot
    return sign * m[n - 1][n - 1]


def sylvester_matrix(F: IntPoly, G: IntPoly) -> list[list[int]]:
    m, n = F.degree, G.degree
    size = m + n
    fh = list(reversed(F.coeffs))
    gh = list(reversed(G.coeffs))
    rows = []
    for i in range(n):
        rows.append([0] * i + fh + [0] * (size - m - 1 - i))
    for i in range(m):
        rows.append([0] * i + gh + [0] * (size - n - 1 - i))
    return rows


def resultant(F: IntPoly, G: IntPoly) -> int:
    """Res(F, G) as the Sylvester determinant (fraction-free Bareiss)."""
    if F.is_zero() or G.is_zero():
        raise ValueError("resultant of the zero polynomial")
    return _bareiss_det(sylvester_matrix(F, G))


def discriminant(F: IntPoly) -> int:
    n = F.degree
    if n < 1:
        raise ValueError("discriminant needs degree >= 1")
    if n == 1:
        return 1
    r = resultant(F, F.derivative())
    sign = -1 if (n * (n - 1) // 2) % 2 else 1
    q, rem = divmod(sign * r, F.lc)
    assert rem == 0
    return q


def trinomial_discriminant(a: int, b: int) -> int:
    """Discriminant of x^7 + a x^5 + b."""
    return -(b**4) * (7**7 * b * b + 2**2 * 5**5 * a**7)


def normalize_pair(a: int, b: int) -> tuple[int, int]:
    """Scale out primes with p^2 | a and p^7 | b (replace theta by theta/p)."""
    if a * b == 0:
        raise ValueError("a*b must be nonzero")
    g = gcd(a, b)
    for p, k in factorize(g).items():
        if k < 2:
            continue
        while pval(a, p).k >= 2 and pval(b, p).k >= 7:
            a //= p**2
            b //= p**7
    return a, b
