"""Polynomials over prime fields F_p and their extensions F_p[x]/(phi).

A single :class:`Poly` class carries coefficients in either a
:class:`PrimeField` (elements are ints in ``[0, p)``) or an
:class:`ExtensionField` (elements are length-``m`` tuples of residues, i.e.
polynomials reduced modulo the field's defining polynomial).

Factorization is the usual three-stage pipeline: square-free decomposition,
distinct-degree splitting, then randomized equal-degree splitting
(Cantor-Zassenhaus, with the trace map in characteristic 2).
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .intpoly import IntPoly, format_poly


def _rng(seed) -> random.Random:
    if isinstance(seed, random.Random):
        return seed
    return random.Random(0 if seed is None else seed)


@dataclass(frozen=True)
class PrimeField:
    p: int

    @property
    def char(self) -> int:
        return self.p

    @property
    def degree(self) -> int:
        return 1

    @property
    def order(self) -> int:
        return self.p

    @property
    def zero(self) -> int:
        return 0

    @property
    def one(self) -> int:
        return 1

    def __call__(self, v: int) -> int:
        return v % self.p

    def is_zero(self, a: int) -> bool:
        return a == 0

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def neg(self, a: int) -> int:
        return -a % self.p

    def mul(self, a: int, b: int) -> int:
        return a * b % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, -1, self.p)

    def pow(self, a: int, k: int) -> int:
        return pow(a, k, self.p)

    def pth_root(self, a: int) -> int:
        return a

    def random(self, rng: random.Random) -> int:
        return rng.randrange(self.p)

    def elements(self) -> Iterator[int]:
        return iter(range(self.p))

    def format(self, a: int) -> str:
        return str(a)


@dataclass(frozen=True)
class ExtensionField:
    """F_p[t]/(modulus) for a monic irreducible modulus over F_p."""

    p: int
    modulus: tuple[int, ...]  # monic, low degree first

    @classmethod
    def from_poly(cls, phi: "Poly") -> "ExtensionField":
        if not isinstance(phi.field, PrimeField):
            raise TypeError("modulus must live over a prime field")
        if phi.degree < 1 or phi.lc != 1:
            raise ValueError("modulus must be monic of positive degree")
        return cls(phi.field.p, tuple(phi.coeffs))

    @property
    def char(self) -> int:
        return self.p

    @property
    def degree(self) -> int:
        return len(self.modulus) - 1

    @property
    def order(self) -> int:
        return self.p**self.degree

    @property
    def zero(self) -> tuple[int, ...]:
        return (0,) * self.degree

    @property
    def one(self) -> tuple[int, ...]:
        return (1,) + (0,) * (self.degree - 1)

    def __call__(self, v) -> tuple[int, ...]:
        """Coerce an int, a residue sequence, or an F_p Poly into the field."""
        if isinstance(v, int):
            return ((v % self.p),) + (0,) * (self.degree - 1)
        if isinstance(v, Poly):
            v = v.coeffs
        return self._reduce([c % self.p for c in v])

    def _reduce(self, c: list[int]) -> tuple[int, ...]:
        m = self.degree
        p = self.p
        c = [x % p for x in c]
        for k in range(len(c) - 1, m - 1, -1):
            t = c[k]
            if t:
                for j in range(m + 1):
                    c[k - m + j] = (c[k - m + j] - t * self.modulus[j]) % p
        c = c[:m] + [0] * (m - len(c))
        return tuple(c)

    def is_zero(self, a) -> bool:
        return not any(a)

    def add(self, a, b):
        p = self.p
        return tuple((x + y) % p for x, y in zip(a, b))

    def sub(self, a, b):
        p = self.p
        return tuple((x - y) % p for x, y in zip(a, b))

    def neg(self, a):
        return tuple(-x % self.p for x in a)

    def mul(self, a, b):
        if not any(a) or not any(b):
            return self.zero
        out = [0] * (2 * self.degree - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    out[i + j] += x * y
        return self._reduce(out)

    def pow(self, a, k: int):
        result = self.one
        while k:
            if k & 1:
                result = self.mul(result, a)
            a = self.mul(a, a)
            k >>= 1
        return result

    def inv(self, a):
        if self.is_zero(a):
            raise ZeroDivisionError("inverse of zero")
        return self.pow(a, self.order - 2)

    def pth_root(self, a):
        return self.pow(a, self.order // self.p)

    def random(self, rng: random.Random):
        return tuple(rng.randrange(self.p) for _ in range(self.degree))

    def elements(self):
        return itertools.product(range(self.p), repeat=self.degree)

    def format(self, a) -> str:
        s = format_poly(a, "t")
        return s if sum(1 for x in a if x) <= 1 and " " not in s else f"({s})"


FqField = ExtensionField


class Poly:
    """Polynomial over a finite field; coefficients low degree first."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field, coeffs: Sequence = ()):
        c = list(coeffs)
        while c and field.is_zero(c[-1]):
            c.pop()
        self.field = field
        self.coeffs = tuple(c)

    @classmethod
    def over_fp(cls, p: int, coeffs: Sequence[int]) -> "Poly":
        F = PrimeField(p)
        return cls(F, [F(c) for c in coeffs])

    @classmethod
    def gen(cls, field) -> "Poly":
        return cls(field, [field.zero, field.one])

    @classmethod
    def const(cls, field, c) -> "Poly":
        return cls(field, [c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self):
        return self.coeffs[-1] if self.coeffs else self.field.zero

    @property
    def p(self) -> int:
        return self.field.char

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_one(self) -> bool:
        return self.degree == 0 and self.coeffs[0] == self.field.one

    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lc == self.field.one

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __getitem__(self, i: int):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else self.field.zero

    def __add__(self, other: "Poly") -> "Poly":
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, [F.add(self[i], other[i]) for i in range(n)])

    def __sub__(self, other: "Poly") -> "Poly":
        F = self.field
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly(F, [F.sub(self[i], other[i]) for i in range(n)])

    def __neg__(self) -> "Poly":
        return Poly(self.field, [self.field.neg(c) for c in self.coeffs])

    def __mul__(self, other: "Poly") -> "Poly":
        F = self.field
        if self.is_zero() or other.is_zero():
            return Poly(F)
        out = [F.zero] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if F.is_zero(a):
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] = F.add(out[i + j], F.mul(a, b))
        return Poly(F, out)

    def scale(self, c) -> "Poly":
        F = self.field
        return Poly(F, [F.mul(c, a) for a in self.coeffs])

    def __pow__(self, k: int) -> "Poly":
        result = Poly.const(self.field, self.field.one)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "Poly") -> tuple["Poly", "Poly"]:
        F = self.field
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        d = other.degree
        if len(rem) - 1 < d:
            return Poly(F), self
        inv = F.inv(other.lc)
        quo = [F.zero] * (len(rem) - d)
        for k in range(len(rem) - 1 - d, -1, -1):
            c = F.mul(rem[k + d], inv)
            quo[k] = c
            if not F.is_zero(c):
                for j, g in enumerate(other.coeffs):
                    rem[k + j] = F.sub(rem[k + j], F.mul(c, g))
        return Poly(F, quo), Poly(F, rem[:d])

    def __floordiv__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[0]

    def __mod__(self, other: "Poly") -> "Poly":
        return divmod(self, other)[1]

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return self.scale(self.field.inv(self.lc))

    def derivative(self) -> "Poly":
        F = self.field
        return Poly(F, [_times(F, i, c) for i, c in enumerate(self.coeffs)][1:])

    def powmod(self, k: int, modulus: "Poly") -> "Poly":
        result = Poly.const(self.field, self.field.one) % modulus
        base = self % modulus
        while k:
            if k & 1:
                result = (result * base) % modulus
            base = (base * base) % modulus
            k >>= 1
        return result

    def __call__(self, x):
        F = self.field
        acc = F.zero
        for c in reversed(self.coeffs):
            acc = F.add(F.mul(acc, x), c)
        return acc

    def to_intpoly(self) -> IntPoly:
        """Lift an F_p polynomial to Z[x] with coefficients in [0, p)."""
        if not isinstance(self.field, PrimeField):
            raise TypeError("only F_p polynomials lift to Z[x]")
        return IntPoly(self.coeffs)

    def format(self, var: str = "x") -> str:
        if isinstance(self.field, PrimeField):
            return format_poly(self.coeffs, var)
        return _format_fq(self, var)

    def __str__(self) -> str:
        return self.format("x" if isinstance(self.field, PrimeField) else "y")

    def __repr__(self) -> str:
        return f"Poly<{self.field}>({str(self)!r})"


def _times(F, n: int, c):
    """n * c for a non-negative integer n."""
    if isinstance(F, PrimeField):
        return n * c % F.p
    return F.mul(F(n), c)


def _format_fq(f: Poly, var: str = "y") -> str:
    F = f.field
    terms = []
    for k in range(f.degree, -1, -1):
        c = f.coeffs[k]
        if F.is_zero(c):
            continue
        mono = "" if k == 0 else (var if k == 1 else f"{var}^{k}")
        cs = F.format(c)
        if not mono:
            terms.append(cs)
        elif c == F.one:
            terms.append(mono)
        else:
            terms.append(f"{cs}*{mono}")
    return " + ".join(terms) if terms else "0"


def gcd(f: Poly, g: Poly) -> Poly:
    while not g.is_zero():
        f, g = g, f % g
    return f.monic()


def reduce_mod_p(F: IntPoly, p: int) -> Poly:
    return Poly.over_fp(p, F.coeffs)


def _pth_root_poly(f: Poly) -> Poly:
    F = f.field
    p = F.char
    return Poly(F, [F.pth_root(f.coeffs[i]) for i in range(0, len(f.coeffs), p)])


def squarefree_decomposition(f: Poly) -> list[tuple[Poly, int]]:
    """Monic square-free factors with multiplicities; handles f' = 0."""
    if f.is_zero():
        raise ValueError("zero polynomial")
    f = f.monic()
    if f.degree == 0:
        return []
    out: list[tuple[Poly, int]] = []
    c = gcd(f, f.derivative())
    w = f // c
    i = 1
    while not w.is_one():
        y = gcd(w, c)
        fac = w // y
        if not fac.is_one():
            out.append((fac.monic(), i))
        w = y
        c = c // y
        i += 1
    if not c.is_one():
        p = f.field.char
        for g, e in squarefree_decomposition(_pth_root_poly(c.monic())):
            out.append((g, e * p))
    return out


def distinct_degree(f: Poly) -> list[tuple[Poly, int]]:
    """Split a monic square-free ``f`` into products of same-degree irreducibles."""
    F = f.field
    q = F.order
    x = Poly.gen(F)
    out = []
    h = x % f
    d = 0
    while f.degree >= 2 * (d + 1):
        d += 1
        h = h.powmod(q, f)
        g = gcd(f, h - x)
        if not g.is_one():
            out.append((g, d))
            f = f // g
            h = h % f
    if f.degree > 0:
        out.append((f.monic(), f.degree))
    return out


def _random_poly(F, deg: int, rng: random.Random) -> Poly:
    return Poly(F, [F.random(rng) for _ in range(deg + 1)])


def equal_degree(f: Poly, d: int, rng: random.Random) -> list[Poly]:
    """Irreducible degree-``d`` factors of a monic square-free ``f``."""
    if f.degree == d:
        return [f.monic()]
    F = f.field
    q = F.order
    while True:
        r = _random_poly(F, f.degree - 1, rng)
        if r.degree < 1:
            continue
        if F.char == 2:
            # absolute trace to F_2: sum of r^(2^i), i < log2(q^d)
            t = r % f
            acc = t
            for _ in range(d * F.degree - 1):
                t = (t * t) % f
                acc = acc + t
            g = gcd(f, acc)
        else:
            g = gcd(f, r.powmod((q**d - 1) // 2, f) - Poly.const(F, F.one))
        if 0 < g.degree < f.degree:
            return equal_degree(g, d, rng) + equal_degree(f // g, d, rng)


def _sort_key(f: Poly):
    return (f.degree, [tuple(c) if isinstance(c, tuple) else c for c in f.coeffs])


def factor(f: Poly, seed=None) -> list[tuple[Poly, int]]:
    """Complete factorization into monic irreducibles with multiplicities."""
    if f.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    rng = _rng(seed)
    out: dict[Poly, int] = {}
    for sq, e in squarefree_decomposition(f):
        for g, d in distinct_degree(sq):
            for h in equal_degree(g, d, rng):
                out[h] = out.get(h, 0) + e
    return sorted(out.items(), key=lambda t: (_sort_key(t[0]), t[1]))


def factor_fp(f: Poly, seed=None) -> list[tuple[Poly, int]]:
    if not isinstance(f.field, PrimeField):
        raise TypeError("factor_fp expects a polynomial over F_p")
    return factor(f, seed)


def factor_fq(g: Poly, seed=None) -> list[tuple[Poly, int]]:
    return factor(g, seed)


def is_separable(g: Poly) -> bool:
    if g.is_zero():
        raise ValueError("zero polynomial")
    return gcd(g, g.derivative()).degree == 0


def is_irreducible(f: Poly) -> bool:
    """Rabin-style test: no factor of degree <= n/2 and x^(q^n) = x mod f."""
    if f.degree < 1:
        return False
    f = f.monic()
    F = f.field
    q = F.order
    x = Poly.gen(F)
    h = x % f
    for _ in range(f.degree // 2):
        h = h.powmod(q, f)
        if not gcd(f, h - x).is_one():
            return False
    return True


def degree_pattern(f: Poly, seed=None) -> tuple[int, ...]:
    """Sorted degrees of the irreducible factors (with multiplicity)."""
    out = []
    for g, e in factor(f, seed):
        out.extend([g.degree] * e)
    return tuple(sorted(out))
