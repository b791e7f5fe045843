"""Dense univariate polynomials with integer coefficients.

Coefficients are stored low degree first.  The zero polynomial has an empty
coefficient tuple and degree -1.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from math import comb
from typing import Iterable, Sequence


class PolyParseError(ValueError):
    pass


def _strip(coeffs: Iterable[int]) -> tuple[int, ...]:
    c = [int(v) for v in coeffs]
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


@dataclass(frozen=True)
class IntPoly:
    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Sequence[int] = ()):
        object.__setattr__(self, "coeffs", _strip(coeffs))

    @classmethod
    def x(cls) -> "IntPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: int) -> "IntPoly":
        return cls((c,))

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> "IntPoly":
        return cls([0] * k + [c])

    @classmethod
    def trinomial(cls, a: int, b: int) -> "IntPoly":
        """x^7 + a x^5 + b."""
        return cls((b, 0, 0, 0, 0, a, 0, 1))

    @classmethod
    def parse(cls, text: str) -> "IntPoly":
        return parse_poly(text)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def lc(self) -> int:
        return self.coeffs[-1] if self.coeffs else 0

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_monic(self) -> bool:
        return self.lc == 1

    def __getitem__(self, i: int) -> int:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "IntPoly | int") -> "IntPoly":
        other = _coerce(other)
        n = max(len(self), len(other))
        return IntPoly([self[i] + other[i] for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> "IntPoly":
        return IntPoly([-c for c in self.coeffs])

    def __sub__(self, other: "IntPoly | int") -> "IntPoly":
        return self + (-_coerce(other))

    def __rsub__(self, other: int) -> "IntPoly":
        return _coerce(other) - self

    def __mul__(self, other: "IntPoly | int") -> "IntPoly":
        other = _coerce(other)
        if self.is_zero() or other.is_zero():
            return IntPoly()
        out = [0] * (len(self) + len(other) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "IntPoly":
        result = IntPoly((1,))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "IntPoly") -> tuple["IntPoly", "IntPoly"]:
        """Division by a monic divisor; exact over the integers."""
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        if not other.is_monic():
            raise ValueError("divisor must be monic")
        rem = list(self.coeffs)
        dq = other.degree
        if len(rem) - 1 < dq:
            return IntPoly(), self
        quo = [0] * (len(rem) - dq)
        for k in range(len(rem) - 1 - dq, -1, -1):
            c = rem[k + dq]
            quo[k] = c
            if c:
                for j, g in enumerate(other.coeffs):
                    rem[k + j] -= c * g
        return IntPoly(quo), IntPoly(rem[:dq])

    def __floordiv__(self, other: "IntPoly") -> "IntPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "IntPoly") -> "IntPoly":
        return divmod(self, other)[1]

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def derivative(self) -> "IntPoly":
        return IntPoly([i * c for i, c in enumerate(self.coeffs)][1:])

    def taylor(self, s: int) -> list[int]:
        """Coefficients of F(x + s), i.e. F^(i)(s)/i!."""
        n = len(self.coeffs)
        return [
            sum(comb(j, i) * self.coeffs[j] * s ** (j - i) for j in range(i, n))
            for i in range(n)
        ]

    def content(self) -> int:
        from math import gcd

        g = 0
        for c in self.coeffs:
            g = gcd(g, c)
        return g

    def __str__(self) -> str:
        return format_poly(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({str(self)!r})"


def _coerce(v: "IntPoly | int") -> IntPoly:
    if isinstance(v, IntPoly):
        return v
    return IntPoly((v,))


def format_poly(coeffs: Sequence[int], var: str = "x") -> str:
    terms = []
    for k in range(len(coeffs) - 1, -1, -1):
        c = coeffs[k]
        if not c:
            continue
        sign = "-" if c < 0 else "+"
        m = abs(c)
        if k == 0:
            body = str(m)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if m == 1 else f"{m}*{mono}"
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


_TERM = re.compile(r"([+-])(\d*)(\*?)(x(?:\^(\d+))?)?")


def parse_poly(text: str) -> IntPoly:
    """Parse sums of terms ``c*x^k``, ``x^k``, ``x`` and integer constants.

    >>> parse_poly("x^9+54*x+134").coeffs[:2]
    (134, 54)
    """
    s = "".join(text.split())
    if not s:
        raise PolyParseError("empty polynomial")
    if s[0] not in "+-":
        s = "+" + s
    coeffs: dict[int, int] = {}
    pos = 0
    while pos < len(s):
        m = _TERM.match(s, pos)
        if not m or m.end() == pos + 1:
            raise PolyParseError(f"cannot parse term at position {pos}: {text!r}")
        sign, digits, star, mono, exp = m.groups()
        if star and not mono:
            raise PolyParseError(f"dangling '*' at position {pos}: {text!r}")
        if not digits and not mono:
            raise PolyParseError(f"empty term at position {pos}: {text!r}")
        if digits and mono and not star:
            raise PolyParseError(f"missing '*' between coefficient and x: {text!r}")
        c = int(digits) if digits else 1
        k = (int(exp) if exp else 1) if mono else 0
        coeffs[k] = coeffs.get(k, 0) + (c if sign == "+" else -c)
        pos = m.end()
    deg = max(coeffs)
    return IntPoly([coeffs.get(k, 0) for k in range(deg + 1)])
