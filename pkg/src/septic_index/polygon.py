"""phi-adic developments, principal Newton polygons and residual polynomials.

All geometry is exact: points are integer pairs, slopes are
:class:`fractions.Fraction`, and hull turns are decided by integer cross
products.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, inf

from .arith import nu
from .fppoly import ExtensionField, Poly, PrimeField, is_separable, reduce_mod_p
from .intpoly import IntPoly

Point = tuple[int, int]


@dataclass(frozen=True)
class PhiExpansion:
    p: int
    phi: IntPoly
    coeffs: tuple[IntPoly, ...]
    vals: tuple[float, ...]  # int, or inf when the coefficient vanishes

    def reconstruct(self) -> IntPoly:
        acc = IntPoly()
        for a in reversed(self.coeffs):
            acc = acc * self.phi + a
        return acc

    def points(self) -> list[Point]:
        return [(i, int(u)) for i, u in enumerate(self.vals) if u != inf]


def phi_expansion(F: IntPoly, phi: IntPoly, p: int) -> PhiExpansion:
    """Unique development F = sum a_i(x) phi(x)^i with deg a_i < deg phi."""
    if phi.degree < 1:
        raise ValueError("phi must have positive degree")
    if not phi.is_monic():
        raise ValueError("phi must be monic")
    coeffs = []
    rest = F
    if phi.degree == 1:
        # Taylor shift is cheaper and exact for linear phi = x - s
        s = -phi[0]
        coeffs = [IntPoly((c,)) for c in F.taylor(s)]
    else:
        while not rest.is_zero():
            rest, r = divmod(rest, phi)
            coeffs.append(r)
    vals = tuple(_poly_val(a, p) for a in coeffs)
    return PhiExpansion(p, phi, tuple(coeffs), vals)


def _poly_val(a: IntPoly, p: int) -> float:
    if a.is_zero():
        return inf
    return min(nu(c, p) for c in a.coeffs if c)


@dataclass(frozen=True)
class Side:
    start: Point
    end: Point

    @property
    def length(self) -> int:
        return self.end[0] - self.start[0]

    @property
    def height(self) -> int:
        return self.start[1] - self.end[1]

    @property
    def degree(self) -> int:
        return gcd(self.length, self.height)

    @property
    def ram(self) -> int:
        """Ramification index e = l / d."""
        return self.length // self.degree

    @property
    def h(self) -> int:
        return self.height // self.degree

    @property
    def slope(self) -> Fraction:
        return Fraction(-self.height, self.length)

    def lattice_points(self) -> list[Point]:
        s, u = self.start
        return [(s + j * self.ram, u - j * self.h) for j in range(self.degree + 1)]

    def __str__(self) -> str:
        return (
            f"{self.start}->{self.end} slope {self.slope} "
            f"(l={self.length}, h={self.height}, d={self.degree}, e={self.ram})"
        )


@dataclass(frozen=True)
class NewtonPolygon:
    sides: tuple[Side, ...] = ()

    @property
    def vertices(self) -> list[Point]:
        if not self.sides:
            return []
        return [self.sides[0].start] + [s.end for s in self.sides]

    @property
    def length(self) -> int:
        return sum(s.length for s in self.sides)

    def __iter__(self):
        return iter(self.sides)

    def __len__(self) -> int:
        return len(self.sides)


def _cross(o: Point, a: Point, b: Point) -> int:
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0])


def lower_hull(points: list[Point]) -> list[Point]:
    """Monotone-chain lower convex hull; collinear points are dropped."""
    pts = sorted(set(points))
    hull: list[Point] = []
    for pt in pts:
        while len(hull) >= 2 and _cross(hull[-2], hull[-1], pt) <= 0:
            hull.pop()
        hull.append(pt)
    return hull


def principal_polygon(exp: PhiExpansion) -> NewtonPolygon:
    """Negative-slope part of the lower hull of {(i, u_i)}."""
    hull = lower_hull(exp.points())
    sides = []
    for a, b in zip(hull, hull[1:]):
        if b[1] >= a[1]:
            break
        sides.append(Side(a, b))
    return NewtonPolygon(tuple(sides))


def residue_field(phi: IntPoly, p: int):
    """F_phi = F_p[x]/(phi mod p); the prime field itself when deg phi = 1."""
    if phi.degree == 1:
        return PrimeField(p)
    return ExtensionField.from_poly(reduce_mod_p(phi, p))


def residue_coefficient(exp: PhiExpansion, i: int, field_=None):
    """(a_i / p^{u_i}) mod (p, phi) as an element of F_phi."""
    F = field_ or residue_field(exp.phi, exp.p)
    u = exp.vals[i]
    if u == inf:
        return F.zero
    q = exp.p ** int(u)
    reduced = [c // q for c in exp.coeffs[i].coeffs]
    if isinstance(F, PrimeField):
        return F(reduced[0] if reduced else 0)
    return F(reduced)


@dataclass(frozen=True)
class ResidualPolynomial:
    side: Side
    poly: Poly

    @property
    def degree(self) -> int:
        return self.poly.degree


def residual_polynomial(exp: PhiExpansion, side: Side,
                        polygon: NewtonPolygon | None = None) -> ResidualPolynomial:
    if polygon is None:
        polygon = principal_polygon(exp)
    if side not in polygon.sides:
        raise ValueError(f"side {side} is not on the principal polygon")
    F = residue_field(exp.phi, exp.p)
    coeffs = []
    for x, y in side.lattice_points():
        if x < len(exp.vals) and exp.vals[x] == y:
            coeffs.append(residue_coefficient(exp, x, F))
        else:
            coeffs.append(F.zero)
    return ResidualPolynomial(side, Poly(F, coeffs))


def residual_polynomials(exp: PhiExpansion,
                         polygon: NewtonPolygon | None = None) -> list[ResidualPolynomial]:
    if polygon is None:
        polygon = principal_polygon(exp)
    return [residual_polynomial(exp, s, polygon) for s in polygon.sides]


def count_points_under(polygon: NewtonPolygon) -> int:
    """Lattice points (x, y) with x >= 1, y >= 1 on or below the polygon."""
    total = 0
    for side in polygon.sides:
        (x0, y0), (x1, _) = side.start, side.end
        l, H = side.length, side.height
        for x in range(max(x0, 1), x1):
            # floor of y0 - H (x - x0) / l
            total += max(0, (y0 * l - H * (x - x0)) // l)
    return total


def phi_index(exp: PhiExpansion, polygon: NewtonPolygon | None = None) -> int:
    if polygon is None:
        polygon = principal_polygon(exp)
    return exp.phi.degree * count_points_under(polygon)


def is_phi_regular(exp: PhiExpansion, polygon: NewtonPolygon | None = None) -> bool:
    return all(is_separable(r.poly) for r in residual_polynomials(exp, polygon))
