from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from septic_index.intpoly import IntPoly
from septic_index.polygon import (
    Side, count_points_under, lower_hull, phi_expansion, phi_index, principal_polygon,
    residual_polynomials,
)

EXAMPLE = IntPoly.parse("x^9+54*x+134")


def test_worked_example_development():
    # [PAPER] development of x^9 + 54x + 134 in powers of x + 2
    exp = phi_expansion(EXAMPLE, IntPoly((2, 1)), 3)
    assert [c[0] for c in exp.coeffs] == [-486, 2358, -4608, 5376, -4032, 2016, -672, 144, -18, 1]
    assert exp.vals == (5, 2, 2, 1, 2, 2, 1, 2, 2, 0)


def test_worked_example_polygon():
    exp = phi_expansion(EXAMPLE, IntPoly((2, 1)), 3)
    poly = principal_polygon(exp)
    assert poly.vertices == [(0, 5), (1, 2), (3, 1), (9, 0)]
    assert [s.slope for s in poly] == [Fraction(-3), Fraction(-1, 2), Fraction(-1, 6)]
    assert [s.degree for s in poly] == [1, 1, 1]
    assert phi_index(exp, poly) == 4
    assert all(r.degree == 1 for r in residual_polynomials(exp, poly))


def test_side_invariants():
    s = Side((0, 6), (4, 0))
    assert (s.length, s.height, s.degree, s.ram, s.h) == (4, 6, 2, 2, 3)
    assert s.slope == Fraction(-3, 2)
    assert s.lattice_points() == [(0, 6), (2, 3), (4, 0)]


def test_phi_checks():
    with pytest.raises(ValueError):
        phi_expansion(EXAMPLE, IntPoly((1, 2)), 3)
    with pytest.raises(ValueError):
        phi_expansion(EXAMPLE, IntPoly((1,)), 3)


def test_nonlinear_phi_expansion():
    # x^4 + 4 in powers of x^2 + 1 over 2
    F = IntPoly.parse("x^4+4")
    exp = phi_expansion(F, IntPoly.parse("x^2+1"), 2)
    assert exp.reconstruct() == F
    assert all(c.is_zero() or c.degree < 2 for c in exp.coeffs)


def test_side_not_on_polygon():
    from septic_index.polygon import residual_polynomial
    exp = phi_expansion(EXAMPLE, IntPoly((2, 1)), 3)
    with pytest.raises(ValueError):
        residual_polynomial(exp, Side((0, 5), (9, 0)))


# one point per abscissa, as in a development
point_sets = st.dictionaries(st.integers(0, 12), st.integers(0, 15), min_size=1).map(
    lambda d: sorted(d.items()))


@given(point_sets)
def test_lower_hull_is_convex_and_below(points):
    hull = lower_hull(points)
    assert hull == sorted(hull)
    slopes = [Fraction(b[1] - a[1], b[0] - a[0]) for a, b in zip(hull, hull[1:])]
    assert slopes == sorted(slopes) and len(set(slopes)) == len(slopes)
    for px, py in points:
        for a, b in zip(hull, hull[1:]):
            if a[0] <= px <= b[0]:
                # on or above the segment
                assert (py - a[1]) * (b[0] - a[0]) >= (b[1] - a[1]) * (px - a[0])


monic = st.lists(st.integers(-300, 300), min_size=1, max_size=9).map(lambda c: IntPoly(c + [1]))


@given(monic, st.sampled_from([2, 3, 5]), st.integers(-6, 6))
def test_expansion_reconstructs(F, p, s):
    exp = phi_expansion(F, IntPoly((-s, 1)), p)
    assert exp.reconstruct() == F


@given(monic, st.sampled_from([2, 3, 5]), st.integers(-6, 6))
def test_principal_polygon_invariants(F, p, s):
    exp = phi_expansion(F, IntPoly((-s, 1)), p)
    poly = principal_polygon(exp)
    if not poly.sides:
        return
    assert poly.vertices[-1][1] == 0 or poly.vertices[-1][1] < poly.vertices[0][1]
    assert all(side.slope < 0 for side in poly)
    # vertices are actual points of the cloud
    assert set(poly.vertices) <= set(exp.points())
    for r in residual_polynomials(exp, poly):
        assert r.degree == r.side.degree  # end coefficients are nonzero residues


@given(monic, st.sampled_from([2, 3]))
def test_points_under_brute_force(F, p):
    exp = phi_expansion(F, IntPoly((0, 1)), p)
    poly = principal_polygon(exp)
    brute = 0
    for side in poly:
        (x0, y0), (x1, y1) = side.start, side.end
        for x in range(max(x0, 1), x1):
            for y in range(1, y0 + 1):
                if Fraction(y) <= y0 + Fraction(y1 - y0, x1 - x0) * (x - x0):
                    brute += 1
    assert count_points_under(poly) == brute
