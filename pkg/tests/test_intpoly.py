import pytest
import sympy
from hypothesis import given, strategies as st

from septic_index.intpoly import IntPoly, PolyParseError

x = sympy.Symbol("x")
small = st.lists(st.integers(-50, 50), max_size=8).map(IntPoly)
monic = st.lists(st.integers(-20, 20), min_size=0, max_size=4).map(lambda c: IntPoly(c + [1]))


def to_sympy(F):
    return sympy.Poly(list(reversed(F.coeffs)) or [0], x)


def test_trinomial_layout():
    assert IntPoly.trinomial(3, -5).coeffs == (-5, 0, 0, 0, 0, 3, 0, 1)
    assert IntPoly.trinomial(3, -5).degree == 7


def test_trailing_zeros_stripped():
    assert IntPoly((1, 2, 0, 0)) == IntPoly((1, 2))
    assert IntPoly((0, 0)).is_zero()


@pytest.mark.parametrize("text, coeffs", [
    ("x^9+54*x+134", (134, 54) + (0,) * 7 + (1,)),
    (" x ^ 2 - 1 ", (-1, 0, 1)),
    ("-x", (0, -1)),
    ("7", (7,)),
    ("x^7 + 867*x^5 + 68", (68, 0, 0, 0, 0, 867, 0, 1)),
    ("2*x^2 - 3*x^2", (0, 0, -1)),
])
def test_parse(text, coeffs):
    assert IntPoly.parse(text).coeffs == coeffs


@pytest.mark.parametrize("text", ["", "x^^2", "3x", "x*", "+", "x^2 ++ 1", "y"])
def test_parse_rejects(text):
    with pytest.raises(PolyParseError):
        IntPoly.parse(text)


@given(small)
def test_str_parse_round_trip(F):
    assert IntPoly.parse(str(F)) == F


@given(small, small)
def test_mul_matches_sympy(F, G):
    assert to_sympy(F * G) == to_sympy(F) * to_sympy(G)


@given(small, monic)
def test_divmod_identity(F, G):
    q, r = divmod(F, G)
    assert q * G + r == F
    assert r.is_zero() or r.degree < G.degree


def test_divmod_needs_monic():
    with pytest.raises(ValueError):
        divmod(IntPoly((1, 1)), IntPoly((1, 2)))


@given(small, st.integers(-10, 10))
def test_taylor_is_shift(F, s):
    shifted = IntPoly(F.taylor(s))
    for t in range(-3, 4):
        assert shifted(t) == F(t + s)


@given(small)
def test_derivative_matches_sympy(F):
    assert to_sympy(F.derivative()) == to_sympy(F).diff(x)
