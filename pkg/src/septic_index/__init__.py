"""Prime factorization shapes and the field index of septic trinomial fields."""

from .arith import count_monic_irreducibles, discriminant, normalize_pair, pval, resultant, trinomial_discriminant
from .intpoly import IntPoly, PolyParseError
from .ore import FactorizationShape, PrimeReport, dedekind_divides_index, ore_shape, shift_search
from .polygon import NewtonPolygon, phi_expansion, principal_polygon, residual_polynomials
from .septic import check_irreducible, classify, cross_validate, septic_index

__all__ = [
    "FactorizationShape", "IntPoly", "NewtonPolygon", "PolyParseError", "PrimeReport",
    "check_irreducible", "classify", "count_monic_irreducibles", "cross_validate",
    "dedekind_divides_index", "discriminant", "normalize_pair", "ore_shape",
    "phi_expansion", "principal_polygon", "pval", "residual_polynomials",
    "resultant", "septic_index", "shift_search", "trinomial_discriminant",
]

__version__ = "0.1.0"
