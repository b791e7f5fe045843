import itertools
import random

import pytest
import sympy

from septic_index.arith import nu
from septic_index.intpoly import IntPoly
from septic_index.ore import FactorizationShape, ore_shape
from septic_index.septic import (
    ROW_SHIFTS, IrreducibilityUnknownError, ReducibleError, TABLES, admissible_shifts,
    check_irreducible, classify, cross_validate, row, sample_row, septic_index, shifted_report,
    table1,
)

S = FactorizationShape.parse
x = sympy.Symbol("x")


# irreducibility ------------------------------------------------------------


def test_reducible_witness():
    irr = check_irreducible(1, -2)
    assert irr.status == "proven_reducible" and irr.witness == "x - 1"


def test_irreducibility_against_sympy():
    # [DERIVED] sympy's factorization over Z as the oracle
    rng = random.Random(5)
    cases = [(a, b) for a, b in ((rng.randint(-60, 60), rng.randint(-60, 60)) for _ in range(300)) if a and b]
    cases += [(1, -2), (-1, 1), (2, -3), (-2, 1), (3, -4)]
    for a, b in cases:
        irr = check_irreducible(a, b)
        assert irr.status != "unknown"
        assert irr.irreducible == sympy.Poly(x**7 + a * x**5 + b).is_irreducible, (a, b)


def test_irreducibility_without_full_search():
    # the rational-root check runs before the sieve
    assert check_irreducible(-2, 1, full_search=False).status == "proven_reducible"
    assert check_irreducible(867, 68, full_search=False).irreducible


# classifier ------------------------------------------------------------------


def _cells(p):
    """Every unit residue pair (mod 32 at 2, mod p^2 otherwise) at each small valuation."""
    mod = 32 if p == 2 else p * p
    units = [u for u in range(1, mod) if u % p]
    for va in range(0, 4):
        for vb in range(0, 13):
            if va >= 2 and vb >= 7:
                continue
            for u, w in itertools.product(units, units):
                yield p**va * u, p**vb * w


@pytest.mark.parametrize("p", [2, 3, 5])
def test_rows_pairwise_disjoint(p):
    table = TABLES[p]()
    for a, b in _cells(p):
        hits = [r.label for r in table if r.predicate(a, b)]
        assert len(hits) <= 1, (a, b, hits)


def test_table1_exhaustive_over_residues():
    # C-rows and UNCOVERED partition all cells of (a mod 32, b mod 32) with valuations
    seen = set()
    for a, b in _cells(2):
        seen.add(classify(a, b, 2).label)
    assert {r.label for r in table1()} <= seen


UNCOVERED_CELLS = [(5, 6), (5, 10), (9, 6), (9, 10), (13, 2), (13, 14)]


@pytest.mark.parametrize("cell", UNCOVERED_CELLS)
def test_uncovered_cells(cell):
    a, b = cell
    for k in range(5):
        assert classify(a + 16 * k, b + 16 * 3 * k, 2).label == "UNCOVERED"


def test_only_those_cells_uncovered_for_a_1_mod_4():
    out = set()
    for a0 in range(1, 16, 4):
        for b0 in range(2, 16, 4):
            if classify(a0, b0, 2).label == "UNCOVERED":
                out.add((a0, b0))
    assert out == set(UNCOVERED_CELLS)


def test_uncovered_cell_can_hold_common_index_divisor():
    # engine finds three degree-one primes over 2 in an uncovered cell
    a, b = -17623, 75350
    assert (a % 16, b % 16) == (9, 6)
    assert check_irreducible(a, b).irreducible
    rep = septic_index(a, b)
    blk = rep.prime(2)
    assert blk.case.label == "UNCOVERED"
    assert blk.engine.shape == S("[1, 1, 1^5]") and blk.engine.common_divisor
    assert rep.iK == (2,)
    assert rep.monogenic_verdict == "not_monogenic"


def test_va1_rows_follow_vb_minus_one():
    # v2(a) = 1: the side from (0, v2(b)) to (5, 1) has degree gcd(5, v2(b) - 1)
    assert classify(6, 96, 2).label == "C4"      # v2(b) = 5
    assert classify(6, 192, 2).label == "C5"     # v2(b) = 6
    assert classify(6, 486, 3).label == "A8"
    assert classify(6, 1458, 3).label == "A9"


def test_literal_five_divides_vb_reading_contradicts_engine():
    # erratum: read literally, (6, 96) would be C5 with [1, 1^2, 4]
    assert ore_shape(IntPoly.trinomial(6, 96), 2).shape == S("[1^2, 1^5]")
    assert ore_shape(IntPoly.trinomial(6, 192), 2).shape == S("[1, 1^2, 4]")
    assert nu(96, 2) % 5 == 0 and (nu(192, 2) - 1) % 5 == 0


def test_c18_printed_shape_is_not_degree_seven():
    # printed [1^5, 1^5] has sum e f = 10
    assert S("[1^5, 1^5]").degree == 10
    assert row("C18").shapes == (S("[1^2, 1^5]"),)


def test_b3_literal_shape_unattainable():
    # v5(a) = 1 forces the vertex (5, 1); the side (5, 1)-(7, 0) gives e = 2
    for b in (2 * 5**6, 3 * 5**11):
        rep = ore_shape(IntPoly.trinomial(15, b), 5)
        assert (2, 1) in rep.shape.parts
        assert rep.shape != S("[1^7]")


@pytest.mark.parametrize("a, b", [(1, 4), (-2, 7), (4, 1), (7, 9)])
def test_b_sign_symmetry(a, b):
    # theta -> -theta sends b to -b; shapes agree everywhere
    for p in (2, 3, 5):
        s1 = ore_shape(IntPoly.trinomial(a, b), p).shape
        s2 = ore_shape(IntPoly.trinomial(a, -b), p).shape
        assert s1 == s2


# the index ---------------------------------------------------------------------


@pytest.mark.parametrize("a, b, label, iK", [
    (867, 68, "C9", (2,)),        # [PAPER] worked example
    (45927, 24, "C10", (2,)),     # [PAPER]
    (33, 66, "C17", (2, 4)),      # [PAPER]
])
def test_worked_examples(a, b, label, iK):
    rep = septic_index(a, b)
    assert rep.prime(2).case.label == label
    assert rep.prime(2).agrees
    assert rep.iK == iK
    assert rep.monogenic_verdict == "not_monogenic"


@pytest.mark.parametrize("p", [3, 5, 7, 11])
@pytest.mark.parametrize("r", [1, 2, 3])
def test_pr_p_is_c1(p, r):
    rep = septic_index(p**r, p)
    assert rep.prime(2).case.label == "C1" and rep.iK == (1,)
    assert rep.monogenic_verdict == "index_one_inconclusive"


def test_septic_index_errors():
    with pytest.raises(ReducibleError, match="x - 1"):
        septic_index(1, -2)
    with pytest.raises(ValueError):
        septic_index(0, 3)


def test_septic_index_normalizes():
    rep = septic_index(4 * 867, 2**7 * 68)
    assert rep.normalized == (867, 68) and rep.iK == (2,)


def test_odd_primes_never_common_divisors():
    rng = random.Random(11)
    for _ in range(60):
        a, b = rng.randint(-10**4, 10**4), rng.randint(-10**4, 10**4)
        if not (a and b and check_irreducible(a, b).irreducible):
            continue
        rep = septic_index(a, b)
        for p in (3, 5):
            assert rep.prime(p).engine.common_divisor is False


# sampling and shifts -----------------------------------------------------------


def test_sample_row_reproducible():
    assert sample_row("C9", 5, seed=3) == sample_row("C9", 5, seed=3)
    assert sample_row("C9", 5, seed=3) != sample_row("C9", 5, seed=4)
    for a, b in sample_row("C9", 5, seed=3):
        assert (a % 8, b % 8) == (3, 4)


@pytest.mark.parametrize("label", ["C1", "C9", "A6"])
def test_cross_validate_small(label):
    agr = cross_validate(label, count=10, seed=42)
    assert agr.ok and agr.n == 10


@pytest.mark.parametrize("label", sorted(ROW_SHIFTS))
def test_admissible_shifts_are_regular(label):
    a, b = sample_row(label, 1, seed=0)[0]
    for s in admissible_shifts(label, a, b):
        assert shifted_report(a, b, s).regular


def test_admissible_shifts_reject_other_cells():
    with pytest.raises(ValueError):
        admissible_shifts("C15", 3, 4)


@pytest.mark.parametrize("label", ["C9", "C10"])
def test_c9_c10_index_is_two_vb_minus_one(label):
    # erratum: the index of theta is 2 v2(b) - 1, not 1.  The prime with e = 5
    # is tame, so v2(D_K) = 4, and v2(disc) = 4 v2(b) + 2.
    for a, b in sample_row(label, 15, seed=8):
        rep = ore_shape(IntPoly.trinomial(a, b), 2)
        assert rep.field_disc_valuation == 4
        assert rep.index_valuation == 2 * nu(b, 2) - 1
    # the field index is still 2: three degree-one primes over 2 but only two
    # monic linear polynomials over F_2, and the table row says nu2(i(K)) = 1
    assert septic_index(*sample_row(label, 1, seed=8)[0]).iK == (2,)


def test_c9_field_index_witness():
    # eta = -(theta^4 + theta^3)/2 - theta^2 - theta is integral in K = Q(theta),
    # theta^7 + 867 theta^5 + 68 = 0, and v2(ind eta) = 1, so v2(i(K)) = 1
    t, X = sympy.symbols("t X")
    F = t**7 + 867 * t**5 + 68
    eta = -(t**4 + t**3) / 2 - t**2 - t
    G = sympy.Poly(sympy.resultant(F, 2 * X - 2 * eta, t), X)
    coeffs = [c / G.LC() for c in reversed(G.all_coeffs())]
    assert all(c.is_integer for c in coeffs)
    rep = ore_shape(IntPoly([int(c) for c in coeffs]), 2)
    assert rep.regular and rep.index_valuation == 1
    assert rep.shape == S("[1, 1, 1^5]")
