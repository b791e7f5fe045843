"""Prime factorization shapes from Newton polygons (Ore's theorem).

For each irreducible factor phi of F mod p the principal polygon and its
residual polynomials are computed.  When every residual polynomial is
separable, the shape of pZ_K and the p-valuation of the index of Z[theta]
follow directly.  Repeated linear factors that are not regular for the
default lift are retried with shifted lifts x - s.
"""

from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass, field
from math import ceil, inf
from typing import Iterator, Mapping

from .arith import count_monic_irreducibles, discriminant, nu
from .fppoly import Poly, factor, factor_fp, gcd, reduce_mod_p
from .intpoly import IntPoly
from .polygon import (
    NewtonPolygon,
    PhiExpansion,
    ResidualPolynomial,
    phi_expansion,
    phi_index,
    principal_polygon,
    residual_polynomials,
)


class NoRegularShiftError(LookupError):
    """No lift x - s within the precision bound makes F regular."""


@dataclass(frozen=True)
class FactorizationShape:
    parts: tuple[tuple[int, int], ...]  # (e, f), sorted by (f, e)

    def __init__(self, parts):
        object.__setattr__(self, "parts", tuple(sorted(((int(e), int(f)) for e, f in parts),
                                                       key=lambda t: (t[1], t[0]))))

    @classmethod
    def parse(cls, text: str) -> "FactorizationShape":
        """Read the bracket notation ``[1, 1^2, 4]`` (entries are f^e)."""
        body = text.strip().strip("[]")
        parts = []
        for tok in body.split(","):
            tok = tok.strip()
            m = re.fullmatch(r"(\d+)(?:\^(\d+))?", tok)
            if not m:
                raise ValueError(f"bad shape entry {tok!r}")
            parts.append((int(m.group(2) or 1), int(m.group(1))))
        return cls(parts)

    @property
    def degree(self) -> int:
        return sum(e * f for e, f in self.parts)

    def residue_degree_counts(self) -> Counter:
        return Counter(f for _, f in self.parts)

    def __str__(self) -> str:
        return "[" + ", ".join(str(f) if e == 1 else f"{f}^{e}" for e, f in self.parts) + "]"

    def as_json(self) -> list[dict]:
        return [{"e": e, "f": f} for e, f in self.parts]


@dataclass(frozen=True)
class ShiftCandidate:
    root: int  # r with phi-bar = x - r
    s: int
    precision: int

    @property
    def lift(self) -> IntPoly:
        return IntPoly((-self.s, 1))


@dataclass
class FactorAnalysis:
    """Everything computed for one irreducible factor of F mod p."""

    factor: Poly
    multiplicity: int
    lift: IntPoly
    expansion: PhiExpansion | None = None
    polygon: NewtonPolygon = NewtonPolygon()
    residuals: list[ResidualPolynomial] = field(default_factory=list)
    residual_factors: list[list[tuple[Poly, int]]] = field(default_factory=list)
    regular: bool = True
    index: int = 0
    shift: ShiftCandidate | None = None

    def parts(self) -> list[tuple[int, int]]:
        if self.multiplicity == 1:
            return [(1, self.factor.degree)]
        out = []
        for res, facs in zip(self.residuals, self.residual_factors):
            for psi, _ in facs:
                out.append((res.side.ram, self.factor.degree * psi.degree))
        return out


@dataclass
class PrimeReport:
    p: int
    shape: FactorizationShape | None
    regular: bool
    index_valuation: int  # exact when regular, a lower bound otherwise
    lifts_used: list[tuple[Poly, IntPoly]]
    common_divisor: bool | None
    field_disc_valuation: int | None
    factors: list[FactorAnalysis] = field(default_factory=list)
    status: str = "ok"

    @property
    def unresolved(self) -> bool:
        return self.status != "ok"


def _analyze(F: IntPoly, p: int, phi_bar: Poly, mult: int, lift: IntPoly,
             seed) -> FactorAnalysis:
    fa = FactorAnalysis(phi_bar, mult, lift)
    if mult == 1:
        return fa
    exp = phi_expansion(F, lift, p)
    fa.expansion = exp
    if exp.vals[0] == inf:
        # lift divides F exactly; its polygon has an infinite side
        fa.regular = False
        return fa
    fa.polygon = principal_polygon(exp)
    fa.residuals = residual_polynomials(exp, fa.polygon)
    fa.index = phi_index(exp, fa.polygon)
    for r in fa.residuals:
        facs = factor(r.poly, seed)
        fa.residual_factors.append(facs)
        if any(m > 1 for _, m in facs):
            fa.regular = False
    return fa


def _shift_bound(F: IntPoly, p: int) -> int:
    d = discriminant(F)
    if d == 0:
        return 0
    return ceil(nu(d, p) / 2) + 2


def _balanced(c: int, mod: int) -> int:
    c %= mod
    return c - mod if 2 * c > mod else c


SHIFT_BEAM = 16


def iter_regular_shifts(F: IntPoly, p: int, root: int, seed=None,
                        max_precision: int | None = None) -> Iterator[tuple[ShiftCandidate, FactorAnalysis]]:
    """Yield shifts s = root (mod p) making F (x - s)-regular.

    Residue classes of s are refined one p-adic digit at a time.  Within a
    level, candidates are tried by increasing |s|; the classes carried to the
    next level are those with the largest phi-index (deeper approximations of
    the roots above x - root), capped at ``SHIFT_BEAM``.
    """
    kmax = _shift_bound(F, p) if max_precision is None else max_precision
    phi_bar = Poly.over_fp(p, (-root, 1))
    mult = dict(factor_fp(reduce_mod_p(F, p), seed)).get(phi_bar, 0)
    if mult < 2:
        raise ValueError(f"x - {root} is not a repeated factor of F mod {p}")
    parents = [root % p]
    for K in range(1, kmax + 1):
        mod = p**K
        if K == 1:
            classes = parents
        else:
            step = p ** (K - 1)
            classes = [c + t * step for c in parents for t in range(p)]
        cands = sorted({_balanced(c, mod) for c in classes}, key=lambda s: (abs(s), s))
        scored = []
        for s in cands:
            fa = _analyze(F, p, phi_bar, mult, IntPoly((-s, 1)), seed)
            if fa.regular:
                yield ShiftCandidate(root % p, s, K), fa
            scored.append((fa.index, s))
        best = sorted(scored, key=lambda t: (-t[0], abs(t[1]), t[1]))[:SHIFT_BEAM]
        parents = [s % mod for _, s in best]


def shift_search(F: IntPoly, p: int, factor_: Poly, seed=None) -> ShiftCandidate:
    if factor_.degree != 1:
        raise ValueError("shift search applies to linear factors only")
    root = (-factor_.monic().coeffs[0]) % p
    for cand, _ in iter_regular_shifts(F, p, root, seed):
        return cand
    raise NoRegularShiftError(f"no-regular-shift-found for x - {root} at p = {p}")


def ore_shape(F: IntPoly, p: int, lifts: Mapping[Poly, IntPoly] | None = None,
              seed=None) -> PrimeReport:
    """Factorization shape of p in Z[x]/(F) and the p-part of ind(theta).

    ``lifts`` optionally fixes the lift used for given factors of F mod p;
    explicit lifts are never shifted.
    """
    if not F.is_monic():
        raise ValueError("F must be monic")
    lifts = dict(lifts or {})
    analyses = []
    for phi_bar, mult in factor_fp(reduce_mod_p(F, p), seed):
        if phi_bar in lifts:
            lift = lifts[phi_bar]
            if reduce_mod_p(lift, p) != phi_bar or not lift.is_monic():
                raise ValueError(f"{lift} is not a monic lift of {phi_bar}")
            analyses.append(_analyze(F, p, phi_bar, mult, lift, seed))
            continue
        fa = _analyze(F, p, phi_bar, mult, phi_bar.to_intpoly(), seed)
        if not fa.regular and phi_bar.degree == 1:
            root = (-phi_bar.coeffs[0]) % p
            for cand, shifted in iter_regular_shifts(F, p, root, seed):
                shifted.shift = cand
                fa = shifted
                break
        analyses.append(fa)

    regular = all(fa.regular for fa in analyses)
    index = sum(fa.index for fa in analyses)
    lifts_used = [(fa.factor, fa.lift) for fa in analyses]
    if not regular:
        return PrimeReport(p, None, False, index, lifts_used, None, None,
                           analyses, "irregular-unresolved")
    shape = FactorizationShape([part for fa in analyses for part in fa.parts()])
    disc = discriminant(F)
    return PrimeReport(
        p=p,
        shape=shape,
        regular=True,
        index_valuation=index,
        lifts_used=lifts_used,
        common_divisor=common_index_divisor(shape, p),
        field_disc_valuation=nu(disc, p) - 2 * index if disc else None,
        factors=analyses,
    )


def common_index_divisor(shape: FactorizationShape, p: int) -> bool:
    """True iff more primes of residue degree f lie over p than F_p[x] has
    monic irreducibles of degree f, for some f."""
    return any(n > count_monic_irreducibles(p, f)
               for f, n in shape.residue_degree_counts().items())


def dedekind_divides_index(F: IntPoly, p: int) -> bool:
    """Dedekind's criterion: does p divide (Z_K : Z[theta])?"""
    if not F.is_monic():
        raise ValueError("F must be monic")
    facs = factor_fp(reduce_mod_p(F, p))
    G = IntPoly((1,))
    H = IntPoly((1,))
    for phi_bar, mult in facs:
        lift = phi_bar.to_intpoly()
        G = G * lift
        H = H * lift ** (mult - 1)
    diff = F - G * H
    assert all(c % p == 0 for c in diff.coeffs)
    T = reduce_mod_p(IntPoly([c // p for c in diff.coeffs]), p)
    g = gcd(reduce_mod_p(G, p), reduce_mod_p(H, p))
    return not gcd(g, T).is_one()
