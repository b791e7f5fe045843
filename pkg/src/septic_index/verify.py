"""Self-checks shared by the ``verify`` subcommand and the test-suite.

Each suite returns a :class:`SuiteResult` with pass/total counts and the
first few failures, so callers can print or assert as they like.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .arith import count_monic_irreducibles, divisors, resultant, trinomial_discriminant
from .intpoly import IntPoly
from .ore import dedekind_divides_index, ore_shape
from .septic import ROW_SHIFTS, admissible_shifts, all_rows, check_irreducible, cross_validate, sample_row, shifted_report


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    total: int = 0
    failures: list = field(default_factory=list)
    detail: dict = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return self.total > 0 and self.passed == self.total

    def record(self, good: bool, item) -> None:
        self.total += 1
        if good:
            self.passed += 1
        elif len(self.failures) < 10:
            self.failures.append(item)

    def as_json(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "total": self.total,
                "ok": self.ok, "failures": [repr(f) for f in self.failures],
                "detail": self.detail}


def suite_tables(samples: int = 50, seed: int = 0, bound: int = 10**6,
                 labels=None) -> SuiteResult:
    res = SuiteResult("tables")
    for r in all_rows():
        if labels is not None and r.label not in labels:
            continue
        agr = cross_validate(r.label, samples, bound, seed)
        res.detail[r.label] = f"{agr.agreements}/{agr.n}"
        res.record(agr.ok and agr.n >= samples, (r.label, agr.agreements, agr.n))
    return res


def suite_discriminant(samples: int = 1000, seed: int = 0, bound: int = 10**9) -> SuiteResult:
    res = SuiteResult("discriminant")
    rng = random.Random(seed)
    while res.total < samples:
        a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if a == 0 or b == 0:
            continue
        F = IntPoly.trinomial(a, b)
        # (-1)^(7*6/2) Res(F, F') with F monic
        res.record(-resultant(F, F.derivative()) == trinomial_discriminant(a, b), (a, b))
    return res


def suite_npf(max_p: int = 7, max_n: int = 8) -> SuiteResult:
    res = SuiteResult("npf")
    for p in (2, 3, 5, 7):
        if p > max_p:
            continue
        for n in range(1, max_n + 1):
            lhs = sum(d * count_monic_irreducibles(p, d) for d in divisors(n))
            res.record(lhs == p**n, (p, n, lhs))
    return res


def _random_irreducible_pairs(rng: random.Random, count: int, bound: int):
    out = []
    while len(out) < count:
        a, b = rng.randint(-bound, bound), rng.randint(-bound, bound)
        if a and b and check_irreducible(a, b).irreducible:
            out.append((a, b))
    return out


def suite_dedekind(samples: int = 500, seed: int = 0, bound: int = 10**6) -> SuiteResult:
    res = SuiteResult("dedekind")
    irregular = 0
    for p in (2, 3, 5):
        rng = random.Random(f"dedekind:{p}:{seed}")
        for a, b in _random_irreducible_pairs(rng, samples, bound):
            F = IntPoly.trinomial(a, b)
            rep = ore_shape(F, p, seed=seed)
            if not rep.regular:
                irregular += 1
                continue
            res.record((rep.index_valuation >= 1) == dedekind_divides_index(F, p), (p, a, b))
    res.detail["irregular_skipped"] = irregular
    return res


def suite_shifts(samples: int = 20, seed: int = 0, bound: int = 10**6) -> SuiteResult:
    """Two admissible lifts x - s give the same shape and index valuation."""
    res = SuiteResult("shifts")
    for label in ROW_SHIFTS:
        for a, b in sample_row(label, samples, bound, seed):
            s1, s2 = admissible_shifts(label, a, b)[:2]
            r1, r2 = shifted_report(a, b, s1, seed), shifted_report(a, b, s2, seed)
            good = (r1.regular and r2.regular and r1.shape == r2.shape
                    and r1.index_valuation == r2.index_valuation)
            res.record(good, (label, a, b, s1, s2))
    return res


def suite_fuzz(samples: int = 2000, seed: int = 0, max_degree: int = 9,
               coeff_bound: int = 50) -> SuiteResult:
    """Random monic polynomials: sum e*f = deg, and Dedekind agrees."""
    res = SuiteResult("fuzz")
    rng = random.Random(seed)
    irregular = 0
    for _ in range(samples):
        p = rng.choice((2, 3, 5))
        d = rng.randint(1, max_degree)
        F = IntPoly([rng.randint(-coeff_bound, coeff_bound) for _ in range(d)] + [1])
        rep = ore_shape(F, p, seed=seed)
        if not rep.regular:
            irregular += 1
            continue
        good = rep.shape.degree == d and (rep.index_valuation >= 1) == dedekind_divides_index(F, p)
        res.record(good, (str(F), p))
    res.detail["irregular_unresolved"] = irregular
    return res


SUITES = {
    "tables": suite_tables,
    "discriminant": suite_discriminant,
    "dedekind": suite_dedekind,
    "npf": suite_npf,
    "shifts": suite_shifts,
    "fuzz": suite_fuzz,
}
