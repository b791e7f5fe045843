"""When x - 1 is not good enough.

In row C17 the default lift x - 1 of the repeated factor x + 1 mod 2 gives a
residual polynomial with a repeated root.  Replacing it by x - s for a
suitable odd s makes F regular, and every admissible s agrees.
"""

from septic_index.intpoly import IntPoly
from septic_index.ore import ore_shape
from septic_index.septic import admissible_shifts, shifted_report

a, b = 33, 66
F = IntPoly.trinomial(a, b)

plain = shifted_report(a, b, 1)
print("lift x - 1:  regular =", plain.regular, " phi-index lower bound =", plain.index_valuation)

for s in admissible_shifts("C17", a, b):
    rep = shifted_report(a, b, s)
    print(f"lift x - {s:<3} regular = {rep.regular}  shape {rep.shape}  ind {rep.index_valuation}")

auto = ore_shape(F, 2)
fa = next(f for f in auto.factors if f.factor.degree == 1 and f.factor(1) == 0)
print(f"\nthe engine's default lift is {fa.lift}, i.e. s = -1 = 31 (mod 32), already admissible")

# a pair where the default lift fails and the engine searches
a, b = -17623, 75350
for fa in ore_shape(IntPoly.trinomial(a, b), 2).factors:
    if fa.shift is not None:
        print(f"for (a, b) = ({a}, {b}) the search settles on x - {fa.shift.s} "
              f"(s fixed mod 2^{fa.shift.precision})")
