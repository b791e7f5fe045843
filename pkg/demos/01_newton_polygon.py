"""Walk through one Newton polygon by hand: x^9 + 54x + 134 at p = 3.

Mod 3 the polynomial is (x + 2)^9, so everything happens above one factor.
"""

from septic_index.intpoly import IntPoly
from septic_index.ore import ore_shape
from septic_index.polygon import phi_expansion, phi_index, principal_polygon, residual_polynomials

F = IntPoly.parse("x^9 + 54*x + 134")
phi = IntPoly.parse("x + 2")

exp = phi_expansion(F, phi, 3)
print("F =", F)
print("development in powers of", phi)
for i, (c, v) in enumerate(zip(exp.coeffs, exp.vals)):
    print(f"  a_{i} = {c[0]:>6}   v_3 = {v}")

poly = principal_polygon(exp)
print("\nprincipal polygon vertices:", poly.vertices)
for side in poly:
    print("  side", side)

print("\nresidual polynomials (one per side):")
for r in residual_polynomials(exp, poly):
    print(f"  slope {r.side.slope}: {r.poly.format('y')}")

print("\nphi-index:", phi_index(exp, poly))

rep = ore_shape(F, 3)
print("every residual polynomial is separable, so the shape is exact:", rep.shape)
print("v_3 of the index of Z[theta]:", rep.index_valuation)
