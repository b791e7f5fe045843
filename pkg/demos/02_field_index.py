"""Field indices of a few septic trinomial fields.

For each (a, b) the script prints the case row matched at 2, 3 and 5, the
engine's shape, and the resulting i(K).
"""

from septic_index.septic import septic_index

PAIRS = [
    (867, 68),      # three degree-one primes over 2: 2 | i(K)
    (45927, 24),
    (33, 66),       # default lift irregular; a shifted lift settles it
    (27, 3),        # i(K) = 1
    (-17623, 75350),  # residue cell outside the printed table
]

for a, b in PAIRS:
    rep = septic_index(a, b)
    print(f"x^7 + {a} x^5 + {b}   ({rep.irreducibility.witness})")
    for blk in rep.primes:
        shape = blk.engine.shape
        print(f"   p={blk.p}  {blk.case.label:<9} {str(shape):<18} ind {blk.engine.index_valuation}")
    if rep.exact:
        value = f"i(K) = {rep.iK[0]}"
    else:
        value = "i(K) in {" + ", ".join(map(str, rep.iK)) + "}"
    print(f"   {value}   {rep.monogenic_verdict}\n")
