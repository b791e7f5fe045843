"""Sweep every row of the three case tables against the engine.

Each row is sampled with seeded random pairs satisfying its condition, and
the engine's shape is compared with the printed one.  Row B3 disagrees on
every sample; see the test-suite for why.
"""

import sys
import time

from septic_index.septic import all_rows, cross_validate

count = int(sys.argv[1]) if len(sys.argv) > 1 else 20
t0 = time.perf_counter()
for r in all_rows():
    agr = cross_validate(r.label, count, seed=42)
    seen = sorted({str(s.engine) for s in agr.samples})
    mark = "ok " if agr.ok else "BAD"
    print(f"{mark} {r.label:<4} p={r.p}  {agr.agreements:>3}/{agr.n:<3} engine shapes {', '.join(seen)}")
print(f"\n{time.perf_counter() - t0:.1f}s")
