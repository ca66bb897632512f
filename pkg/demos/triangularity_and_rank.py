"""
Triangularity and exact rank in the tensor model
================================================

Each Verma vector, expanded in pure tensors of V^m1 (x) (wedge^2 V)^m2,
has a unique largest tableau T(a) with coefficient a1! a2! a3! a4!.
That alone makes the vectors independent; the exact rank confirms it.
"""

import time
from collections import Counter

from sp4_verma import HighestWeight, check_triangular, independence_rank, weyl_dim
from sp4_verma.tensor import dim_W

for m1, m2 in [(1, 1), (2, 1), (1, 2), (2, 2), (3, 2)]:
    hw = HighestWeight(m1, m2)
    t0 = time.perf_counter()
    recs = check_triangular(hw)
    r = independence_rank(hw)
    sizes = [rec.num_terms for rec in recs]
    print(
        f"({m1},{m2}) dim W={dim_W(hw):>6}  vectors={len(recs):>4}  rank={r:>4}  weyl={weyl_dim(*hw.partition):>4}"
        f"  terms max={max(sizes):>5}  {time.perf_counter() - t0:.1f}s"
    )

# leading coefficients grow fast with the exponents
hw = HighestWeight(2, 2)
coeffs = Counter(rec.leading_coeff for rec in check_triangular(hw))
print("\nleading coefficients at (2,2):", dict(sorted(coeffs.items())))
