# # Sparse halves
#
# How few edges can half of the vertices span?  For balanced blow-ups of
# C_5 the answer is n^2/50, and the exact subset search confirms it.  The
# arc sweep only looks at arc halves but is polynomial.

from fractions import Fraction

from sparsehalves import arc_sweep, blow_up, generalized_andrasfai, min_edges_over_subsets, represent_blow_up
from sparsehalves.density import SearchBudget, sweep_bound

for t in (2, 4, 6):
    b = blow_up(generalized_andrasfai(2, 2), t)
    value, witness = min_edges_over_subsets(b.result, b.n // 2, SearchBudget(max_n=60))
    sweep = arc_sweep(represent_blow_up(b, 2))
    print(f"n={b.n:2d}: exact {value:2d}  sweep {sweep.min_edges:2d}  n^2/50 = {Fraction(b.n ** 2, 50)}")

# ## An unbalanced example for k = 3
#
# With 2(2k+1) | n the sweep never exceeds n^2/(2(2k+1)^2).

b = blow_up(generalized_andrasfai(3, 3), [2, 3, 2, 2, 3, 2, 2, 3, 2, 2, 3, 2])
arr = represent_blow_up(b, 3)
report = arc_sweep(arr)
exact, _ = min_edges_over_subsets(arr.graph, arr.n // 2)
print("n =", arr.n, " exact =", exact, " sweep =", report.min_edges, " bound =", sweep_bound(3, arr.n))
print("sparsest arc half starts at vertex", report.witness_start, "and holds", report.witness)
