"""
Lucas numbers from circular dominoes
====================================

Evaluating the (1,2) norm polynomial at (1, 1, -1) gives the norm of
1 + z - z^2, which is the Lucas number L_p.  The same number counts domino
placements on a circle of p cells.
"""

from cyclonorm import assemble, build_triangle, evaluate, lucas_number
from cyclonorm.counting_oracles import domino_placement_counts
from cyclonorm.norm_poly import numeric_norm

for p in (5, 7, 11, 13, 17, 19, 23):
    n = assemble(build_triangle(p, (1, 2)))
    exact = evaluate(n, 1, 1, -1)
    counts = domino_placement_counts(p)
    print(f"p={p:2d}  norm={exact:6d}  L_p={lucas_number(p):6d}  placements={sum(counts):6d}"
          f"  float={numeric_norm(p, (1, 2), 1, 1, -1):.3f}")

# other points: the uniformiser 1 - z has norm p, and 1 - z + z^2 is a unit
n = assemble(build_triangle(13, (1, 2)))
print(evaluate(n, 1, -1, 0), evaluate(n, 1, -1, 1))
