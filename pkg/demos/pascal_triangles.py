"""
Finite Pascal triangles of a norm polynomial
============================================

The coefficients of prod_j (Y0 + z^j Y1 + z^(2j) Y2) over the nontrivial
11th roots of unity, laid out by total degree in (Y1, Y2).
"""

from cyclonorm import build_triangle
from cyclonorm.triangle import closed_delta_12, forces

t = build_triangle(11, (1, 2))
print(t.render())

# every entry is the sum of the two entries below it, negated, except at
# the diamonds, where 1*n1 + 2*n2 is a multiple of 11
for s in forces(t):
    print(f"source ({s.n1},{s.n2}) force {s.value}")

# the (1,2) triangle folds onto binomial coefficients
assert all(closed_delta_12(11, *pt) == t.delta(*pt) for pt in t.points())

# the pair (1,3) has sources on two lines
print(build_triangle(11, (1, 3)).render())
