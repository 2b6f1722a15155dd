"""From inequalities to quadrics: Z_P as an intersection of real quadrics.

For each polytope we print the integer matrix C (C A = 0), the quadric
equations and the moment-map level Cb, then lift random points of P to Z_P
and check that the quadrics are satisfied and independent there.
"""

import numpy as np

from kempfness import fixtures
from kempfness.polytope import cokernel_matrix, jacobian_rank_check, lift_point, sample_on_Z

for name, P in [
    ("triangle", fixtures.standard_simplex(2)),
    ("square [0,3]^2", fixtures.square()),
    ("cut cube", fixtures.cut_cube()),
]:
    Q = cokernel_matrix(P)
    print(f"== {name}: m={P.m}, n={P.n}")
    print(np.array(Q.C_original.tolist()))
    for line in Q.render():
        print("  ", line)
    print("   Cb =", Q.constants())

    pts = sample_on_Z(P, 500, seed=1, Q=Q)
    worst = max(p.max_residual for p in pts)
    ranks = sum(jacobian_rank_check(p, Q) for p in pts)
    print(f"   500 samples: max residual {worst:.1e}, full rank at {ranks}")

# A vertex of the cut cube lies on 3 facets, so 3 coordinates of its lift vanish.
P = fixtures.cut_cube()
for v in P.vertex_list[:4]:
    pt = lift_point(P, v.point, np.zeros(P.m))
    zeros = [k + 1 for k in range(P.m) if pt.z[k] == 0]
    print("vertex", tuple(int(t) for t in v.point), "facets", sorted(v.facets), "-> z_k = 0 for k in", zeros)
