"""Fans, their underlying complexes and the group G acting on U(Sigma).

Two fans on the same three rays: all 2-cones give CP^2 and Z = S^5; only
the rays give an incomplete fan whose Z is a wedge of spheres. A fan whose
rays span an index-2 sublattice shows torsion in G.
"""

from kempfness import fixtures
from kempfness.cohomology import hochster_cohomology, poincare_duality_check
from kempfness.fan import (
    ContainsLine,
    group_structure,
    is_complete,
    is_regular,
    underlying_complex,
    validate_fan,
)

for name, F in [("CP^2", fixtures.cp2_fan()), ("three rays", fixtures.three_rays_fan())]:
    K = underlying_complex(F)
    rep = hochster_cohomology(K)
    print(f"== {name}")
    print("   complex:", K.maximal_faces())
    print("   complete:", is_complete(F), " regular:", is_regular(F), " G:", group_structure(F))
    print("   H^*(Z):", {k: str(g) for k, g in rep.groups.nonzero().items()})
    print("   Poincare symmetric:", poincare_duality_check(rep, F.m, F.n))

F = validate_fan(2, [(1, 1), (1, -1), (-1, -1), (-1, 1)], [[1, 2], [2, 3], [3, 4], [1, 4]])
print("== (+-1, +-1) fan")
print("   regular:", is_regular(F), " G:", group_structure(F))

try:
    validate_fan(2, [(1, 0), (-1, 0)], [[1, 2]])
except ContainsLine as exc:
    print("== cone on e1, -e1 rejected:", exc)
