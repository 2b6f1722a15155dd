"""Cohomology ring of the moment-angle manifold of a cube with two edges cut off.

The polytope has 8 facets in dimension 3, so Z_P is an 11-manifold. We
compute its Betti numbers from full subcomplexes of the facet nerve, list
cocycle generators in the Koszul model, multiply a few of them and finish
with a non-trivial triple Massey product.
"""

from kempfness import fixtures
from kempfness.cohomology import (
    CohomologyClass,
    cup_product,
    hochster_cohomology,
    koszul_model,
    massey_triple,
)
from kempfness.polytope import facet_nerve
from kempfness.simplicial import minimal_non_faces

P = fixtures.cut_cube()
K = facet_nerve(P)
print("facets:", P.m, " vertices:", len(P.vertex_list))

# Non-adjacent facet pairs generate the Stanley-Reisner ideal.
ideal = ", ".join(f"v_{i}v_{j}" for i, j in minimal_non_faces(K))
print("face ring ideal:", ideal)

report = hochster_cohomology(K)
print("betti:", report.betti, " torsion:", report.torsion or "none")

model = koszul_model(K)
for degree in (3, 4, 5):
    gens = model.generators(degree)
    print(f"H^{degree}: {len(gens)} generators")
    print("   ", ", ".join(str(g) for g in gens))

parse = lambda text: CohomologyClass.parse(K, text)

# u_1 appears in both factors, so this product is zero already on cochains ...
print("[u_1v_4][u_1v_7] =", cup_product(parse("u_1v_4"), parse("u_1v_7")))
# ... while K({1,3,4,6}) is a 4-cycle (a circle) and the product survives.
print("[u_1v_4][u_3v_6] =", cup_product(parse("u_1v_4"), parse("u_3v_6")))

top = cup_product(cup_product(parse("u_2v_4"), parse("u_3v_6")), parse("u_1u_5u_8v_7"))
print("triple product lands in degree", top.degree, "->", top)

res = massey_triple(parse("u_1v_4"), parse("u_2v_5"), parse("u_3v_6"))
print("<u_1v_4, u_2v_5, u_3v_6>: defined =", res.defined, " trivial =", res.trivial)
print("   witnesses e =", res.e, " f =", res.f)
print("   representative", res.representative)
