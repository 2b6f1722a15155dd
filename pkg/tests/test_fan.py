import random

import pytest
import sympy

from kempfness import fixtures
from kempfness.fan import (
    BadIntersection,
    Cone,
    ContainsLine,
    Fan,
    NonSimplicialCone,
    RaysDoNotSpan,
    contains_point,
    group_structure,
    is_complete,
    is_regular,
    underlying_complex,
    validate_fan,
)
from kempfness.linalg import AbelianGroup
from kempfness.polytope import normal_fan
from kempfness.simplicial import SimplicialComplex, from_maximal_faces, is_pseudomanifold


@pytest.fixture(scope="module")
def cut_cube_fan():
    return normal_fan(fixtures.cut_cube())


class TestValidate:
    def test_cp2(self):
        F = fixtures.cp2_fan()
        assert F.m == 3 and len(F.cones) == 3

    def test_three_rays(self):
        F = fixtures.three_rays_fan()
        assert all(c.dim == 1 for c in F.cones)

    def test_contains_line(self):
        with pytest.raises(ContainsLine):
            validate_fan(2, [(1, 0), (-1, 0)], [[1, 2]])

    def test_non_simplicial(self):
        # four rays of a square cone in R^3
        rays = [(1, 0, 1), (0, 1, 1), (-1, 0, 1), (0, -1, 1)]
        with pytest.raises(NonSimplicialCone):
            validate_fan(3, rays, [[1, 2, 3, 4]])

    def test_bad_intersection(self):
        # two overlapping 2-cones in the plane
        with pytest.raises(BadIntersection):
            validate_fan(2, [(1, 0), (1, 1), (0, 1)], [[1, 3], [2, 3]])

    def test_subcone_absorbed(self):
        F = validate_fan(2, [(1, 0), (0, 1)], [[1, 2], [1]])
        assert F.cones == (Cone([1, 2]),)

    def test_primitivized(self):
        F = validate_fan(2, [(2, 0), (0, 3)], [[1, 2]])
        assert F.rays == ((1, 0), (0, 1)) and F.primitivized

    def test_json_round_trip(self):
        F = fixtures.cp2_fan()
        assert Fan.from_json(F.to_json()) == F


class TestUnderlyingComplex:
    def test_cp2(self):
        assert underlying_complex(fixtures.cp2_fan()) == from_maximal_faces(3, [[1, 2], [2, 3], [1, 3]])

    def test_three_rays(self):
        assert underlying_complex(fixtures.three_rays_fan()) == from_maximal_faces(3, [[1], [2], [3]])

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    def test_simplex_normal_fan(self, n):
        K = underlying_complex(normal_fan(fixtures.standard_simplex(n)))
        assert K == SimplicialComplex.simplex_boundary(n + 1)


class TestRegular:
    def test_cp2(self):
        assert is_regular(fixtures.cp2_fan())

    def test_det_two(self):
        assert not is_regular(validate_fan(2, [(1, 0), (1, 2)], [[1, 2]]))

    def test_cut_cube(self, cut_cube_fan):
        assert is_regular(cut_cube_fan)

    def test_matches_determinant(self):
        # for full-dimensional cones, regular iff |det| = 1 (sympy oracle)
        rng = random.Random(2)
        for _ in range(40):
            rays = [(rng.randint(-3, 3), rng.randint(-3, 3)) for _ in range(2)]
            det = sympy.Matrix(rays).det()
            if det == 0:
                continue
            if det < 0:
                rays.reverse()
            try:
                F = validate_fan(2, rays, [[1, 2]])
            except ValueError:
                continue
            prim_det = abs(sympy.Matrix([list(r) for r in F.rays]).det())
            assert is_regular(F) == (prim_det == 1)


class TestComplete:
    def test_cp2(self):
        assert is_complete(fixtures.cp2_fan())

    def test_three_rays(self):
        assert not is_complete(fixtures.three_rays_fan())

    def test_cut_cube(self, cut_cube_fan):
        assert is_complete(cut_cube_fan)

    def test_half_plane(self):
        F = validate_fan(2, [(1, 0), (0, 1), (-1, 0)], [[1, 2], [2, 3]])
        assert not is_complete(F)

    def test_complete_fan_complex_is_pseudomanifold(self, cut_cube_fan):
        for F in (fixtures.cp2_fan(), cut_cube_fan):
            assert is_pseudomanifold(underlying_complex(F))


class TestGroupStructure:
    def test_cp2(self):
        assert group_structure(fixtures.cp2_fan()) == AbelianGroup(1)

    def test_cut_cube(self, cut_cube_fan):
        assert group_structure(cut_cube_fan) == AbelianGroup(5)

    def test_unimodular_rays_give_no_torsion(self):
        # minors of (2,1),(1,2),(-1,-1) are 3, -1, 1: the rays generate Z^2
        F = validate_fan(2, [(2, 1), (1, 2), (-1, -1)], [[1, 2], [2, 3], [1, 3]])
        assert group_structure(F) == AbelianGroup(1)

    def test_torus(self):
        assert group_structure(validate_fan(2, [(1, 0), (0, 1)], [[1, 2]])) == AbelianGroup(0)

    def test_torsion(self):
        # (+-1, +-1) span the index-2 sublattice {x + y even}
        rays = [(1, 1), (1, -1), (-1, -1), (-1, 1)]
        F = validate_fan(2, rays, [[1, 2], [2, 3], [3, 4], [1, 4]])
        assert group_structure(F) == AbelianGroup(2, (2,))
        assert not is_regular(F)
        # adding (-1, 0) restores the full lattice
        G = validate_fan(2, [(1, 1), (1, -1), (-1, 0)], [[1, 2], [2, 3], [1, 3]])
        assert group_structure(G) == AbelianGroup(1)

    def test_not_spanning(self):
        with pytest.raises(RaysDoNotSpan):
            group_structure(validate_fan(2, [(1, 0)], [[1]]))


class TestContainsPoint:
    def test_apex(self):
        F = fixtures.cp2_fan()
        assert all(contains_point(F, c, (0, 0)) for c in F.cones)

    def test_inside_and_outside(self):
        F = fixtures.cp2_fan()
        c = Cone([1, 2])
        assert contains_point(F, c, (1, 1))
        assert not contains_point(F, c, (-1, 0))
