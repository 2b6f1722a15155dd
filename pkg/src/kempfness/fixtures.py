"""Small fans and polytopes used in the tests, demos and documentation."""

from .fan import Fan, validate_fan
from .polytope import HPolytope, cube, cut_cube, from_inequalities, standard_simplex

__all__ = [
    "cp2_fan",
    "cube",
    "cut_cube",
    "square",
    "square_pyramid",
    "standard_simplex",
    "three_rays_fan",
]


def cp2_fan() -> Fan:
    """Complete fan of CP^2: rays e1, e2, -e1-e2 and all three 2-cones."""
    return validate_fan(2, [(1, 0), (0, 1), (-1, -1)], [[1, 2], [2, 3], [1, 3]])


def three_rays_fan() -> Fan:
    """The same three rays with only the 1-dimensional cones (not complete)."""
    return validate_fan(2, [(1, 0), (0, 1), (-1, -1)], [[1], [2], [3]])


def square(side: int = 3) -> HPolytope:
    """``[0, side]^2`` with normals ordered e1, e2, -e1, -e2."""
    return from_inequalities(2, [[1, 0], [0, 1], [-1, 0], [0, -1]], [0, 0, side, side])


def square_pyramid() -> HPolytope:
    """Pyramid over ``[-1,1]^2`` with apex ``(0,0,1)``; the apex is on 4 facets."""
    A = [[0, 0, 1], [0, -1, -1], [0, 1, -1], [-1, 0, -1], [1, 0, -1]]
    return from_inequalities(3, A, [0, 1, 1, 1, 1])
