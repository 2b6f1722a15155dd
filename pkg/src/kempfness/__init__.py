"""Moment-angle complexes (toric Kempf-Ness sets) of simplicial fans and
simple polytopes: combinatorial model, quadric presentation and integral
cohomology computed with exact integer linear algebra."""

from .cohomology import (
    CohomologyClass,
    CohomologyReport,
    KoszulModel,
    MasseyResult,
    cross_check_hochster_koszul,
    cup_product,
    hochster_cohomology,
    koszul_cohomology,
    koszul_model,
    massey_triple,
    poincare_duality_check,
)
from .fan import (
    Cone,
    Fan,
    contains_point,
    group_structure,
    is_complete,
    is_regular,
    underlying_complex,
    validate_fan,
)
from .linalg import (
    AbelianGroup,
    SnfFactorization,
    cokernel_invariants,
    kernel_basis,
    lattice_membership,
    smith_normal_form,
    solve_rational,
)
from .polytope import (
    HPolytope,
    QuadricSystem,
    SampledPoint,
    cokernel_matrix,
    facet_nerve,
    from_inequalities,
    is_simple,
    jacobian_rank_check,
    moment_map_target,
    normal_fan,
    quadric_equations,
    sample_on_Z,
    vertices,
)
from .simplicial import (
    CohomologyTable,
    SimplicialComplex,
    from_maximal_faces,
    full_subcomplex,
    minimal_non_faces,
    reduced_cohomology,
)

__version__ = "0.1.0"
