"""Exact invariants of higher dual varieties of projective toric embeddings.

The library computes, from lattice point data alone: degree and defectivity
of higher dual varieties (threefold second duals, surface k-duals, scroll
closed forms), exact jet-matrix linear algebra, and tropical membership and
emptiness certificates.  All arithmetic is exact; every value is immutable
and every operation is a pure function, safe for concurrent use.
"""

from .degrees import (
    DegreeReport,
    ScrollProfile,
    ScrollResult,
    abc_bundle_degrees,
    dual_degree_sequence_threefold,
    dual_degree_smooth,
    scroll_kdual,
    surface_kdual_degree,
    threefold_2dual_degree,
    threefold_2dual_degree_adjoint,
)
from .invariants import (
    AdjointInvariants,
    DoubleCayleyScroll,
    InvariantVector,
    KSimplex,
    adjoint_invariants,
    cayley_scroll_polytope,
    detect_exceptional,
    invariant_vector,
    is_k_regular,
    is_smooth,
)
from .jets import (
    CocircuitVector,
    JetMatrix,
    build_Ak,
    cocircuits,
    expected_dim,
    is_generically_k_spanned,
    rank_and_kernel,
    torus_disjoint,
)
from .lattice import (
    Polytope,
    RegularSubdivision,
    convex_hull,
    hull,
    interior_hull,
    lattice_points,
    minkowski_sum,
    mixed_volume3,
    normalized_volume,
    regular_subdivision,
    tightened_polytope,
)
from .polynomials import Polynomial
from .tropical import (
    MembershipCertificate,
    PlaneTropicalCurve,
    TropicalForm,
    euler_derivative,
    initial_form,
    membership,
    plane_curve,
    trop_eval,
    verify_witness,
)

__version__ = "0.1.0"

__all__ = [
    "AdjointInvariants",
    "CocircuitVector",
    "DegreeReport",
    "DoubleCayleyScroll",
    "InvariantVector",
    "JetMatrix",
    "KSimplex",
    "MembershipCertificate",
    "PlaneTropicalCurve",
    "Polynomial",
    "Polytope",
    "RegularSubdivision",
    "ScrollProfile",
    "ScrollResult",
    "TropicalForm",
    "abc_bundle_degrees",
    "adjoint_invariants",
    "build_Ak",
    "cayley_scroll_polytope",
    "cocircuits",
    "convex_hull",
    "detect_exceptional",
    "dual_degree_sequence_threefold",
    "dual_degree_smooth",
    "euler_derivative",
    "expected_dim",
    "hull",
    "initial_form",
    "interior_hull",
    "invariant_vector",
    "is_generically_k_spanned",
    "is_k_regular",
    "is_smooth",
    "lattice_points",
    "membership",
    "minkowski_sum",
    "mixed_volume3",
    "normalized_volume",
    "plane_curve",
    "rank_and_kernel",
    "regular_subdivision",
    "scroll_kdual",
    "surface_kdual_degree",
    "threefold_2dual_degree",
    "threefold_2dual_degree_adjoint",
    "tightened_polytope",
    "torus_disjoint",
    "trop_eval",
    "verify_witness",
]
