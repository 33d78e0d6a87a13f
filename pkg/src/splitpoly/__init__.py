"""Exact rational toolkit for split sets, intersection cuts, and closures
of rational mixed integer polyhedra.

Everything is computed over the rationals: LPs run an exact simplex with
Bland's rule, polyhedra convert between V-form and H-form by double
description, and cut coefficients come out as fractions, never floats.
"""

from .bodies import (
    SplitBody,
    WidthSizeResult,
    body_contains,
    body_hrep,
    body_is_empty,
    contains_relative_interior,
    interior_lattice_point,
    is_lattice_point_free,
    make_body,
    make_simplex_body,
    make_split_set,
    max_facet_width,
    recession_is_linear,
    restrict_to_integer_space,
    strictly_inside,
    width_along,
    width_size_over_family,
)
from .closures import (
    BodyFamily,
    ClosureRound,
    ExampleMilp,
    FaceRecord,
    ProofTrace,
    TightProjection,
    WidthSizeReport,
    closure,
    closure_hrep,
    enumerate_split_sets,
    example_milp,
    iterated_closure,
    make_body_family,
    project_tight,
    prove_inequality,
    violated_faces,
    width_size_of_inequality,
)
from .corpus import (
    DEFAULT_SEED,
    HalflineCase,
    random_cut,
    random_fraction,
    random_halfline,
    random_instance,
    random_level_cut,
    random_slab,
    random_weights,
)
from .cuts import (
    AlphaDecomposition,
    CertificateOutcome,
    Cut,
    CutClassification,
    DominanceCertificate,
    IntersectionProfile,
    alpha_decomposition,
    alpha_prime,
    beta_prime,
    classify_cut,
    cut_polyhedron_vertices,
    cut_profile,
    dominance_certificate,
    dominates,
    make_cut,
)
from .errors import (
    BudgetExceeded,
    DimensionMismatch,
    EmptyPolyhedron,
    InputFormatError,
    NonPointedPolyhedron,
    SemanticError,
    SplitPolyError,
)
from .mip import (
    POINT_BUDGET,
    MixedIntegerPointSet,
    default_box,
    enumerate_mixed_integer_points,
    mixed_integer_hull,
)
from .polyhedra import (
    HRep,
    VRep,
    canonicalize_hrep,
    canonicalize_vrep,
    filter_extreme_points,
    fourier_motzkin_project,
    project_polyhedron,
    hrep_contains,
    hrep_intersection,
    hrep_to_vrep,
    relative_interior_point,
    validate_vrep,
    vrep_to_hrep,
)
from .rationals import INF, Fraction, is_inf, parse_rat, reciprocal
from .relax import (
    BodySplit,
    BoundaryCrossing,
    LiftedCut,
    alpha_boundary,
    beta_boundary,
    boundary_crossings,
    intersection_cut,
    is_trivial,
    relax_balas,
    relax_vertices,
    split_by_body,
)

__all__ = [
    "AlphaDecomposition",
    "BodyFamily",
    "BodySplit",
    "BoundaryCrossing",
    "BudgetExceeded",
    "CertificateOutcome",
    "ClosureRound",
    "Cut",
    "CutClassification",
    "DEFAULT_SEED",
    "DimensionMismatch",
    "DominanceCertificate",
    "EmptyPolyhedron",
    "ExampleMilp",
    "FaceRecord",
    "Fraction",
    "HRep",
    "HalflineCase",
    "INF",
    "InputFormatError",
    "IntersectionProfile",
    "LiftedCut",
    "MixedIntegerPointSet",
    "NonPointedPolyhedron",
    "POINT_BUDGET",
    "ProofTrace",
    "SemanticError",
    "SplitBody",
    "SplitPolyError",
    "TightProjection",
    "VRep",
    "WidthSizeReport",
    "WidthSizeResult",
    "alpha_boundary",
    "alpha_decomposition",
    "alpha_prime",
    "beta_boundary",
    "beta_prime",
    "body_contains",
    "body_hrep",
    "body_is_empty",
    "boundary_crossings",
    "canonicalize_hrep",
    "canonicalize_vrep",
    "classify_cut",
    "closure",
    "closure_hrep",
    "contains_relative_interior",
    "cut_polyhedron_vertices",
    "cut_profile",
    "default_box",
    "dominance_certificate",
    "dominates",
    "enumerate_mixed_integer_points",
    "enumerate_split_sets",
    "example_milp",
    "filter_extreme_points",
    "fourier_motzkin_project",
    "project_polyhedron",
    "hrep_contains",
    "hrep_intersection",
    "hrep_to_vrep",
    "interior_lattice_point",
    "intersection_cut",
    "is_inf",
    "is_lattice_point_free",
    "is_trivial",
    "iterated_closure",
    "make_body",
    "make_body_family",
    "make_cut",
    "make_simplex_body",
    "make_split_set",
    "max_facet_width",
    "mixed_integer_hull",
    "parse_rat",
    "project_tight",
    "prove_inequality",
    "random_cut",
    "random_fraction",
    "random_halfline",
    "random_instance",
    "random_level_cut",
    "random_slab",
    "random_weights",
    "recession_is_linear",
    "reciprocal",
    "relative_interior_point",
    "relax_balas",
    "relax_vertices",
    "restrict_to_integer_space",
    "split_by_body",
    "strictly_inside",
    "validate_vrep",
    "violated_faces",
    "vrep_to_hrep",
    "width_along",
    "width_size_of_inequality",
    "width_size_over_family",
]
