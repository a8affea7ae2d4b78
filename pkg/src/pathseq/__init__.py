"""Path degree-sequence invariants of starlike and clique-coalesced trees.

The package computes, for a connected graph and a symmetric index function f,
the order-h invariant: the sum of f over the degree sequences of all paths on
h edges. For starlike trees and for trees coalesced with a clique the censuses
have closed forms, which drive verification, reconstruction of a spec from its
invariant profile, and all-pairs distinguishability surveys.
"""

from .errors import (
    AmbiguousRootError,
    BudgetExceededError,
    BudgetMismatchError,
    DisconnectedError,
    DuplicateEdgeError,
    FamilyMismatchError,
    FormatError,
    InvalidSpecError,
    NoCandidateRootError,
    NonIntegerBranchCountError,
    PathseqError,
    ProfileMismatchError,
    ReconstructionError,
    SelfLoopError,
    SizeMismatchError,
    SymmetryError,
    UnknownIndexError,
    VertexOutOfRangeError,
)
from .generalized import (
    GenStarlikeSpec,
    coalesce_spec,
    generalized_census,
    generalized_invariant,
    generalized_mu,
    generalized_profile,
    load_generalized_spec,
    parse_generalized_spec,
    realize_generalized,
)
from .graph import (
    DEFAULT_BUDGET,
    Census,
    Graph,
    build_graph,
    canonical_class,
    census_series,
    enumerate_paths,
    load_edge_list,
    longest_path_length,
    parse_edge_list,
    path_census,
)
from .invariants import (
    InvariantFunction,
    builtin,
    evaluate_invariant,
    invariant_from_census,
    invariant_profile,
    register_invariant,
    resolve_index,
    validate_symmetry,
)
from .reconstruct import (
    ConditionReport,
    ReconstructionResult,
    SurveyReport,
    check_generalized_conditions,
    check_starlike_conditions,
    distinguish,
    generalized_specs,
    reconstruct_generalized,
    reconstruct_starlike,
    starlike_specs,
    survey_distinguishability,
)
from .starlike import (
    StarlikeSpec,
    load_starlike_spec,
    mu_coefficient,
    parse_starlike_spec,
    realize_starlike,
    starlike_census,
    starlike_invariant,
    starlike_profile,
    tail_coefficients,
)

__version__ = "0.1.0"

__all__ = [
    "AmbiguousRootError",
    "BudgetExceededError",
    "BudgetMismatchError",
    "Census",
    "ConditionReport",
    "DEFAULT_BUDGET",
    "DisconnectedError",
    "DuplicateEdgeError",
    "FamilyMismatchError",
    "FormatError",
    "GenStarlikeSpec",
    "Graph",
    "InvalidSpecError",
    "InvariantFunction",
    "NoCandidateRootError",
    "NonIntegerBranchCountError",
    "PathseqError",
    "ProfileMismatchError",
    "ReconstructionError",
    "ReconstructionResult",
    "SelfLoopError",
    "SizeMismatchError",
    "StarlikeSpec",
    "SurveyReport",
    "SymmetryError",
    "UnknownIndexError",
    "VertexOutOfRangeError",
    "build_graph",
    "builtin",
    "canonical_class",
    "census_series",
    "check_generalized_conditions",
    "check_starlike_conditions",
    "coalesce_spec",
    "distinguish",
    "enumerate_paths",
    "evaluate_invariant",
    "generalized_census",
    "generalized_invariant",
    "generalized_mu",
    "generalized_profile",
    "generalized_specs",
    "invariant_from_census",
    "invariant_profile",
    "load_edge_list",
    "load_generalized_spec",
    "load_starlike_spec",
    "longest_path_length",
    "mu_coefficient",
    "parse_edge_list",
    "parse_generalized_spec",
    "parse_starlike_spec",
    "path_census",
    "realize_generalized",
    "realize_starlike",
    "reconstruct_generalized",
    "reconstruct_starlike",
    "register_invariant",
    "resolve_index",
    "starlike_census",
    "starlike_invariant",
    "starlike_profile",
    "starlike_specs",
    "survey_distinguishability",
    "tail_coefficients",
    "validate_symmetry",
]
