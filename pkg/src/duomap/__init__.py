"""Weighted duo-preservation string mapping: 6-approximation and oracles.

Pipeline: build the bipartite duo graph of two equal-length strings, turn
its edges into a vertex-weighted conflict graph, solve the anchored-clique
LP relaxation, and round the fractional solution with a local-ratio weight
decomposition. The selected duo pairs extend to a full character bijection.
Exact brute-force oracles validate the reductions at desk scale.
"""

from .approx import (
    IndependentSet,
    SolveReport,
    WeightVector,
    local_ratio_round,
    select_vertex,
    solve_mwdsm,
)
from .conflict_graph import (
    CliqueFamily,
    ConflictGraph,
    ConflictVertex,
    build_conflict_graph,
    clique_family,
    closed_neighborhood,
    conflicts,
)
from .duo_graph import (
    DuoGraph,
    GEdge,
    MatchingCheck,
    build_duo_graph,
    verify_constrained_matching,
)
from .errors import (
    DuomapError,
    InconsistentSelectionError,
    InstanceFormatError,
    IterationLimitError,
    LengthMismatchError,
    NonPositiveWeightError,
    NotPermutationError,
    TooLargeError,
    ValidationError,
)
from .exact import ExactResult, exact_by_mapping_enumeration, exact_mwis
from .generate import random_instance
from .instance import (
    Duo,
    Instance,
    WeightSpec,
    dump_instance,
    eval_weight,
    extract_duos,
    load_instance,
    parse_instance,
    validate_instance,
)
from .lp import (
    FractionalSolution,
    LpModel,
    build_lp,
    check_lp_feasibility,
    solve_lp,
)
from .mapping import Mapping, extend_to_bijection, score_mapping

__version__ = "0.1.0"

__all__ = [
    "CliqueFamily",
    "ConflictGraph",
    "ConflictVertex",
    "Duo",
    "DuoGraph",
    "DuomapError",
    "ExactResult",
    "FractionalSolution",
    "GEdge",
    "InconsistentSelectionError",
    "IndependentSet",
    "Instance",
    "InstanceFormatError",
    "IterationLimitError",
    "LengthMismatchError",
    "LpModel",
    "Mapping",
    "MatchingCheck",
    "NonPositiveWeightError",
    "NotPermutationError",
    "SolveReport",
    "TooLargeError",
    "ValidationError",
    "WeightSpec",
    "WeightVector",
    "build_conflict_graph",
    "build_duo_graph",
    "build_lp",
    "check_lp_feasibility",
    "clique_family",
    "closed_neighborhood",
    "conflicts",
    "dump_instance",
    "eval_weight",
    "exact_by_mapping_enumeration",
    "exact_mwis",
    "extend_to_bijection",
    "extract_duos",
    "load_instance",
    "local_ratio_round",
    "parse_instance",
    "random_instance",
    "score_mapping",
    "select_vertex",
    "solve_lp",
    "solve_mwdsm",
    "validate_instance",
    "verify_constrained_matching",
]
