"""Exhaustive machine checks of chorded-pancyclicity results for claw-free graphs."""

from .cycles import (
    CycleWitness,
    PancyclicityReport,
    find_chorded_cycle,
    find_cycle,
    k_tabs,
    minimal_k_tab,
    pancyclicity_report,
)
from .enumeration import ClassSpec, GenStats, generate_class, stream_graph6
from .errors import (
    BudgetExceeded,
    CapacityError,
    ChordckError,
    GenerationRefused,
    Graph6ParseError,
    IncompleteVerification,
    InvalidEdgeError,
    InvalidParameterError,
    InvalidVertexError,
)
from .graph import (
    CAPACITY,
    Graph,
    canonical_form,
    cartesian_product,
    cut_vertices,
    from_edge_list,
    is_isomorphic,
    is_two_connected,
    parse_graph6,
    standard_graph,
    to_graph6,
)
from .patterns import (
    NeighborhoodShape,
    Pattern,
    contains_induced,
    first_forbidden_witness,
    make_pattern,
    neighborhood_structure,
    pattern,
)
from .theorems import (
    GraphEvaluation,
    TheoremSpec,
    VerificationReport,
    evaluate,
    gallery,
    get_theorem,
    sharpness_search,
    theorem_catalog,
    verify,
)

__version__ = "0.1.0"

__all__ = [
    "ClassSpec",
    "GenStats",
    "generate_class",
    "stream_graph6",
    "BudgetExceeded",
    "CAPACITY",
    "CapacityError",
    "ChordckError",
    "CycleWitness",
    "GenerationRefused",
    "Graph",
    "Graph6ParseError",
    "GraphEvaluation",
    "IncompleteVerification",
    "InvalidEdgeError",
    "InvalidParameterError",
    "InvalidVertexError",
    "NeighborhoodShape",
    "PancyclicityReport",
    "Pattern",
    "TheoremSpec",
    "VerificationReport",
    "canonical_form",
    "cartesian_product",
    "contains_induced",
    "cut_vertices",
    "evaluate",
    "find_chorded_cycle",
    "find_cycle",
    "first_forbidden_witness",
    "from_edge_list",
    "gallery",
    "get_theorem",
    "is_isomorphic",
    "is_two_connected",
    "k_tabs",
    "make_pattern",
    "minimal_k_tab",
    "neighborhood_structure",
    "pancyclicity_report",
    "parse_graph6",
    "pattern",
    "sharpness_search",
    "standard_graph",
    "theorem_catalog",
    "to_graph6",
    "verify",
]
