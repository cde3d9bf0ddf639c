"""Global mean first return time (GMFRT) of random walks: exact metrics,
extremal graph constructions, brute-force certification and Monte Carlo checks."""

from .errors import GmfrtError
from .extremal import (
    ExtremalResult,
    build_max_gmfrt_graph,
    build_min_gmfrt_graph,
    concentrate_step,
    max_case,
    min_degree_counts,
)
from .formats import parse_graph6, to_graph6
from .graph import DegreeSequence, Graph, degree_sequence, from_edge_list, is_connected, rewire
from .metrics import gmfrt, gmfrt_of_degrees, mfrt, stationary
from .trees import (
    build_path,
    build_star,
    flatten_step,
    max_tree_gmfrt,
    min_tree_gmfrt,
    starify_step,
)

__all__ = [
    "DegreeSequence",
    "ExtremalResult",
    "GmfrtError",
    "Graph",
    "build_max_gmfrt_graph",
    "build_min_gmfrt_graph",
    "build_path",
    "build_star",
    "concentrate_step",
    "degree_sequence",
    "flatten_step",
    "from_edge_list",
    "gmfrt",
    "gmfrt_of_degrees",
    "is_connected",
    "max_case",
    "max_tree_gmfrt",
    "mfrt",
    "min_degree_counts",
    "min_tree_gmfrt",
    "parse_graph6",
    "rewire",
    "starify_step",
    "stationary",
    "to_graph6",
]
