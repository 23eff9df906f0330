"""Strong edge coloring: exact strong chromatic index on special graph classes."""

from .graph import (Graph, GraphError, StrongColoring, build_graph, conflict_sets,
                    edges_within_distance_one, is_chordal, line_graph_square, mcs_order)
from .oracle import (OracleBudgetError, Violation, exact_strong_index, max_clique_lg2,
                     strong_k_coloring, verify_strong_coloring)
from .outerplanar import (ExtendedTriangle, NotMOPError, OuterplanarDual, extended_triangle_phi,
                          greedy_strong_coloring, mop_strong_index, recognize_mop)

__all__ = [
    "ExtendedTriangle", "Graph", "GraphError", "NotMOPError", "OracleBudgetError",
    "OuterplanarDual", "StrongColoring", "Violation", "build_graph", "conflict_sets",
    "edges_within_distance_one", "exact_strong_index", "extended_triangle_phi",
    "greedy_strong_coloring", "is_chordal", "line_graph_square", "max_clique_lg2", "mcs_order",
    "mop_strong_index", "recognize_mop", "strong_k_coloring", "verify_strong_coloring",
]
