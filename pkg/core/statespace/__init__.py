"""State space of a game: G, its SCCs, R(G) and reachability sets."""

from .graph import (
    DEFAULT_NODE_BUDGET,
    TransitionGraph,
    build_graph,
    check_budget,
    nontrivial_components,
    path_exists,
    strongly_connected_components,
)
from .reduced import BOTTOM, ReachableSet, ReducedGraph, node_key, reachable_set, reduce, sort_nodes
from .export import graph_records, to_dot

__all__ = [
    "DEFAULT_NODE_BUDGET",
    "TransitionGraph",
    "build_graph",
    "check_budget",
    "nontrivial_components",
    "path_exists",
    "strongly_connected_components",
    "BOTTOM",
    "ReachableSet",
    "ReducedGraph",
    "node_key",
    "reachable_set",
    "reduce",
    "sort_nodes",
    "graph_records",
    "to_dot",
]
