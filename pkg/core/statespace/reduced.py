"""Reduced graph R(G): the dual configurations collapsed into a bottom vertex."""
from __future__ import annotations

from dataclasses import dataclass
from typing import FrozenSet, List, Tuple, Union

import networkx as nx

from core.errors import ConfigurationError
from core.game.models import Configuration, GameParams
from core.game.rules import is_dual
from core.statespace.graph import TransitionGraph


class _Bottom:
    """The vertex standing for the whole set of dual configurations."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "BOT"

    __str__ = __repr__

    def __reduce__(self):
        return (_Bottom, ())


BOTTOM = _Bottom()

Node = Union[Configuration, _Bottom]


def node_key(x: Node) -> Tuple[int, Tuple[int, ...]]:
    """Sort key: configurations lexicographically, BOT last."""
    if x is BOTTOM:
        return (1, ())
    return (0, x.cards)


def sort_nodes(nodes) -> List[Node]:
    return sorted(nodes, key=node_key)


@dataclass(frozen=True, eq=False)
class ReducedGraph:
    params: GameParams
    graph: nx.DiGraph

    @property
    def has_bottom(self) -> bool:
        return BOTTOM in self.graph

    @property
    def nodes(self) -> List[Node]:
        return sort_nodes(self.graph.nodes)

    @property
    def arcs(self) -> List[Tuple[Node, Node]]:
        return sorted(self.graph.edges, key=lambda e: (node_key(e[0]), node_key(e[1])))

    def __contains__(self, a: object) -> bool:
        return a in self.graph


@dataclass(frozen=True)
class ReachableSet:
    origin: Configuration
    members: FrozenSet[Node]

    def __contains__(self, a: object) -> bool:
        return a in self.members

    def __len__(self) -> int:
        return len(self.members)

    @property
    def sorted_members(self) -> List[Node]:
        return sort_nodes(self.members)


def reduce(g: TransitionGraph, params: GameParams) -> ReducedGraph:
    """Collapse the duals into BOTTOM; for q = 0 the result equals G."""
    rg = nx.DiGraph()
    for a, data in g.graph.nodes(data=True):
        if not is_dual(a, params):
            rg.add_node(a, **data)
    if params.q > 0:
        rg.add_node(BOTTOM, dual=True, fixed=False)
    for a, b, data in g.graph.edges(data=True):
        if is_dual(a, params):
            continue
        if is_dual(b, params):
            rg.add_edge(a, BOTTOM, wrap=False)
        else:
            rg.add_edge(a, b, **data)
    return ReducedGraph(params=params, graph=rg)


def reachable_set(rg: ReducedGraph, origin: Configuration) -> ReachableSet:
    """Forward closure of ``origin`` in R(G). A dual origin yields {BOT}."""
    if is_dual(origin, rg.params):
        return ReachableSet(origin=origin, members=frozenset([BOTTOM]))
    if origin not in rg:
        raise ConfigurationError(f"({origin}) is not a configuration of {rg.params.label}")
    members = nx.descendants(rg.graph, origin) | {origin}
    return ReachableSet(origin=origin, members=frozenset(members))


__all__ = [
    "BOTTOM",
    "Node",
    "node_key",
    "sort_nodes",
    "ReducedGraph",
    "ReachableSet",
    "reduce",
    "reachable_set",
]
