"""Full transition graph G of a game and its strongly connected components."""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Callable, FrozenSet, List, Optional, Tuple

import networkx as nx

from core.errors import BudgetExceededError, ConfigurationError
from core.game.compositions import configurations, count_configurations
from core.game.models import Configuration, GameParams
from core.game.rules import enabled_positions, is_dual, shift_card

logger = logging.getLogger(__name__)

DEFAULT_NODE_BUDGET = 10**6

EnablingRule = Callable[[Configuration], FrozenSet[int]]


@dataclass(frozen=True, eq=False)
class TransitionGraph:
    """G: every configuration of the game, one arc per enabled move.

    Node attributes: ``dual``, ``fixed``. Arc attributes: ``position`` (the player who
    passed the card) and ``wrap`` (position == p, i.e. player p passing to player 1).
    The wrapped networkx graph must not be mutated after construction.
    """

    params: GameParams
    graph: nx.DiGraph

    @property
    def nodes(self) -> List[Configuration]:
        return sorted(self.graph.nodes)

    @property
    def arcs(self) -> List[Tuple[Configuration, Configuration]]:
        return sorted(self.graph.edges)

    def __contains__(self, a: object) -> bool:
        return a in self.graph

    def successors(self, a: Configuration) -> List[Configuration]:
        return sorted(self.graph.successors(a))

    def position(self, a: Configuration, b: Configuration) -> int:
        return self.graph.edges[a, b]["position"]


def check_budget(params: GameParams, budget: int) -> int:
    required = count_configurations(params)
    if required > budget:
        raise BudgetExceededError(
            f"{params.label} has {required} configurations, above the node budget {budget}",
            required=required,
            budget=budget,
        )
    return required


def build_graph(
    params: GameParams,
    *,
    budget: int = DEFAULT_NODE_BUDGET,
    enabling: Optional[EnablingRule] = None,
) -> TransitionGraph:
    """Build G for ``params``.

    Args:
        params: game parameters
        budget: maximum number of configurations allowed
        enabling: rule giving the enabled positions; defaults to the game rule.
            Alternative rules are only meant for negative-control harnesses.

    Returns:
        TransitionGraph over all weak compositions of n into p parts.
    """
    required = check_budget(params, budget)
    rule = enabling or enabled_positions
    g = nx.DiGraph()
    for a in configurations(params):
        moves = rule(a)
        g.add_node(a, dual=is_dual(a, params), fixed=not moves)
        for i in sorted(moves):
            b = shift_card(a, i)
            if g.has_edge(a, b):
                # distinct positions move distinct card pairs, so this never triggers
                logger.debug("parallel move %s -> %s at %d collapsed", a, b, i)
                continue
            g.add_edge(a, b, position=i, wrap=(i == params.p))
    logger.info("built G(%s): %d nodes, %d arcs", params.label, required, g.number_of_edges())
    return TransitionGraph(params=params, graph=g)


def strongly_connected_components(g: TransitionGraph) -> List[FrozenSet[Configuration]]:
    """SCC partition, sorted by the lexicographically smallest member of each part."""
    comps = [frozenset(c) for c in nx.strongly_connected_components(g.graph)]
    return sorted(comps, key=min)


def nontrivial_components(g: TransitionGraph) -> List[FrozenSet[Configuration]]:
    return [c for c in strongly_connected_components(g) if len(c) > 1]


def path_exists(g: TransitionGraph, a: Configuration, b: Configuration) -> bool:
    """True iff b can be reached from a (the empty path counts)."""
    for x in (a, b):
        if x not in g:
            raise ConfigurationError(f"({x}) is not a configuration of {g.params.label}")
    return nx.has_path(g.graph, a, b)


__all__ = [
    "DEFAULT_NODE_BUDGET",
    "EnablingRule",
    "TransitionGraph",
    "check_budget",
    "build_graph",
    "strongly_connected_components",
    "nontrivial_components",
    "path_exists",
]
