"""Dominance (prefix-sum) order on the dual configurations."""
from __future__ import annotations

import itertools as it
from dataclasses import dataclass
from typing import List, Tuple

import networkx as nx

from core.errors import NotDualError, RegimeError
from core.game.compositions import dual_configurations
from core.game.models import Configuration, GameParams, Ordering
from core.game.rules import is_dual, params_of


def _prefix_sums(a: Configuration) -> Tuple[int, ...]:
    return tuple(it.accumulate(a.cards))


def dominance_compare(a: Configuration, b: Configuration) -> Ordering:
    params = params_of(a)
    for x in (a, b):
        if x.p != params.p or x.n != params.n or not is_dual(x, params):
            raise NotDualError(f"({x}) is not a dual configuration of {params.label}")
    if a == b:
        return Ordering.EQUAL
    pa, pb = _prefix_sums(a), _prefix_sums(b)
    if all(x >= y for x, y in zip(pa, pb)):
        return Ordering.GREATER
    if all(x <= y for x, y in zip(pa, pb)):
        return Ordering.LESS
    return Ordering.INCOMPARABLE


@dataclass(frozen=True, eq=False)
class DominanceOrder:
    """Strict dominance relation on the duals: arc a -> b when a dominates b."""

    params: GameParams
    elements: Tuple[Configuration, ...]
    relation: nx.DiGraph

    @property
    def greatest(self) -> List[Configuration]:
        return sorted(x for x in self.elements if self.relation.in_degree(x) == 0)

    @property
    def covers(self) -> List[Tuple[Configuration, Configuration]]:
        return sorted(nx.transitive_reduction(self.relation).edges)


def dominance_order(params: GameParams) -> DominanceOrder:
    if params.q == 0:
        raise RegimeError(f"{params.label} has q=0 and no dual configurations")
    duals = dual_configurations(params)
    relation = nx.DiGraph()
    relation.add_nodes_from(duals)
    for a, b in it.permutations(duals, 2):
        if dominance_compare(a, b) is Ordering.GREATER:
            relation.add_edge(a, b)
    return DominanceOrder(params=params, elements=tuple(duals), relation=relation)


def dominance_longest_chain(params: GameParams) -> int:
    """Number of strict steps in a longest chain; q(p-q) for every game."""
    return nx.dag_longest_path_length(dominance_order(params).relation)


__all__ = [
    "dominance_compare",
    "DominanceOrder",
    "dominance_order",
    "dominance_longest_chain",
]
