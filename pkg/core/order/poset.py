"""The order (GC(O), <_gc) and its lattice operations.

b <_gc a when b is reachable from a in R(G). For non-dual elements this coincides with
strict componentwise dominance of shot vectors from O, which is what compare_gc and
inf_gc use; sup_gc scans the order itself.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from typing import Dict, FrozenSet, List, Mapping, Tuple

import networkx as nx

from core.errors import BudgetExceededError, DualTargetError, LatticeError, UnreachableError
from core.game.models import Configuration, GameParams, Ordering
from core.game.rules import is_dual
from core.order.shots import ShotVector, componentwise_max, reconstruct, shot_labels
from core.statespace.graph import DEFAULT_NODE_BUDGET
from core.statespace.reduced import BOTTOM, Node, ReducedGraph, node_key, reachable_set, sort_nodes

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class PosetView:
    origin: Configuration
    params: GameParams
    elements: FrozenSet[Node]
    labels: Mapping[Configuration, ShotVector]
    hasse: nx.DiGraph
    below: Mapping[Node, FrozenSet[Node]]

    @property
    def covers(self) -> List[Tuple[Node, Node]]:
        """(upper, lower) pairs of the covering relation, sorted."""
        return sorted(self.hasse.edges, key=lambda e: (node_key(e[0]), node_key(e[1])))

    @property
    def sorted_elements(self) -> List[Node]:
        return sort_nodes(self.elements)

    def leq(self, a: Node, b: Node) -> bool:
        """a <=_gc b: a is reachable from b."""
        return a in self.below[b]

    def maximal_elements(self) -> List[Node]:
        return sort_nodes(x for x in self.elements if self.hasse.in_degree(x) == 0)

    def minimal_elements(self) -> List[Node]:
        return sort_nodes(x for x in self.elements if self.hasse.out_degree(x) == 0)

    def __contains__(self, a: object) -> bool:
        return a in self.elements

    def __len__(self) -> int:
        return len(self.elements)


def build_poset(origin: Configuration, rg: ReducedGraph, *, budget: int = DEFAULT_NODE_BUDGET) -> PosetView:
    """Elements, shot-vector labels and covering relation of GC(origin)."""
    if is_dual(origin, rg.params):
        raise DualTargetError(f"({origin}) is dual; GC(O) needs a non-dual origin")
    reach = reachable_set(rg, origin)
    if len(reach) > budget:
        raise BudgetExceededError(
            f"GC({origin}) has {len(reach)} elements, above the budget {budget}",
            required=len(reach),
            budget=budget,
        )
    sub = rg.graph.subgraph(reach.members)
    hasse = nx.transitive_reduction(sub)
    below: Dict[Node, FrozenSet[Node]] = {
        x: frozenset(nx.descendants(sub, x) | {x}) for x in reach.members
    }
    labels = shot_labels(origin, rg)
    logger.info("GC(%s): %d elements, %d covers", origin, len(reach), hasse.number_of_edges())
    return PosetView(
        origin=origin,
        params=rg.params,
        elements=reach.members,
        labels=labels,
        hasse=hasse,
        below=below,
    )


def _require(pv: PosetView, *xs: Node) -> None:
    for x in xs:
        if x not in pv.elements:
            raise UnreachableError(f"({x}) is not an element of GC({pv.origin})")


def compare_gc(pv: PosetView, a: Configuration, b: Configuration) -> Ordering:
    """Compare two non-dual elements through their shot vectors from O."""
    _require(pv, a, b)
    if a is BOTTOM or b is BOTTOM:
        raise DualTargetError("compare_gc takes non-dual elements; BOT has no shot vector")
    if a == b:
        return Ordering.EQUAL
    sa, sb = pv.labels[a], pv.labels[b]
    if sa < sb:
        return Ordering.GREATER
    if sb < sa:
        return Ordering.LESS
    return Ordering.INCOMPARABLE


def inf_gc(pv: PosetView, a: Node, b: Node) -> Node:
    """Greatest lower bound via the componentwise maximum of the shot vectors."""
    _require(pv, a, b)
    if a is BOTTOM or b is BOTTOM:
        return BOTTOM
    m = componentwise_max(pv.labels[a], pv.labels[b])
    c = reconstruct(pv.origin, m)
    if is_dual(c, pv.params):
        return BOTTOM
    if c not in pv.elements:
        raise LatticeError(f"reconstructed ({c}) from shot vector ({m}) is not in GC({pv.origin})")
    return c


def sup_gc(pv: PosetView, a: Node, b: Node) -> Node:
    """Least common upper bound, found by scanning the order."""
    _require(pv, a, b)
    uppers = [x for x in pv.elements if pv.leq(a, x) and pv.leq(b, x)]
    least = [x for x in uppers if all(pv.leq(x, y) for y in uppers)]
    if len(least) != 1:
        raise LatticeError(f"no unique least upper bound for ({a}) and ({b}) in GC({pv.origin})")
    return least[0]


__all__ = ["PosetView", "build_poset", "compare_gc", "inf_gc", "sup_gc"]
