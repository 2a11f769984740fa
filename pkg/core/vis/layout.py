"""Layered top-down layout for state graphs and Hasse diagrams."""

from __future__ import annotations

from typing import Dict, Hashable, List, Optional, Tuple

import networkx as nx

from core.statespace.reduced import node_key


def layered_layout(g: nx.DiGraph, max_per_layer: Optional[int] = None) -> Dict[Hashable, Tuple[float, float]]:
    """Place every node on the row of its longest distance from a source.

    Sources sit on the top row and arcs point downwards. Rows wider than
    max_per_layer are wrapped into sub-rows inside the band of their rank.
    A graph with circuits falls back to a seeded spring layout.
    """
    if len(g.nodes) == 0:
        return {}

    try:
        order = list(nx.topological_sort(g))
    except nx.NetworkXUnfeasible:
        return nx.spring_layout(g, seed=42)

    rank: Dict[Hashable, int] = {n: 0 for n in order}
    for n in order:
        for succ in g.successors(n):
            rank[succ] = max(rank[succ], rank[n] + 1)

    by_rank: Dict[int, List[Hashable]] = {}
    for node, lv in rank.items():
        by_rank.setdefault(lv, []).append(node)
    ranks_sorted = sorted(by_rank)

    # (rank, sub_index, nodes)
    rows: List[Tuple[int, int, List[Hashable]]] = []
    for r in ranks_sorted:
        nodes = sorted(by_rank[r], key=node_key)
        if max_per_layer and len(nodes) > max_per_layer:
            for sub_idx, start in enumerate(range(0, len(nodes), max_per_layer)):
                rows.append((r, sub_idx, nodes[start:start + max_per_layer]))
        else:
            rows.append((r, 0, nodes))

    total = len(ranks_sorted)
    y_margin, x_margin = 0.08, 0.05
    y_usable, x_usable = 1.0 - 2 * y_margin, 1.0 - 2 * x_margin
    band = y_usable / max(1, total - 1)
    pos: Dict[Hashable, Tuple[float, float]] = {}
    for r, sub_idx, nodes in rows:
        subrows = sum(1 for rr, _, _ in rows if rr == r)
        base_y = 0.5 if total == 1 else 1.0 - y_margin - r * band
        y = base_y - (sub_idx / subrows) * band * 0.9 if subrows > 1 else base_y
        count = len(nodes)
        for i, node in enumerate(nodes):
            x = 0.5 if count == 1 else x_margin + x_usable * (i / (count - 1))
            pos[node] = (x, y)
    return pos


__all__ = ["layered_layout"]
