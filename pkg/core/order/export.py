"""Hasse-diagram export of GC(O)."""
from __future__ import annotations

import itertools as it
import json
from typing import Iterator, List, Tuple

from core.order.poset import PosetView, inf_gc, sup_gc
from core.statespace.export import gvquote, node_id
from core.statespace.reduced import BOTTOM, Node


def element_label(pv: PosetView, x: Node) -> str:
    if x is BOTTOM:
        return "BOT"
    return f"{x} | {pv.labels[x]}"


def pair_table(pv: PosetView) -> List[Tuple[Node, Node, Node, Node]]:
    """(a, b, inf, sup) for every unordered pair of distinct elements."""
    return [
        (a, b, inf_gc(pv, a, b), sup_gc(pv, a, b))
        for a, b in it.combinations(pv.sorted_elements, 2)
    ]


def _hasse_lines(pv: PosetView, table: bool) -> Iterator[str]:
    yield f"digraph {gvquote(f'GC({pv.origin})')} {{\n"
    yield "  node [shape=box];\n"
    for x in pv.sorted_elements:
        yield f"  {node_id(x)} [label={gvquote(element_label(pv, x))}];\n"
    for upper, lower in pv.covers:
        yield f"  {node_id(upper)} -> {node_id(lower)};\n"
    if table:
        for a, b, lo, hi in pair_table(pv):
            yield f"  // inf({a}; {b}) = {lo}  sup({a}; {b}) = {hi}\n"
    yield "}\n"


def hasse_to_dot(pv: PosetView, *, table: bool = False) -> str:
    return "".join(_hasse_lines(pv, table))


def hasse_records(pv: PosetView, *, table: bool = False) -> Iterator[str]:
    for x in pv.sorted_elements:
        yield json.dumps({
            "kind": "element",
            "config": str(x),
            "shot": None if x is BOTTOM else str(pv.labels[x]),
        })
    for upper, lower in pv.covers:
        yield json.dumps({"kind": "cover", "upper": str(upper), "lower": str(lower)})
    if table:
        for a, b, lo, hi in pair_table(pv):
            yield json.dumps({"kind": "pair", "a": str(a), "b": str(b), "inf": str(lo), "sup": str(hi)})


__all__ = ["element_label", "pair_table", "hasse_to_dot", "hasse_records"]
