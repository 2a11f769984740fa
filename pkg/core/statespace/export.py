"""DOT and record export of G and R(G)."""
from __future__ import annotations

import json
from typing import Iterable, Iterator, Union

import networkx as nx

from core.statespace.graph import TransitionGraph
from core.statespace.reduced import BOTTOM, ReducedGraph, node_key, sort_nodes

DUAL_STYLE = 'style=filled, fillcolor="lightgrey"'


def gvquote(s: str) -> str:
    return '"{}"'.format(s.replace('"', r'\"'))


def node_id(x) -> str:
    return "BOT" if x is BOTTOM else gvquote(str(x))


def _dot_lines(graph: nx.DiGraph, name: str) -> Iterator[str]:
    yield f"digraph {gvquote(name)} {{\n"
    yield "  node [shape=box];\n"
    for x in sort_nodes(graph.nodes):
        if x is BOTTOM:
            yield '  BOT [label="BOT", shape=doublecircle];\n'
        elif graph.nodes[x].get("dual"):
            yield f"  {node_id(x)} [{DUAL_STYLE}];\n"
        else:
            yield f"  {node_id(x)};\n"
    for a, b in sorted(graph.edges, key=lambda e: (node_key(e[0]), node_key(e[1]))):
        if graph.edges[a, b].get("wrap"):
            yield f"  {node_id(a)} -> {node_id(b)} [style=dashed];\n"
        else:
            yield f"  {node_id(a)} -> {node_id(b)};\n"
    yield "}\n"


def to_dot(g: Union[TransitionGraph, ReducedGraph]) -> str:
    """Deterministic DOT text; duals filled grey, wrap arcs (player p to 1) dashed."""
    kind = "R" if isinstance(g, ReducedGraph) else "G"
    return "".join(_dot_lines(g.graph, f"{kind}({g.params.label})"))


def graph_records(g: Union[TransitionGraph, ReducedGraph]) -> Iterable[str]:
    """One JSON record per node, then one per arc."""
    graph = g.graph
    for x in sort_nodes(graph.nodes):
        data = graph.nodes[x]
        yield json.dumps({
            "kind": "node",
            "config": str(x),
            "dual": bool(data.get("dual")),
            "fixed": bool(data.get("fixed")),
        })
    for a, b in sorted(graph.edges, key=lambda e: (node_key(e[0]), node_key(e[1]))):
        yield json.dumps({
            "kind": "arc",
            "source": str(a),
            "target": str(b),
            "position": graph.edges[a, b].get("position"),
        })


__all__ = ["gvquote", "node_id", "to_dot", "graph_records"]
