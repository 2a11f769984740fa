"""PNG rendering of G, R(G) and Hasse diagrams."""

from __future__ import annotations

import logging
import os
from typing import Dict, Hashable, List, Optional, Tuple, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
import networkx as nx  # noqa: E402

from core.order.export import element_label  # noqa: E402
from core.order.poset import PosetView  # noqa: E402
from core.statespace.graph import TransitionGraph  # noqa: E402
from core.statespace.reduced import BOTTOM, ReducedGraph  # noqa: E402
from core.vis.layout import layered_layout  # noqa: E402

logger = logging.getLogger(__name__)

NODE_SIZE = 900
PLAIN_COLOR = "#ffffff"
DUAL_COLOR = "#c8c8c8"
BOTTOM_COLOR = "#7f7f7f"
ARC_COLOR = "#2E5090"


def _figure_size(pos: Dict[Hashable, Tuple[float, float]], max_per_layer: int) -> Tuple[float, float]:
    rows = len({round(y, 6) for _, y in pos.values()})
    width = min(max(8, 1.6 * max_per_layer), 48)
    height = min(max(6, 1.6 * rows), 48)
    return width, height


def _save(out_path: str) -> str:
    parent = os.path.dirname(out_path)
    if parent:
        os.makedirs(parent, exist_ok=True)
    ax = plt.gca()
    ax.set_ylim(-0.05, 1.05)
    ax.set_xlim(-0.05, 1.05)
    plt.axis("off")
    plt.tight_layout()
    plt.savefig(out_path, dpi=150)
    plt.close()
    logger.info("wrote %s", out_path)
    return out_path


def _node_colors(graph: nx.DiGraph) -> List[str]:
    colors = []
    for x in graph.nodes:
        if x is BOTTOM:
            colors.append(BOTTOM_COLOR)
        elif graph.nodes[x].get("dual"):
            colors.append(DUAL_COLOR)
        else:
            colors.append(PLAIN_COLOR)
    return colors


def render_state_graph(
    g: Union[TransitionGraph, ReducedGraph],
    out_path: str,
    *,
    max_per_layer: Optional[int] = 12,
) -> str:
    """Draw G or R(G): duals grey, BOT dark, wrap arcs (player p to 1) dashed.

    R(G) and the q = 0 graph are acyclic and drawn in layers from the sources
    down; a full graph with its dual component uses a spring layout.
    """
    graph = g.graph
    pos = layered_layout(graph, max_per_layer=max_per_layer)
    plt.figure(figsize=_figure_size(pos, max_per_layer or 12))

    nx.draw_networkx_nodes(
        graph, pos, node_size=NODE_SIZE, node_color=_node_colors(graph),
        edgecolors="black", linewidths=1, node_shape="s",
    )
    plain = [e for e in graph.edges if not graph.edges[e].get("wrap")]
    wrap = [e for e in graph.edges if graph.edges[e].get("wrap")]
    common = dict(edge_color=ARC_COLOR, arrows=True, arrowstyle="-|>", arrowsize=12, width=1.2,
                  alpha=0.8, node_size=NODE_SIZE)
    nx.draw_networkx_edges(graph, pos, edgelist=plain, **common)
    if wrap:
        nx.draw_networkx_edges(graph, pos, edgelist=wrap, style="dashed", **common)
    nx.draw_networkx_labels(graph, pos, labels={x: str(x) for x in graph.nodes}, font_size=7)

    kind = "R" if isinstance(g, ReducedGraph) else "G"
    plt.title(f"{kind}({g.params.label}) | {graph.number_of_nodes()} nodes, {graph.number_of_edges()} arcs",
              fontsize=11, pad=16)
    return _save(out_path)


def render_hasse(pv: PosetView, out_path: str, *, max_per_layer: Optional[int] = 8) -> str:
    """Draw the covering relation of GC(O), origin on top, each element labelled with its shot vector."""
    hasse = pv.hasse
    pos = layered_layout(hasse, max_per_layer=max_per_layer)
    plt.figure(figsize=_figure_size(pos, max_per_layer or 8))
    nodes = list(hasse.nodes)
    colors = [BOTTOM_COLOR if x is BOTTOM else PLAIN_COLOR for x in nodes]
    nx.draw_networkx_nodes(hasse, pos, nodelist=nodes, node_size=NODE_SIZE * 2, node_color=colors,
                           edgecolors="black", linewidths=1, node_shape="s")
    nx.draw_networkx_edges(hasse, pos, edge_color=ARC_COLOR, arrows=False, width=1.2,
                           node_size=NODE_SIZE * 2)
    labels = {x: element_label(pv, x).replace(" | ", "\n") for x in nodes}
    nx.draw_networkx_labels(hasse, pos, labels=labels, font_size=7)
    plt.title(f"GC({pv.origin}) | {len(pv)} elements, {hasse.number_of_edges()} covers", fontsize=11, pad=16)
    return _save(out_path)


__all__ = ["render_state_graph", "render_hasse"]
