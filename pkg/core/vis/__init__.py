# Rendering of state graphs and Hasse diagrams

from .layout import layered_layout
from .render import render_hasse, render_state_graph

__all__ = [
    "layered_layout",
    "render_hasse",
    "render_state_graph",
]
