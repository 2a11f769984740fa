"""Shot vectors and the lattice GC(O)."""

from .shots import (
    ShotVector,
    componentwise_max,
    reconstruct,
    shot_identity_check,
    shot_labels,
    shot_vector,
)
from .poset import PosetView, build_poset, compare_gc, inf_gc, sup_gc
from .export import hasse_records, hasse_to_dot, pair_table

__all__ = [
    "ShotVector",
    "componentwise_max",
    "reconstruct",
    "shot_identity_check",
    "shot_labels",
    "shot_vector",
    "PosetView",
    "build_poset",
    "compare_gc",
    "inf_gc",
    "sup_gc",
    "hasse_records",
    "hasse_to_dot",
    "pair_table",
]
