"""Convergence time, inactive player, recurrence bound and the dominance order."""

from .formulas import (
    convergence_time_q0,
    first_recurrence,
    inactive_player,
    path_to_target,
    recurrence_bound,
    shot_vector_to_P,
    simulate_play,
    target_of,
    time_to_P,
)
from .dominance import DominanceOrder, dominance_compare, dominance_longest_chain, dominance_order
from .report import ConvergenceReport, convergence_report

__all__ = [
    "convergence_time_q0",
    "first_recurrence",
    "inactive_player",
    "path_to_target",
    "recurrence_bound",
    "shot_vector_to_P",
    "simulate_play",
    "target_of",
    "time_to_P",
    "DominanceOrder",
    "dominance_compare",
    "dominance_longest_chain",
    "dominance_order",
    "ConvergenceReport",
    "convergence_report",
]
