"""Brute-force checks of the closed-form results on small instances."""

from .models import PathCap, PathEnumeration, VerificationOutcome
from .paths import (
    enumerate_paths,
    fresh_endings,
    maximal_play_lengths,
    path_signatures,
    replay,
    shortest_moves_to,
)
from .checks import (
    verify_convergence_formulas,
    verify_dominance,
    verify_dual_count,
    verify_lattice,
    verify_order_characterization,
    verify_position_lemma,
    verify_sampled_plays,
    verify_scc_theorem,
    verify_shot_uniqueness,
    verify_termination,
)
from .sweep import SweepSettings, check_instance, run_sweep, summarize, sweep_instances

__all__ = [
    "PathCap",
    "PathEnumeration",
    "VerificationOutcome",
    "enumerate_paths",
    "fresh_endings",
    "maximal_play_lengths",
    "path_signatures",
    "replay",
    "shortest_moves_to",
    "verify_convergence_formulas",
    "verify_dominance",
    "verify_dual_count",
    "verify_lattice",
    "verify_order_characterization",
    "verify_position_lemma",
    "verify_sampled_plays",
    "verify_scc_theorem",
    "verify_shot_uniqueness",
    "verify_termination",
    "SweepSettings",
    "check_instance",
    "run_sweep",
    "summarize",
    "sweep_instances",
]
