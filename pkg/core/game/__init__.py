"""Game kernel: parameters, configurations and the move rule."""

from .models import Configuration, GameParams, Ordering, PrefixDelta
from .rules import (
    apply_move,
    canonical_dual,
    configuration,
    enabled_positions,
    is_dual,
    is_fixed_point,
    make_params,
    params_of,
    predecessor,
    prefix_delta,
    shift_card,
    successor,
)
from .compositions import configurations, count_configurations, dual_configurations
from .text import format_configuration, parse_configuration

__all__ = [
    "Configuration",
    "GameParams",
    "Ordering",
    "PrefixDelta",
    "apply_move",
    "canonical_dual",
    "configuration",
    "enabled_positions",
    "is_dual",
    "is_fixed_point",
    "make_params",
    "params_of",
    "predecessor",
    "prefix_delta",
    "shift_card",
    "successor",
    "configurations",
    "count_configurations",
    "dual_configurations",
    "format_configuration",
    "parse_configuration",
]
