"""Exception hierarchy for the card-game toolkit.

The CLI maps these to exit codes (see orchestrator.EXIT_CODES).
"""
from __future__ import annotations

from typing import Optional


class CardGameError(Exception):
    """Base class for every error raised by the core packages."""


class ParameterError(CardGameError, ValueError):
    """Invalid game parameters (p < 2, negative n, ...)."""


class ConfigurationError(ParameterError):
    """Malformed configuration, or one that does not match the game parameters."""


class RegimeError(ParameterError):
    """Operation only defined for q = 0 (or only for q > 0) called in the other regime."""


class NotDualError(ParameterError):
    """A dual configuration was required."""


class MoveNotEnabledError(CardGameError):
    """apply_move on a position whose right neighbour does not hold fewer cards."""

    def __init__(self, cards: str, position: int):
        super().__init__(f"move at position {position} is not enabled in ({cards})")
        self.position = position


class UnreachableError(CardGameError):
    """Target is not reachable from the origin (or lies outside GC(O))."""


class DualTargetError(CardGameError):
    """Shot vectors and posets are only defined for non-dual endpoints."""


class LatticeError(CardGameError):
    """The order scan did not find a unique bound."""


class BudgetExceededError(CardGameError):
    """A state-space or enumeration budget would be exceeded."""

    def __init__(self, message: str, *, required: Optional[int] = None, budget: Optional[int] = None):
        super().__init__(message)
        self.required = required
        self.budget = budget


class PathCapExceededError(BudgetExceededError):
    """Path enumeration hit its path-count or path-length cap."""


__all__ = [
    "CardGameError",
    "ParameterError",
    "ConfigurationError",
    "RegimeError",
    "NotDualError",
    "MoveNotEnabledError",
    "UnreachableError",
    "DualTargetError",
    "LatticeError",
    "BudgetExceededError",
    "PathCapExceededError",
]
