"""Value types of the game kernel.

All types are frozen dataclasses so they can be used as graph nodes and shared
freely between threads.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Tuple


@dataclass(frozen=True)
class GameParams:
    """n cards dealt to p players, n = k*p + q with 0 <= q < p."""

    n: int
    p: int
    k: int
    q: int

    @property
    def label(self) -> str:
        return f"n={self.n},p={self.p}"


@dataclass(frozen=True, order=True)
class Configuration:
    """Card counts of players 1..p. Ordering is lexicographic on the counts."""

    cards: Tuple[int, ...]

    @property
    def p(self) -> int:
        return len(self.cards)

    @property
    def n(self) -> int:
        return sum(self.cards)

    def at(self, i: int) -> int:
        """Card count of player i (1-based)."""
        return self.cards[i - 1]

    def __iter__(self) -> Iterator[int]:
        return iter(self.cards)

    def __len__(self) -> int:
        return len(self.cards)

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.cards)


@dataclass(frozen=True)
class PrefixDelta:
    """d(a,b): d_j = sum_{i<=j} (a_i - b_i). d_p is 0 for configurations of one game."""

    d: Tuple[int, ...]

    def at(self, j: int) -> int:
        return self.d[j - 1]

    @property
    def minimum(self) -> int:
        return min(self.d)

    @property
    def first_argmin(self) -> int:
        """Smallest 1-based index holding the minimal component."""
        return self.d.index(self.minimum) + 1

    @property
    def total(self) -> int:
        return sum(self.d)

    def __neg__(self) -> "PrefixDelta":
        return PrefixDelta(tuple(-x for x in self.d))

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.d)


class Ordering(str, Enum):
    """Outcome of comparing two elements of a partial order."""

    GREATER = "greater"
    LESS = "less"
    EQUAL = "equal"
    INCOMPARABLE = "incomparable"


__all__ = ["GameParams", "Configuration", "PrefixDelta", "Ordering"]
