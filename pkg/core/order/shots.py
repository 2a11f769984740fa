"""Shot vectors: how many cards each player passed along a sequence of moves."""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Dict, Sequence, Tuple

from core.errors import ConfigurationError, DualTargetError, UnreachableError
from core.game.models import Configuration
from core.game.rules import configuration, is_dual, predecessor, prefix_delta
from core.statespace.reduced import BOTTOM, ReducedGraph


@dataclass(frozen=True)
class ShotVector:
    s: Tuple[int, ...]

    @classmethod
    def zeros(cls, p: int) -> "ShotVector":
        return cls((0,) * p)

    @classmethod
    def unit(cls, p: int, i: int) -> "ShotVector":
        return cls(tuple(1 if j == i else 0 for j in range(1, p + 1)))

    @classmethod
    def of_moves(cls, p: int, positions: Sequence[int]) -> "ShotVector":
        counts = [0] * p
        for i in positions:
            counts[i - 1] += 1
        return cls(tuple(counts))

    def at(self, i: int) -> int:
        return self.s[i - 1]

    @property
    def total(self) -> int:
        """Length of any sequence carrying this shot vector."""
        return sum(self.s)

    def __add__(self, other: "ShotVector") -> "ShotVector":
        return ShotVector(tuple(x + y for x, y in zip(self.s, other.s)))

    # product order: <= everywhere; < means <= everywhere and different
    def __le__(self, other: "ShotVector") -> bool:
        return all(x <= y for x, y in zip(self.s, other.s))

    def __lt__(self, other: "ShotVector") -> bool:
        return self <= other and self.s != other.s

    def __ge__(self, other: "ShotVector") -> bool:
        return other <= self

    def __gt__(self, other: "ShotVector") -> bool:
        return other < self

    def __str__(self) -> str:
        return ",".join(str(x) for x in self.s)


def componentwise_max(a: ShotVector, b: ShotVector) -> ShotVector:
    return ShotVector(tuple(max(x, y) for x, y in zip(a.s, b.s)))


def shot_labels(origin: Configuration, rg: ReducedGraph) -> Dict[Configuration, ShotVector]:
    """Label every non-dual configuration reachable from ``origin`` with s(origin, .).

    Breadth-first: a child gets its parent's label plus the unit vector of the moved
    position. Path independence makes the first label found the only one.
    """
    if is_dual(origin, rg.params):
        raise DualTargetError(f"({origin}) is dual; shot vectors start from non-dual configurations")
    if origin not in rg:
        raise ConfigurationError(f"({origin}) is not a configuration of {rg.params.label}")
    p = rg.params.p
    labels: Dict[Configuration, ShotVector] = {origin: ShotVector.zeros(p)}
    frontier = deque([origin])
    while frontier:
        a = frontier.popleft()
        for b in rg.graph.successors(a):
            if b is BOTTOM or b in labels:
                continue
            labels[b] = labels[a] + ShotVector.unit(p, rg.graph.edges[a, b]["position"])
            frontier.append(b)
    return labels


def shot_vector(origin: Configuration, a: Configuration, rg: ReducedGraph) -> ShotVector:
    """s(origin, a) for a non-dual a reachable from origin."""
    if is_dual(a, rg.params):
        raise DualTargetError(f"({a}) is dual; its shot vector depends on the path taken")
    labels = shot_labels(origin, rg)
    if a not in labels:
        raise UnreachableError(f"({a}) is not reachable from ({origin})")
    return labels[a]


def shot_identity_check(origin: Configuration, a: Configuration, s: ShotVector) -> bool:
    """s == s_p * (1,...,1) + d(origin, a)."""
    d = prefix_delta(origin, a)
    if len(s.s) != len(d.d):
        return False
    sp = s.s[-1]
    return all(si == sp + dj for si, dj in zip(s.s, d.d))


def reconstruct(origin: Configuration, m: ShotVector) -> Configuration:
    """The configuration reached from ``origin`` after passing m_i cards at each i.

    c_i = O_i - m_i + m_{pred(i)}.
    """
    p = origin.p
    cards = [origin.at(i) - m.at(i) + m.at(predecessor(i, p)) for i in range(1, p + 1)]
    return configuration(cards)


__all__ = [
    "ShotVector",
    "componentwise_max",
    "shot_labels",
    "shot_vector",
    "shot_identity_check",
    "reconstruct",
]
