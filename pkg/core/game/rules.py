"""The move rule of the Game of Cards and the predicates built on it.

Positions are 1-based everywhere; the successor of player p is player 1.
"""
from __future__ import annotations

from typing import FrozenSet, Sequence

from core.errors import ConfigurationError, MoveNotEnabledError, ParameterError
from core.game.models import Configuration, GameParams, PrefixDelta


def make_params(n: int, p: int) -> GameParams:
    """Validate (n, p) and derive k = n div p, q = n mod p."""
    if isinstance(n, bool) or not isinstance(n, int) or isinstance(p, bool) or not isinstance(p, int):
        raise ParameterError(f"n and p must be integers, got n={n!r}, p={p!r}")
    if p < 2:
        raise ParameterError(f"need at least 2 players on the ring, got p={p}")
    if n < 0:
        raise ParameterError(f"number of cards must be non-negative, got n={n}")
    k, q = divmod(n, p)
    return GameParams(n=n, p=p, k=k, q=q)


def params_of(a: Configuration) -> GameParams:
    """Parameters of the game a configuration belongs to."""
    return make_params(a.n, a.p)


def configuration(cards: Sequence[int], params: GameParams | None = None) -> Configuration:
    """Build a configuration, checking counts (and length/sum against params if given)."""
    values = tuple(int(c) for c in cards)
    if len(values) < 2:
        raise ConfigurationError(f"a configuration needs at least 2 players, got {len(values)}")
    if any(c < 0 for c in values):
        raise ConfigurationError(f"card counts must be non-negative: {values}")
    if params is not None:
        if len(values) != params.p:
            raise ConfigurationError(f"expected {params.p} players, got {len(values)}")
        if sum(values) != params.n:
            raise ConfigurationError(f"expected {params.n} cards in total, got {sum(values)}")
    return Configuration(values)


def successor(i: int, p: int) -> int:
    return 1 if i == p else i + 1


def predecessor(i: int, p: int) -> int:
    return p if i == 1 else i - 1


def enabled_positions(a: Configuration) -> FrozenSet[int]:
    """Players holding strictly more cards than their right neighbour."""
    p = a.p
    return frozenset(i for i in range(1, p + 1) if a.at(i) > a.at(successor(i, p)))


def shift_card(a: Configuration, i: int) -> Configuration:
    """Move one card from player i to its right neighbour, without checking the rule."""
    cards = list(a.cards)
    cards[i - 1] -= 1
    cards[successor(i, a.p) - 1] += 1
    return Configuration(tuple(cards))


def apply_move(a: Configuration, i: int) -> Configuration:
    if not 1 <= i <= a.p or i not in enabled_positions(a):
        raise MoveNotEnabledError(str(a), i)
    return shift_card(a, i)


def is_fixed_point(a: Configuration) -> bool:
    return not enabled_positions(a)


def is_dual(a: Configuration, params: GameParams) -> bool:
    """Every player owns k or k+1 cards; never true when q = 0."""
    if params.q == 0:
        return False
    return all(c in (params.k, params.k + 1) for c in a.cards)


def canonical_dual(params: GameParams) -> Configuration:
    """P = (k+1 repeated q times, then k repeated p-q times).

    For q = 0 this is the fixed point (k,...,k).
    """
    return Configuration((params.k + 1,) * params.q + (params.k,) * (params.p - params.q))


def prefix_delta(a: Configuration, b: Configuration) -> PrefixDelta:
    if a.p != b.p:
        raise ConfigurationError(f"configurations have different lengths: ({a}) vs ({b})")
    if a.n != b.n:
        raise ConfigurationError(f"configurations hold different card totals: ({a}) vs ({b})")
    running = 0
    d = []
    for x, y in zip(a.cards, b.cards):
        running += x - y
        d.append(running)
    return PrefixDelta(tuple(d))


__all__ = [
    "make_params",
    "params_of",
    "configuration",
    "successor",
    "predecessor",
    "enabled_positions",
    "shift_card",
    "apply_move",
    "is_fixed_point",
    "is_dual",
    "canonical_dual",
    "prefix_delta",
]
