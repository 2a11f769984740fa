"""Enumeration of configurations (weak compositions of n into p parts)."""
from __future__ import annotations

import itertools as it
from math import comb
from typing import Iterator, List

from core.game.models import Configuration, GameParams


def configurations(params: GameParams) -> Iterator[Configuration]:
    """All configurations of the game, in lexicographic order.

    Stars and bars: the p-1 bars are placed among n+p-1 slots and each part is the
    number of stars between two consecutive bars.
    """
    slots = params.n + params.p - 1
    for bars in it.combinations(range(slots), params.p - 1):
        bounds = (-1,) + bars + (slots,)
        yield Configuration(tuple(bounds[j + 1] - bounds[j] - 1 for j in range(params.p)))


def count_configurations(params: GameParams) -> int:
    return comb(params.n + params.p - 1, params.p - 1)


def dual_configurations(params: GameParams) -> List[Configuration]:
    """Configurations where q players own k+1 cards and the others k; empty if q = 0."""
    if params.q == 0:
        return []
    duals = []
    for rich in it.combinations(range(params.p), params.q):
        cards = [params.k] * params.p
        for i in rich:
            cards[i] += 1
        duals.append(Configuration(tuple(cards)))
    return sorted(duals)


__all__ = ["configurations", "count_configurations", "dual_configurations"]
