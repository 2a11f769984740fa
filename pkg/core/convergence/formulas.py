"""Closed-form convergence results measured against the target configuration P.

P is the canonical dual (k+1 q times, then k) when q > 0 and the fixed point
(k,...,k) when q = 0. Time counts single card passes.
"""
from __future__ import annotations

import random
from typing import List, Optional, Sequence

from core.errors import RegimeError, UnreachableError
from core.game.models import Configuration
from core.game.rules import canonical_dual, enabled_positions, params_of, prefix_delta, shift_card
from core.order.shots import ShotVector


def target_of(origin: Configuration) -> Configuration:
    return canonical_dual(params_of(origin))


def inactive_player(origin: Configuration, target: Optional[Configuration] = None) -> int:
    """First index minimising d_i(O, P); that player never passes on circuit-free plays to P."""
    target = target or target_of(origin)
    return prefix_delta(origin, target).first_argmin


def shot_vector_to_P(origin: Configuration) -> ShotVector:
    """s(O, P) = -min_i d_i(O, P) * (1,...,1) + d(O, P)."""
    d = prefix_delta(origin, target_of(origin))
    low = d.minimum
    return ShotVector(tuple(x - low for x in d.d))


def time_to_P(origin: Configuration) -> int:
    """p * (-min_i d_i(O, P)) + sum_i d_i(O, P)."""
    d = prefix_delta(origin, target_of(origin))
    return origin.p * (-d.minimum) + d.total


def convergence_time_q0(origin: Configuration) -> int:
    """Length shared by every maximal play from O when n is a multiple of p."""
    params = params_of(origin)
    if params.q != 0:
        raise RegimeError(f"{params.label} has q={params.q}; the game does not terminate")
    return time_to_P(origin)


def recurrence_bound(origin: Configuration) -> int:
    """Step count after which every play from O has revisited a configuration (q > 0)."""
    params = params_of(origin)
    if params.q == 0:
        raise RegimeError(f"{params.label} has q=0; plays terminate instead of recurring")
    return time_to_P(origin) + params.q * (params.p - params.q) + 1


def path_to_target(origin: Configuration) -> List[int]:
    """A circuit-free play from O to P, as the list of moved positions.

    Plays the smallest enabled position whose count is still below its count in
    s(O, P); such a position exists until the target vector is spent.
    """
    goal = shot_vector_to_P(origin)
    spent = [0] * origin.p
    current = origin
    moves: List[int] = []
    for _ in range(goal.total):
        choices = [i for i in sorted(enabled_positions(current)) if spent[i - 1] < goal.at(i)]
        if not choices:
            raise UnreachableError(f"stuck at ({current}) after {len(moves)} moves towards ({target_of(origin)})")
        i = choices[0]
        spent[i - 1] += 1
        moves.append(i)
        current = shift_card(current, i)
    return moves


def simulate_play(origin: Configuration, steps: int, rng: random.Random) -> List[Configuration]:
    """Random sequential schedule: each step moves a uniformly chosen enabled player.

    Returns the visited configurations, origin first; stops early at a fixed point.
    """
    play = [origin]
    current = origin
    for _ in range(steps):
        moves = sorted(enabled_positions(current))
        if not moves:
            break
        current = shift_card(current, rng.choice(moves))
        play.append(current)
    return play


def first_recurrence(play: Sequence[Configuration]) -> Optional[int]:
    """Index of the first configuration already seen earlier in the play."""
    seen = set()
    for t, a in enumerate(play):
        if a in seen:
            return t
        seen.add(a)
    return None


__all__ = [
    "target_of",
    "inactive_player",
    "shot_vector_to_P",
    "time_to_P",
    "convergence_time_q0",
    "recurrence_bound",
    "path_to_target",
    "simulate_play",
    "first_recurrence",
]
