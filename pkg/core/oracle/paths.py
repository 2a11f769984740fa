"""Brute-force ground truth: path enumeration and exhaustive play searches.

Nothing here calls a convergence formula or the shot-vector labeling; results come
from walking the graph and replaying moves.
"""
from __future__ import annotations

from collections import deque
from typing import Dict, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from core.errors import ConfigurationError, PathCapExceededError
from core.game.models import Configuration
from core.game.rules import apply_move, is_dual
from core.oracle.models import PathCap, PathEnumeration
from core.statespace.graph import TransitionGraph

DEFAULT_CAP = PathCap()

Signature = Tuple[int, ...]


def replay(a: Configuration, moves: Sequence[int]) -> Configuration:
    """Apply the moves one by one through the game rule."""
    for i in moves:
        a = apply_move(a, i)
    return a


def _steps(g: TransitionGraph, x: Configuration, useful: Set[Configuration]) -> Iterator[Tuple[Configuration, int]]:
    for y in sorted(g.graph.successors(x)):
        if y in useful:
            yield y, g.graph.edges[x, y]["position"]


def enumerate_paths(
    a: Configuration,
    b: Configuration,
    g: TransitionGraph,
    *,
    circuit_free_only: bool = True,
    avoid_duals: bool = False,
    cap: PathCap = DEFAULT_CAP,
) -> PathEnumeration:
    """Every path a -> b (only those repeating no configuration if circuit_free_only).

    With avoid_duals, every configuration strictly between a and b is non-dual, so a
    path into the dual set stops at the first dual it meets.

    Raises PathCapExceededError when more than cap.max_paths paths exist or a path
    grows beyond cap.max_length moves. An unreachable target gives an empty,
    flagged enumeration.
    """
    for x in (a, b):
        if x not in g:
            raise ConfigurationError(f"({x}) is not a configuration of {g.params.label}")
    graph = g.graph
    if avoid_duals:
        graph = graph.subgraph(x for x in graph if x in (a, b) or not is_dual(x, g.params))
    useful = nx.ancestors(graph, b) | {b}
    if a not in useful:
        return PathEnumeration(a, b, (), circuit_free_only, cap, reachable=False)

    found: List[Tuple[int, ...]] = [()] if a == b else []
    moves: List[int] = []
    on_path = {a}
    stack = [(a, _steps(g, a, useful))]
    while stack:
        node, steps = stack[-1]
        try:
            nxt, i = next(steps)
        except StopIteration:
            stack.pop()
            on_path.discard(node)
            if stack:
                moves.pop()
            continue
        if circuit_free_only and nxt in on_path:
            continue
        if len(moves) + 1 > cap.max_length:
            raise PathCapExceededError(
                f"a path from ({a}) to ({b}) exceeds {cap.max_length} moves", budget=cap.max_length
            )
        moves.append(i)
        if nxt == b:
            found.append(tuple(moves))
            if len(found) > cap.max_paths:
                raise PathCapExceededError(
                    f"more than {cap.max_paths} paths from ({a}) to ({b})", budget=cap.max_paths
                )
            if circuit_free_only:
                # continuing past b would have to come back to b
                moves.pop()
                continue
        on_path.add(nxt)
        stack.append((nxt, _steps(g, nxt, useful)))
    return PathEnumeration(a, b, tuple(found), circuit_free_only, cap)


def shortest_moves_to(g: TransitionGraph, target: Configuration) -> Dict[Configuration, Tuple[int, ...]]:
    """One shortest move sequence to ``target`` from every configuration that reaches it.

    Breadth-first search on the reversed graph; the sequences are read off the arcs.
    """
    if target not in g:
        raise ConfigurationError(f"({target}) is not a configuration of {g.params.label}")
    back = nx.shortest_path(g.graph.reverse(copy=False), target)
    moves: Dict[Configuration, Tuple[int, ...]] = {}
    for source, route in back.items():
        forward = route[::-1]
        moves[source] = tuple(g.graph.edges[x, y]["position"] for x, y in zip(forward, forward[1:]))
    return moves


def path_signatures(g: TransitionGraph, origin: Configuration) -> Dict[Configuration, Set[Signature]]:
    """For each non-dual b reachable from origin, the set of shot vectors of all paths origin -> b.

    Dynamic programming over the non-dual part of G, which is acyclic.
    """
    params = g.params
    if is_dual(origin, params):
        return {}
    reach = {origin}
    frontier = deque([origin])
    while frontier:
        x = frontier.popleft()
        for y in g.graph.successors(x):
            if y not in reach and not is_dual(y, params):
                reach.add(y)
                frontier.append(y)
    sub = g.graph.subgraph(reach)
    sigs: Dict[Configuration, Set[Signature]] = {x: set() for x in reach}
    sigs[origin].add((0,) * params.p)
    for x in nx.topological_sort(sub):
        for y in sub.successors(x):
            i = sub.edges[x, y]["position"]
            for s in sigs[x]:
                sigs[y].add(s[: i - 1] + (s[i - 1] + 1,) + s[i:])
    return sigs


def maximal_play_lengths(g: TransitionGraph, origin: Configuration) -> Tuple[int, int]:
    """(shortest, longest) number of moves over all maximal plays from origin.

    Only meaningful when the reachable part of G is acyclic.
    """
    sub = g.graph.subgraph(nx.descendants(g.graph, origin) | {origin})
    shortest: Dict[Configuration, int] = {}
    longest: Dict[Configuration, int] = {}
    for x in reversed(list(nx.topological_sort(sub))):
        succ = list(sub.successors(x))
        if not succ:
            shortest[x] = longest[x] = 0
        else:
            shortest[x] = 1 + min(shortest[y] for y in succ)
            longest[x] = 1 + max(longest[y] for y in succ)
    return shortest[origin], longest[origin]


def _layers(graph: nx.DiGraph, origin: Configuration, length: int) -> List[Dict[Configuration, Optional[Configuration]]]:
    """layers[t] maps every configuration reachable in exactly t moves to one predecessor."""
    layers: List[Dict[Configuration, Optional[Configuration]]] = [{origin: None}]
    for _ in range(length):
        nxt: Dict[Configuration, Optional[Configuration]] = {}
        for x in layers[-1]:
            for y in graph.successors(x):
                nxt.setdefault(y, x)
        layers.append(nxt)
    return layers


def _witness(layers: List[Dict[Configuration, Optional[Configuration]]], last: Configuration) -> List[Configuration]:
    play = [last]
    for t in range(len(layers) - 1, 0, -1):
        play.append(layers[t][play[-1]])
    return list(reversed(play))


def fresh_endings(g: TransitionGraph, origin: Configuration, length: int) -> List[List[Configuration]]:
    """Plays of exactly ``length`` moves whose last configuration never occurred before.

    Returns one witness play per offending final configuration; an empty list means
    every play of that length ends on a repeat. Exhaustive: for each candidate x the
    walks avoiding x are explored layer by layer.
    """
    if length <= 0:
        return []
    candidates = sorted(_layers(g.graph, origin, length)[-1])
    witnesses = []
    for x in candidates:
        if x == origin:
            continue
        avoiding = g.graph.subgraph(n for n in g.graph if n != x)
        layers = _layers(avoiding, origin, length - 1)
        pred = next((y for y in sorted(layers[-1]) if g.graph.has_edge(y, x)), None)
        if pred is not None:
            witnesses.append(_witness(layers, pred) + [x])
    return witnesses


__all__ = [
    "DEFAULT_CAP",
    "replay",
    "enumerate_paths",
    "path_signatures",
    "maximal_play_lengths",
    "shortest_moves_to",
    "fresh_endings",
]
