"""Verification checks: each re-derives a closed-form or structural result by brute force.

Every check returns a VerificationOutcome; counterexamples carry enough data
(parameters, origin, configurations, moves) to replay them by hand.
"""
from __future__ import annotations

import itertools as it
import logging
import random
import statistics
from math import comb
from typing import Dict, FrozenSet, List, Optional, Tuple

import networkx as nx

from core.convergence.dominance import dominance_longest_chain, dominance_order
from core.convergence.formulas import (
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
from core.errors import CardGameError, PathCapExceededError, UnreachableError
from core.game.compositions import configurations, dual_configurations
from core.game.models import Configuration, GameParams, Ordering
from core.game.rules import canonical_dual, is_dual
from core.oracle.models import PathCap, VerificationOutcome
from core.oracle.paths import (
    DEFAULT_CAP,
    Signature,
    enumerate_paths,
    fresh_endings,
    maximal_play_lengths,
    path_signatures,
    replay,
    shortest_moves_to,
)
from core.order.poset import PosetView, build_poset, compare_gc, inf_gc, sup_gc
from core.order.shots import ShotVector, shot_identity_check, shot_labels
from core.statespace.graph import (
    DEFAULT_NODE_BUDGET,
    EnablingRule,
    TransitionGraph,
    build_graph,
    nontrivial_components,
)
from core.statespace.reduced import BOTTOM, Node, ReducedGraph, reduce, sort_nodes

logger = logging.getLogger(__name__)


def _graph(
    params: GameParams,
    g: Optional[TransitionGraph],
    budget: int,
    enabling: Optional[EnablingRule],
) -> TransitionGraph:
    return g if g is not None else build_graph(params, budget=budget, enabling=enabling)


def verify_termination(
    params: GameParams,
    *,
    g: Optional[TransitionGraph] = None,
    budget: int = DEFAULT_NODE_BUDGET,
    enabling: Optional[EnablingRule] = None,
) -> VerificationOutcome:
    """q = 0: G is acyclic and (k,...,k) is its only sink."""
    out = VerificationOutcome("termination", params)
    if params.q != 0:
        out.details["regime"] = "q>0"
        return out
    g = _graph(params, g, budget, enabling)
    out.instances_checked = g.graph.number_of_nodes()
    if not nx.is_directed_acyclic_graph(g.graph):
        cycle = nx.find_cycle(g.graph)
        out.fail(reason="G has a circuit", circuit=[a for a, _ in cycle])
    sinks = sort_nodes(a for a in g.graph if g.graph.out_degree(a) == 0)
    expected = canonical_dual(params)
    if sinks != [expected]:
        out.fail(reason="sinks differ from the fixed point", sinks=sinks, expected=expected)
    return out


def verify_dual_count(
    params: GameParams,
    *,
    g: Optional[TransitionGraph] = None,
    budget: int = DEFAULT_NODE_BUDGET,
    enabling: Optional[EnablingRule] = None,
) -> VerificationOutcome:
    """Duals are the {k, k+1} configurations and there are binomial(p, q) of them."""
    out = VerificationOutcome("dual_count", params)
    g = _graph(params, g, budget, enabling)
    out.instances_checked = g.graph.number_of_nodes()
    by_scan = {a for a in g.graph if set(a.cards) <= {params.k, params.k + 1} and params.q > 0}
    by_predicate = {a for a in g.graph if is_dual(a, params)}
    listed = set(dual_configurations(params))
    expected = comb(params.p, params.q) if params.q > 0 else 0
    if by_predicate != by_scan:
        out.fail(reason="is_dual disagrees with the {k,k+1} scan", missing=sort_nodes(by_scan - by_predicate),
                 extra=sort_nodes(by_predicate - by_scan))
    if listed != by_scan:
        out.fail(reason="dual_configurations disagrees with the scan", listed=len(listed), scanned=len(by_scan))
    if len(by_scan) != expected:
        out.fail(reason="dual count", count=len(by_scan), expected=expected)
    out.details["duals"] = len(by_scan)
    return out


def verify_scc_theorem(
    params: GameParams,
    *,
    g: Optional[TransitionGraph] = None,
    budget: int = DEFAULT_NODE_BUDGET,
    enabling: Optional[EnablingRule] = None,
) -> VerificationOutcome:
    """The only non-trivial SCC is the dual set (none when q = 0); R(G) is acyclic;
    for q > 0 every configuration reaches every dual."""
    out = VerificationOutcome("scc_theorem", params)
    g = _graph(params, g, budget, enabling)
    out.instances_checked = g.graph.number_of_nodes()
    comps = nontrivial_components(g)
    duals = frozenset(a for a in g.graph if is_dual(a, params))
    expected = [duals] if params.q > 0 else []
    if comps != expected:
        out.fail(reason="non-trivial SCCs differ from the dual set",
                 sizes=[len(c) for c in comps], expected_size=len(duals))
    rg = reduce(g, params)
    if not nx.is_directed_acyclic_graph(rg.graph):
        out.fail(reason="R(G) has a circuit", circuit=[a for a, _ in nx.find_cycle(rg.graph)])
    if params.q > 0:
        P = canonical_dual(params)
        feeders = nx.ancestors(g.graph, P) | {P}
        stuck = sort_nodes(set(g.graph) - feeders)
        if stuck:
            out.fail(reason="configurations with no path to P", configs=stuck[:10], count=len(stuck))
    out.details["nontrivial_sccs"] = len(comps)
    return out


def verify_shot_uniqueness(
    params: GameParams,
    origin: Configuration,
    *,
    g: Optional[TransitionGraph] = None,
    rg: Optional[ReducedGraph] = None,
    budget: int = DEFAULT_NODE_BUDGET,
    enabling: Optional[EnablingRule] = None,
) -> VerificationOutcome:
    """All paths O -> b carry one shot vector (hence one length) for non-dual b."""
    out = VerificationOutcome("shot_uniqueness", params, origin=origin)
    g = _graph(params, g, budget, enabling)
    sigs = path_signatures(g, origin)
    out.instances_checked = len(sigs)
    if not sigs:
        return out
    rg = rg or reduce(g, params)
    labels = shot_labels(origin, rg)
    for b in sort_nodes(sigs):
        found = sorted(sigs[b])
        if len(found) != 1:
            out.fail(reason="several shot vectors", target=b, shots=[",".join(map(str, s)) for s in found])
            continue
        s = ShotVector(found[0])
        if labels.get(b) != s:
            out.fail(reason="labeling disagrees with enumeration", target=b, enumerated=s, labeled=labels.get(b))
        if not shot_identity_check(origin, b, s):
            out.fail(reason="shot identity violated", target=b, shot=s)
    return out


def _down_sets(rg: ReducedGraph, elements: FrozenSet[Node]) -> Dict[Node, FrozenSet[Node]]:
    return {x: frozenset(nx.descendants(rg.graph, x) | {x}) for x in elements}


def verify_order_characterization(
    params: GameParams,
    origin: Configuration,
    *,
    rg: ReducedGraph,
    pv: Optional[PosetView] = None,
) -> VerificationOutcome:
    """Reachability between non-dual elements of GC(O) equals strict shot-vector dominance."""
    out = VerificationOutcome("order_characterization", params, origin=origin)
    if is_dual(origin, params):
        return out
    pv = pv or build_poset(origin, rg)
    plain = [x for x in pv.sorted_elements if x is not BOTTOM]
    down = _down_sets(rg, frozenset(plain))
    for a, b in it.product(plain, repeat=2):
        if a == b:
            expected = Ordering.EQUAL
        elif b in down[a]:
            expected = Ordering.GREATER
        elif a in down[b]:
            expected = Ordering.LESS
        else:
            expected = Ordering.INCOMPARABLE
        actual = compare_gc(pv, a, b)
        out.instances_checked += 1
        if actual is not expected:
            out.fail(reason="order mismatch", a=a, b=b, expected=expected.value, actual=actual.value,
                     shot_a=pv.labels[a], shot_b=pv.labels[b])
    return out


def verify_lattice(
    params: GameParams,
    origin: Configuration,
    *,
    rg: ReducedGraph,
    pv: Optional[PosetView] = None,
) -> VerificationOutcome:
    """Every pair of GC(O) has a unique glb and lub; glb equals inf_gc's reconstruction."""
    out = VerificationOutcome("lattice", params, origin=origin)
    if is_dual(origin, params):
        return out
    pv = pv or build_poset(origin, rg)
    elements = pv.sorted_elements
    down = _down_sets(rg, pv.elements)
    up = {x: frozenset(y for y in elements if x in down[y]) for x in elements}
    tops = [x for x in elements if up[x] == {x}]
    if tops != [origin]:
        out.fail(reason="origin is not the unique maximum", maximal=tops)
    for a, b in it.combinations_with_replacement(elements, 2):
        out.instances_checked += 1
        lower = down[a] & down[b]
        upper = up[a] & up[b]
        glb = [x for x in lower if lower <= down[x]]
        lub = [x for x in upper if upper <= up[x]]
        if len(glb) != 1 or len(lub) != 1:
            out.fail(reason="bounds not unique", a=a, b=b, glb=sort_nodes(glb), lub=sort_nodes(lub))
            continue
        try:
            lo, hi = inf_gc(pv, a, b), sup_gc(pv, a, b)
        except CardGameError as e:
            out.fail(reason=str(e), a=a, b=b)
            continue
        if lo != glb[0]:
            out.fail(reason="inf_gc differs from the order glb", a=a, b=b, inf=lo, glb=glb[0])
        if hi != lub[0]:
            out.fail(reason="sup_gc differs from the order lub", a=a, b=b, sup=hi, lub=lub[0])
    return out


def _route_ends(g: TransitionGraph, origin: Configuration) -> List[Tuple[Configuration, Signature]]:
    """(end, shot vector) of every route from origin through non-dual configurations,
    including the step into the first dual met."""
    params = g.params
    sigs = path_signatures(g, origin)
    ends = set()
    for x, found in sigs.items():
        for s in found:
            ends.add((x, s))
            for y in g.graph.successors(x):
                if is_dual(y, params):
                    i = g.graph.edges[x, y]["position"]
                    ends.add((y, s[: i - 1] + (s[i - 1] + 1,) + s[i:]))
    return sorted(ends)


def verify_position_lemma(
    params: GameParams,
    origin: Configuration,
    *,
    g: Optional[TransitionGraph] = None,
    budget: int = DEFAULT_NODE_BUDGET,
    enabling: Optional[EnablingRule] = None,
) -> VerificationOutcome:
    """Routes C and D from O end at a and b. If s_j(C) <= s_j(D), s_j'(C) >= s_j'(D) for
    every j' != j and j is enabled at b, then j is enabled at a.

    Enabled positions are read off the arcs of G.
    """
    out = VerificationOutcome("position_lemma", params, origin=origin)
    g = _graph(params, g, budget, enabling)
    ends = _route_ends(g, origin)
    enabled = {
        x: frozenset(g.graph.edges[x, y]["position"] for y in g.graph.successors(x)) for x, _ in ends
    }
    for (a, u), (b, v) in it.permutations(ends, 2):
        out.instances_checked += 1
        for j in sorted(enabled[b] - enabled[a]):
            if u[j - 1] <= v[j - 1] and all(u[m] >= v[m] for m in range(params.p) if m != j - 1):
                out.fail(reason="position enabled at b but not at a", a=a, shot_a=",".join(map(str, u)),
                         b=b, shot_b=",".join(map(str, v)), position=j)
    return out


def verify_convergence_formulas(
    params: GameParams,
    *,
    g: Optional[TransitionGraph] = None,
    budget: int = DEFAULT_NODE_BUDGET,
    cap: PathCap = DEFAULT_CAP,
    exhaustive_paths: bool = True,
    recurrence_exact: bool = True,
    enabling: Optional[EnablingRule] = None,
) -> VerificationOutcome:
    """q = 0: every maximal play has the formula length.
    q > 0: a shortest route O -> P carries the formula shot vector and length, every
    path O -> P meeting the dual set only at P carries the formula shot vector, and
    every play of recurrence-bound length ends on a repeat.

    A path that enters the duals elsewhere and circles round to P may let every player
    pass; its shot vector is then the formula one plus a multiple of (1,...,1), so such
    paths are not compared. With exhaustive_paths=False only the shortest routes and the
    constructive path are checked. With recurrence_exact=False a play of bound length
    ending on a new configuration goes to details["bound_exceeded"] instead of failing.
    """
    out = VerificationOutcome("convergence_formulas", params)
    g = _graph(params, g, budget, enabling)
    P = canonical_dual(params)
    routes = shortest_moves_to(g, P) if params.q > 0 else {}
    no_direct_path = 0
    exceeded = []
    for origin in sort_nodes(g.graph):
        out.instances_checked += 1
        i = inactive_player(origin, P)
        s = shot_vector_to_P(origin)
        if s.at(i) != 0:
            out.fail(reason="inactive player plays", origin=origin, inactive=i, shot=s)
        if params.q == 0:
            shortest, longest = maximal_play_lengths(g, origin)
            t = convergence_time_q0(origin)
            if not shortest == longest == t:
                out.fail(reason="maximal play lengths", origin=origin, shortest=shortest, longest=longest, formula=t)
            continue
        t = time_to_P(origin)
        route = routes.get(origin)
        if route is None:
            out.fail(reason="P unreachable", origin=origin)
            continue
        shot = ShotVector.of_moves(params.p, route)
        if len(route) != t or shot != s:
            out.fail(reason="shortest route to P differs from formula", origin=origin,
                     moves=list(route), shot=shot, formula=s, time=t)
        try:
            moves = path_to_target(origin)
        except UnreachableError as e:
            out.fail(reason=str(e), origin=origin)
        else:
            if replay(origin, moves) != P:
                out.fail(reason="constructive path misses P", origin=origin, moves=list(moves))
        if not exhaustive_paths:
            continue
        try:
            paths = enumerate_paths(origin, P, g, avoid_duals=True, cap=cap)
        except PathCapExceededError as e:
            out.inconclusive = str(e)
            return out
        if not paths.paths:
            no_direct_path += 1
        for moves in paths.paths:
            shot = ShotVector.of_moves(params.p, moves)
            if shot != s or len(moves) != t:
                out.fail(reason="path meeting the duals at P differs from formula", origin=origin,
                         moves=list(moves), shot=shot, formula=s, time=t)
                break
            if replay(origin, moves) != P:
                out.fail(reason="replay does not end at P", origin=origin, moves=list(moves))
                break
        witnesses = fresh_endings(g, origin, recurrence_bound(origin))
        if witnesses and recurrence_exact:
            out.fail(reason="play of bound length ends on a new configuration", origin=origin, play=witnesses[0])
        elif witnesses:
            exceeded.append((origin, witnesses[0]))
    if params.q > 0 and exhaustive_paths:
        out.details["origins_without_direct_path"] = no_direct_path
    if exceeded:
        origin, play = exceeded[0]
        out.details["bound_exceeded"] = {
            "origins": len(exceeded),
            "witness": {"origin": str(origin), "play": [str(x) for x in play]},
        }
    return out


def verify_dominance(
    params: GameParams,
    *,
    g: Optional[TransitionGraph] = None,
    budget: int = DEFAULT_NODE_BUDGET,
    enabling: Optional[EnablingRule] = None,
) -> VerificationOutcome:
    """Longest chain q(p-q), greatest element P, every cover realised by one move."""
    out = VerificationOutcome("dominance", params)
    if params.q == 0:
        out.details["regime"] = "q=0"
        return out
    g = _graph(params, g, budget, enabling)
    order = dominance_order(params)
    out.instances_checked = len(order.elements)
    longest = dominance_longest_chain(params)
    expected = params.q * (params.p - params.q)
    if longest != expected:
        out.fail(reason="longest chain", longest=longest, expected=expected)
    if order.greatest != [canonical_dual(params)]:
        out.fail(reason="greatest element", greatest=order.greatest)
    for a, b in order.covers:
        if not g.graph.has_edge(a, b):
            out.fail(reason="cover not realised by a move", upper=a, lower=b)
    out.details["longest_chain"] = longest
    return out


def verify_sampled_plays(
    params: GameParams,
    *,
    samples: int = 1000,
    seed: int = 0,
    max_length: int = 1000,
    recurrence_exact: bool = True,
) -> VerificationOutcome:
    """Random plays: q = 0 ends at the fixed point after the formula length; q > 0 plays of
    recurrence-bound length end on a repeat. Reports first-recurrence statistics.

    With recurrence_exact=False a sampled play that outlasts the bound is counted in
    details["bound_exceeded"] instead of failing the check.
    """
    out = VerificationOutcome("sampled_plays", params)
    rng = random.Random(seed * 1_000_003 + params.n * 101 + params.p)
    origins = list(configurations(params))
    firsts = []
    exceeded = 0
    for _ in range(samples):
        origin = rng.choice(origins)
        out.instances_checked += 1
        if params.q == 0:
            play = simulate_play(origin, max_length, rng)
            t = convergence_time_q0(origin)
            if len(play) - 1 != t or play[-1] != target_of(origin):
                out.fail(reason="random maximal play", origin=origin, length=len(play) - 1, formula=t)
            continue
        bound = recurrence_bound(origin)
        play = simulate_play(origin, bound, rng)
        first = first_recurrence(play)
        if first is not None:
            firsts.append(first)
        if play[-1] in play[:-1]:
            continue
        if recurrence_exact:
            out.fail(reason="no repeat within bound", origin=origin, bound=bound, play=play)
        else:
            exceeded += 1
    if exceeded:
        out.details["bound_exceeded"] = exceeded
    if firsts:
        out.details["first_recurrence"] = {
            "min": min(firsts),
            "max": max(firsts),
            "mean": round(statistics.mean(firsts), 3),
        }
    return out


__all__ = [
    "verify_termination",
    "verify_dual_count",
    "verify_scc_theorem",
    "verify_shot_uniqueness",
    "verify_order_characterization",
    "verify_lattice",
    "verify_position_lemma",
    "verify_convergence_formulas",
    "verify_dominance",
    "verify_sampled_plays",
]
