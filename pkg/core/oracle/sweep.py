"""Run every check over a grid of (n, p) instances and merge the outcomes."""
from __future__ import annotations

import logging
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import networkx as nx

from core.errors import BudgetExceededError, CardGameError
from core.game.compositions import configurations
from core.game.models import Configuration, GameParams
from core.game.rules import is_dual, make_params
from core.oracle.checks import (
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
from core.oracle.models import PathCap, VerificationOutcome
from core.order.poset import build_poset
from core.statespace.graph import DEFAULT_NODE_BUDGET, EnablingRule, build_graph
from core.statespace.reduced import reduce

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class SweepSettings:
    max_cards: int = 10
    max_players: int = 5
    deep_max_cards: int = 6
    deep_max_players: int = 4
    path_max_cards: int = 7
    path_max_players: int = 4
    samples: int = 1000
    seed: int = 0
    node_budget: int = DEFAULT_NODE_BUDGET
    cap: PathCap = field(default_factory=PathCap)
    concurrency: int = 1
    # (n, p) where a play outlasting the recurrence bound fails the sweep; elsewhere it is reported
    recurrence_exact: Tuple[Tuple[int, int], ...] = ((6, 4), (7, 3))

    def deep(self, params: GameParams) -> bool:
        return params.n <= self.deep_max_cards and params.p <= self.deep_max_players

    def exhaustive_paths(self, params: GameParams) -> bool:
        return params.n <= self.path_max_cards and params.p <= self.path_max_players

    def exact_recurrence(self, params: GameParams) -> bool:
        return (params.n, params.p) in self.recurrence_exact


def sweep_instances(settings: SweepSettings) -> List[GameParams]:
    """All (n, p) with 2 <= p <= max_players and 0 <= n <= max_cards, by (p, n)."""
    return [
        make_params(n, p)
        for p in range(2, settings.max_players + 1)
        for n in range(settings.max_cards + 1)
    ]


def _guarded(
    name: str,
    params: GameParams,
    check: Callable[[], VerificationOutcome],
    origin: Optional[Configuration] = None,
) -> VerificationOutcome:
    try:
        return check()
    except BudgetExceededError as e:
        out = VerificationOutcome(name, params, origin=origin)
        out.inconclusive = str(e)
        return out
    except (CardGameError, nx.NetworkXException) as e:
        out = VerificationOutcome(name, params, origin=origin)
        out.fail(reason=f"{type(e).__name__}: {e}")
        return out


def check_instance(
    params: GameParams,
    settings: SweepSettings,
    enabling: Optional[EnablingRule] = None,
) -> List[VerificationOutcome]:
    """All checks for one instance; per-origin checks only on deep instances."""
    try:
        g = build_graph(params, budget=settings.node_budget, enabling=enabling)
    except BudgetExceededError as e:
        out = VerificationOutcome("state_space", params)
        out.inconclusive = str(e)
        return [out]
    budget = settings.node_budget
    outcomes = [
        _guarded("termination", params, lambda: verify_termination(params, g=g)),
        _guarded("dual_count", params, lambda: verify_dual_count(params, g=g)),
        _guarded("scc_theorem", params, lambda: verify_scc_theorem(params, g=g)),
        _guarded("dominance", params, lambda: verify_dominance(params, g=g)),
        _guarded(
            "convergence_formulas",
            params,
            lambda: verify_convergence_formulas(
                params,
                g=g,
                cap=settings.cap,
                exhaustive_paths=settings.exhaustive_paths(params),
                recurrence_exact=settings.exact_recurrence(params),
            ),
        ),
        _guarded(
            "sampled_plays",
            params,
            lambda: verify_sampled_plays(
                params,
                samples=settings.samples,
                seed=settings.seed,
                max_length=settings.cap.max_length,
                recurrence_exact=settings.exact_recurrence(params),
            ),
        ),
    ]
    if not settings.deep(params):
        return outcomes

    rg = reduce(g, params)
    for origin in configurations(params):
        if is_dual(origin, params):
            continue
        outcomes.append(
            _guarded("shot_uniqueness", params, lambda: verify_shot_uniqueness(params, origin, g=g, rg=rg), origin)
        )
        outcomes.append(
            _guarded("position_lemma", params, lambda: verify_position_lemma(params, origin, g=g), origin)
        )
        try:
            pv = build_poset(origin, rg, budget=budget)
        except (CardGameError, nx.NetworkXException) as e:
            pv = None
            logger.debug("poset of %s unavailable: %s", origin, e)
        outcomes.append(
            _guarded(
                "order_characterization",
                params,
                lambda: verify_order_characterization(params, origin, rg=rg, pv=pv),
                origin,
            )
        )
        outcomes.append(
            _guarded("lattice", params, lambda: verify_lattice(params, origin, rg=rg, pv=pv), origin)
        )
    return outcomes


def run_sweep(
    settings: SweepSettings = SweepSettings(),
    *,
    instances: Optional[List[GameParams]] = None,
    enabling: Optional[EnablingRule] = None,
) -> List[VerificationOutcome]:
    """Check every instance; the result is ordered by (p, n, check, origin) whatever the concurrency."""
    todo = instances if instances is not None else sweep_instances(settings)
    results: List[VerificationOutcome] = []
    if settings.concurrency <= 1:
        for idx, params in enumerate(todo, 1):
            logger.info("[%d/%d] checking %s", idx, len(todo), params.label)
            results.extend(check_instance(params, settings, enabling))
    else:
        logger.info("checking %d instances with %d workers", len(todo), settings.concurrency)
        with ThreadPoolExecutor(max_workers=settings.concurrency) as ex:
            future_map = {ex.submit(check_instance, params, settings, enabling): params for params in todo}
            done = 0
            for fut in as_completed(future_map):
                results.extend(fut.result())
                done += 1
                if done % 10 == 0 or done == len(todo):
                    logger.info("progress: %d/%d", done, len(todo))
    results.sort(key=lambda out: out.key)
    return results


def summarize(outcomes: List[VerificationOutcome]) -> Tuple[int, int, int]:
    """(passed, failed, inconclusive) counts."""
    failed = sum(1 for o in outcomes if o.status == "fail")
    inconclusive = sum(1 for o in outcomes if o.status == "inconclusive")
    return len(outcomes) - failed - inconclusive, failed, inconclusive


__all__ = ["SweepSettings", "sweep_instances", "check_instance", "run_sweep", "summarize"]
