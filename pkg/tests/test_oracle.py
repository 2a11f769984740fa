import json

import pytest

from core.errors import ConfigurationError, PathCapExceededError
from core.convergence import recurrence_bound, shot_vector_to_P, time_to_P
from core.game import canonical_dual, enabled_positions, make_params, parse_configuration
from core.order import ShotVector
from core.oracle import (
    PathCap,
    SweepSettings,
    VerificationOutcome,
    check_instance,
    enumerate_paths,
    fresh_endings,
    maximal_play_lengths,
    path_signatures,
    replay,
    run_sweep,
    shortest_moves_to,
    summarize,
    sweep_instances,
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
from core.statespace import build_graph

C = parse_configuration


def non_strict(a):
    """Corrupted rule: a player may also pass to a neighbour holding as many cards."""
    return frozenset(i for i in range(1, a.p + 1) if a.at(i) > 0 and a.at(i) >= a.at(i % a.p + 1))


def even_only(a):
    """Corrupted rule: only players holding an even number of cards may pass."""
    return frozenset(i for i in enabled_positions(a) if a.at(i) % 2 == 0)


def test_enumerate_paths_worked_instance(g63):
    found = enumerate_paths(C("4,1,1"), C("2,2,2"), g63)
    assert sorted(found.paths) == [(1, 1, 2), (1, 2, 1)]
    assert len(found) == 2
    for moves in found.paths:
        assert replay(C("4,1,1"), moves) == C("2,2,2")


def test_enumerate_paths_trivial_cases(g63):
    same = enumerate_paths(C("4,1,1"), C("4,1,1"), g63)
    assert same.paths == ((),)
    stuck = enumerate_paths(C("2,2,2"), C("4,1,1"), g63)
    assert stuck.paths == ()
    assert not stuck.reachable


def test_enumerate_paths_errors(g63, g64):
    with pytest.raises(PathCapExceededError):
        enumerate_paths(C("4,1,1"), C("2,2,2"), g63, cap=PathCap(max_paths=1))
    with pytest.raises(ConfigurationError):
        enumerate_paths(C("1,1,1"), C("2,2,2"), g63)
    # circuits among the duals make the unrestricted enumeration unbounded
    with pytest.raises(PathCapExceededError):
        enumerate_paths(C("2,1,2,1"), C("2,2,1,1"), g64, circuit_free_only=False, cap=PathCap(max_length=12))


def test_circuit_free_paths_to_P_share_length(g64):
    found = enumerate_paths(C("3,2,1,0"), canonical_dual(make_params(6, 4)), g64)
    assert found.paths
    assert {len(moves) for moves in found.paths} == {3}
    assert (1, 2, 3) in found.paths


def test_path_signatures(g63, g64):
    sigs = path_signatures(g63, C("4,1,1"))
    assert len(sigs) == 5
    assert all(len(s) == 1 for s in sigs.values())
    assert sigs[C("2,2,2")] == {(2, 1, 0)}
    assert path_signatures(g64, C("2,2,1,1")) == {}


def test_maximal_play_lengths(g63):
    assert maximal_play_lengths(g63, C("0,0,6")) == (6, 6)
    assert maximal_play_lengths(g63, C("6,0,0")) == (6, 6)
    assert maximal_play_lengths(g63, C("2,2,2")) == (0, 0)


def test_fresh_endings(g64):
    origin = C("3,2,1,0")
    assert fresh_endings(g64, origin, 8) == []
    short = fresh_endings(g64, origin, 3)
    assert short
    for play in short:
        assert len(play) == 4
        assert play[0] == origin
        assert play[-1] not in play[:-1]
        for a, b in zip(play, play[1:]):
            assert g64.graph.has_edge(a, b)


def test_paths_through_other_duals_carry_extra_rounds(g64):
    origin, target = C("0,2,1,3"), C("2,2,1,1")
    literal = enumerate_paths(origin, target, g64)
    assert (4, 4) in literal.paths
    assert (2, 4, 4, 1, 3, 4) in literal.paths
    shots = {ShotVector.of_moves(4, moves).s for moves in literal.paths}
    assert {(0, 0, 0, 2), (1, 1, 1, 3)} <= shots
    # any two differ by whole rounds of the ring
    assert all(len({x - y for x, y in zip(s, (0, 0, 0, 2))}) == 1 for s in shots)
    # every route from this origin meets another dual before P
    direct = enumerate_paths(origin, target, g64, avoid_duals=True)
    assert direct.paths == ()
    assert not direct.reachable


def test_paths_meeting_the_duals_at_P_match_formula(p64, g64):
    target = canonical_dual(p64)
    for origin in (C("3,2,1,0"), C("6,0,0,0")):
        found = enumerate_paths(origin, target, g64, avoid_duals=True)
        assert found.paths
        for moves in found.paths:
            assert len(moves) == time_to_P(origin)
            assert ShotVector.of_moves(4, moves) == shot_vector_to_P(origin)


@pytest.mark.parametrize("n,p", [(6, 4), (7, 3), (5, 2)])
def test_shortest_moves_to_P(n, p):
    params = make_params(n, p)
    g = build_graph(params)
    target = canonical_dual(params)
    routes = shortest_moves_to(g, target)
    assert routes[target] == ()
    assert set(routes) == set(g.graph)
    for origin, moves in routes.items():
        assert replay(origin, moves) == target
        assert len(moves) == time_to_P(origin)
        assert ShotVector.of_moves(p, moves) == shot_vector_to_P(origin)


def test_shortest_moves_to_worked_instance(g64):
    routes = shortest_moves_to(g64, C("2,2,1,1"))
    assert routes[C("0,2,1,3")] == (4, 4)
    with pytest.raises(ConfigurationError):
        shortest_moves_to(g64, C("1,1,1,1"))


def test_play_outlasting_recurrence_bound():
    params = make_params(3, 4)
    origin = C("2,1,0,0")
    moves = (2, 3, 1, 2, 1, 4)
    assert recurrence_bound(origin) == len(moves)
    seen = [origin]
    for i in moves:
        seen.append(replay(seen[-1], (i,)))
    assert seen[-1] == C("1,1,1,0")
    assert len(set(seen)) == len(seen)
    found = fresh_endings(build_graph(params), origin, len(moves))
    assert any(play[-1] == C("1,1,1,0") for play in found)


@pytest.mark.parametrize("n,p,nontrivial", [(6, 4, 1), (6, 3, 0), (0, 2, 0), (7, 3, 1)])
def test_verify_scc_theorem(n, p, nontrivial):
    out = verify_scc_theorem(make_params(n, p))
    assert out.status == "pass"
    assert out.details["nontrivial_sccs"] == nontrivial


def test_verify_termination_and_dual_count():
    assert verify_termination(make_params(6, 3)).passed
    assert verify_termination(make_params(6, 4)).details == {"regime": "q>0"}
    out = verify_dual_count(make_params(6, 4))
    assert out.passed
    assert out.details["duals"] == 6


def test_verify_shot_uniqueness(p63, p64, g63, g64):
    out = verify_shot_uniqueness(p63, C("4,1,1"), g=g63)
    assert out.passed
    assert out.instances_checked == 5
    assert verify_shot_uniqueness(p63, C("2,2,2"), g=g63).passed
    assert verify_shot_uniqueness(p64, C("6,0,0,0"), g=g64).passed


def test_verify_order_and_lattice(p63, p64, rg63, rg64):
    assert verify_order_characterization(p63, C("4,1,1"), rg=rg63).passed
    assert verify_order_characterization(p64, C("3,2,1,0"), rg=rg64).passed
    assert verify_order_characterization(p63, C("2,2,2"), rg=rg63).passed
    lattice = verify_lattice(p63, C("4,1,1"), rg=rg63)
    assert lattice.passed
    assert lattice.instances_checked == 15
    assert verify_lattice(p64, C("6,0,0,0"), rg=rg64).passed
    assert verify_lattice(p63, C("2,2,2"), rg=rg63).passed


def test_verify_position_lemma(p63, p64, g63, g64):
    for params, g, origin in ((p63, g63, C("4,1,1")), (p63, g63, C("6,0,0")), (p64, g64, C("3,2,1,0")),
                              (p64, g64, C("6,0,0,0"))):
        out = verify_position_lemma(params, origin, g=g)
        assert out.passed
        assert out.instances_checked > 0
    assert verify_position_lemma(p64, C("2,2,1,1"), g=g64).instances_checked == 0


def test_position_lemma_catches_non_monotone_rule(p63):
    out = verify_position_lemma(p63, C("4,2,0"), enabling=even_only)
    assert out.status == "fail"
    assert any(
        f["a"] == C("3,3,0") and f["b"] == C("4,2,0") and f["position"] == 2 for f in out.failures
    )


@pytest.mark.parametrize("n,p,origins", [(6, 3, 28), (6, 4, 84), (0, 2, 1), (7, 3, 36)])
def test_verify_convergence_formulas(n, p, origins):
    out = verify_convergence_formulas(make_params(n, p))
    assert out.status == "pass"
    assert out.instances_checked == origins


def test_verify_convergence_formulas_cap_is_inconclusive():
    out = verify_convergence_formulas(make_params(6, 4), cap=PathCap(max_paths=1))
    assert out.status == "inconclusive"
    assert not out.failures


def test_verify_convergence_counts_origins_without_direct_path():
    out = verify_convergence_formulas(make_params(6, 4))
    assert out.details["origins_without_direct_path"] >= 1
    assert "bound_exceeded" not in out.details


def test_shortest_routes_catch_a_wrong_time_formula(monkeypatch):
    from core.oracle import checks

    monkeypatch.setattr(checks, "time_to_P", lambda origin: 0)
    out = verify_convergence_formulas(make_params(7, 3), exhaustive_paths=False)
    assert out.status == "fail"
    assert any(f["reason"] == "shortest route to P differs from formula" for f in out.failures)


def test_recurrence_bound_exact_only_where_asked():
    params = make_params(3, 4)
    strict = verify_convergence_formulas(params)
    assert strict.status == "fail"
    assert {f["reason"] for f in strict.failures} == {"play of bound length ends on a new configuration"}
    relaxed = verify_convergence_formulas(params, recurrence_exact=False)
    assert relaxed.status == "pass"
    exceeded = relaxed.details["bound_exceeded"]
    assert exceeded["origins"] == len(strict.failures)
    assert exceeded["origins"] >= 1
    witness = exceeded["witness"]["play"]
    assert len(witness) == recurrence_bound(C(exceeded["witness"]["origin"])) + 1
    assert witness[-1] not in witness[:-1]


@pytest.mark.parametrize("n,p", [(6, 4), (7, 3)])
def test_verify_dominance(n, p):
    out = verify_dominance(make_params(n, p))
    assert out.passed
    assert out.details["longest_chain"] == make_params(n, p).q * (p - make_params(n, p).q)


@pytest.mark.parametrize("n,p", [(8, 4), (10, 5), (6, 4)])
def test_verify_sampled_plays(n, p):
    out = verify_sampled_plays(make_params(n, p), samples=1000, seed=0)
    assert out.passed
    assert out.instances_checked == 1000


def test_sampled_plays_are_deterministic():
    a = verify_sampled_plays(make_params(7, 3), samples=200, seed=5)
    b = verify_sampled_plays(make_params(7, 3), samples=200, seed=5)
    assert a.to_record() == b.to_record()
    assert "first_recurrence" in a.details


def test_outcome_record():
    out = VerificationOutcome("lattice", make_params(6, 3), origin=C("4,1,1"))
    assert out.status == "pass"
    out.fail(reason="demo", a=C("2,3,1"), moves=(1, 2))
    record = out.to_record()
    assert record["status"] == "fail"
    assert record["origin"] == "4,1,1"
    assert record["failures"] == [{"reason": "demo", "a": "2,3,1", "moves": [1, 2]}]
    json.dumps(record)


def test_sweep_instances():
    settings = SweepSettings(max_cards=2, max_players=3)
    assert [(x.n, x.p) for x in sweep_instances(settings)] == [
        (0, 2), (1, 2), (2, 2), (0, 3), (1, 3), (2, 3),
    ]


def test_check_instance_deep_adds_per_origin_checks():
    settings = SweepSettings(samples=20)
    outcomes = check_instance(make_params(4, 3), settings)
    names = {o.check_name for o in outcomes}
    assert {"shot_uniqueness", "position_lemma", "order_characterization", "lattice"} <= names
    assert all(o.passed for o in outcomes)
    shallow = check_instance(make_params(8, 3), settings)
    assert {o.check_name for o in shallow}.isdisjoint({"lattice", "shot_uniqueness", "position_lemma"})


def test_recurrence_bound_reported_outside_exact_instances():
    settings = SweepSettings(samples=50)
    assert settings.exact_recurrence(make_params(6, 4))
    assert settings.exact_recurrence(make_params(7, 3))
    assert not settings.exact_recurrence(make_params(3, 4))
    outcomes = check_instance(make_params(3, 4), settings)
    assert all(o.passed for o in outcomes)
    convergence = next(o for o in outcomes if o.check_name == "convergence_formulas")
    assert convergence.details["bound_exceeded"]["origins"] >= 1
    strict = check_instance(make_params(3, 4), SweepSettings(samples=50, recurrence_exact=((3, 4),)))
    assert any(o.status == "fail" and o.check_name == "convergence_formulas" for o in strict)


def test_small_sweep_passes_and_is_ordered():
    settings = SweepSettings(max_cards=4, max_players=3, samples=50)
    outcomes = run_sweep(settings)
    assert summarize(outcomes) == (len(outcomes), 0, 0)
    assert [o.key for o in outcomes] == sorted(o.key for o in outcomes)


def test_sweep_concurrency_does_not_change_records():
    serial = run_sweep(SweepSettings(max_cards=4, max_players=3, samples=30))
    threaded = run_sweep(SweepSettings(max_cards=4, max_players=3, samples=30, concurrency=3))
    assert [o.to_record() for o in serial] == [o.to_record() for o in threaded]


def test_trivial_sweep():
    outcomes = run_sweep(SweepSettings(max_cards=0, max_players=2))
    assert {(o.params.n, o.params.p) for o in outcomes} == {(0, 2)}
    assert all(o.passed for o in outcomes)


def test_corrupted_rule_is_caught():
    outcomes = run_sweep(SweepSettings(max_cards=4, max_players=2, samples=10), enabling=non_strict)
    failed = [o for o in outcomes if o.status == "fail"]
    assert failed
    assert any(o.check_name == "termination" and o.params.n == 4 for o in failed)


def test_corrupted_graph_fails_scc_check():
    params = make_params(4, 2)
    out = verify_scc_theorem(params, g=build_graph(params, enabling=non_strict))
    assert out.status == "fail"


def test_budget_exhaustion_is_inconclusive():
    outcomes = check_instance(make_params(6, 4), SweepSettings(node_budget=10, samples=5))
    assert [o.status for o in outcomes] == ["inconclusive"]


@pytest.mark.slow
def test_desk_sweep_passes():
    outcomes = run_sweep(SweepSettings(concurrency=4))
    passed, failed, inconclusive = summarize(outcomes)
    assert failed == 0
    assert inconclusive == 0
    assert passed == len(outcomes)
