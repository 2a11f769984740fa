import itertools as it
import json

import pytest

from core.errors import BudgetExceededError, DualTargetError, UnreachableError
from core.game import Ordering, is_dual, make_params, parse_configuration, predecessor
from core.order import (
    ShotVector,
    build_poset,
    compare_gc,
    componentwise_max,
    hasse_records,
    hasse_to_dot,
    inf_gc,
    pair_table,
    reconstruct,
    shot_identity_check,
    shot_labels,
    shot_vector,
    sup_gc,
)
from core.statespace import BOTTOM, build_graph, reduce

C = parse_configuration


def S(*values):
    return ShotVector(tuple(values))


def test_shot_vector_examples(rg63):
    assert shot_vector(C("4,1,1"), C("2,2,2"), rg63) == S(2, 1, 0)
    assert shot_vector(C("4,1,1"), C("4,1,1"), rg63) == S(0, 0, 0)
    assert shot_vector(C("0,0,6"), C("2,2,2"), rg63) == S(2, 0, 4)


def test_shot_vector_errors(rg63, rg64):
    with pytest.raises(UnreachableError):
        shot_vector(C("2,2,2"), C("4,1,1"), rg63)
    with pytest.raises(DualTargetError):
        shot_vector(C("3,2,1,0"), C("2,2,1,1"), rg64)
    with pytest.raises(DualTargetError):
        shot_labels(C("2,2,1,1"), rg64)


def test_shot_identity():
    assert shot_identity_check(C("0,0,6"), C("2,2,2"), S(2, 0, 4))
    assert shot_identity_check(C("4,1,1"), C("4,1,1"), S(0, 0, 0))
    assert not shot_identity_check(C("0,0,6"), C("2,2,2"), S(3, 0, 4))


def test_shot_vector_order():
    assert S(1, 0, 0) < S(2, 0, 0)
    assert not S(1, 0, 0) < S(1, 0, 0)
    assert S(1, 0, 0) <= S(1, 0, 0)
    assert not S(2, 0, 0) <= S(1, 1, 0)
    assert not S(1, 1, 0) <= S(2, 0, 0)
    assert componentwise_max(S(2, 0, 0), S(1, 1, 0)) == S(2, 1, 0)
    assert ShotVector.of_moves(3, [1, 1, 2]) == S(2, 1, 0)
    assert S(2, 1, 0).total == 3


def test_labels_monotone_and_reconstruct(rg64):
    origin = C("3,2,1,0")
    labels = shot_labels(origin, rg64)
    for a, s in labels.items():
        assert reconstruct(origin, s) == a
        assert all(a.at(i) == origin.at(i) - s.at(i) + s.at(predecessor(i, 4)) for i in range(1, 5))
        for b in rg64.graph.successors(a):
            if b is BOTTOM:
                continue
            i = rg64.graph.edges[a, b]["position"]
            assert labels[b] == s + ShotVector.unit(4, i)


def test_build_poset_411(pv411):
    assert len(pv411) == 5
    assert pv411.maximal_elements() == [C("4,1,1")]
    assert pv411.minimal_elements() == [C("2,2,2")]
    assert pv411.covers == [
        (C("2,3,1"), C("2,2,2")),
        (C("3,1,2"), C("2,2,2")),
        (C("3,2,1"), C("2,3,1")),
        (C("3,2,1"), C("3,1,2")),
        (C("4,1,1"), C("3,2,1")),
    ]


def test_build_poset_fixed_point(rg63):
    pv = build_poset(C("2,2,2"), rg63)
    assert pv.sorted_elements == [C("2,2,2")]
    assert pv.covers == []


def test_build_poset_bottom_minimum(pv3210):
    assert pv3210.minimal_elements() == [BOTTOM]
    assert pv3210.maximal_elements() == [C("3,2,1,0")]
    assert all(pv3210.leq(BOTTOM, x) for x in pv3210.elements)


def test_build_poset_rejects_dual_and_budget(rg64):
    with pytest.raises(DualTargetError):
        build_poset(C("2,2,1,1"), rg64)
    with pytest.raises(BudgetExceededError):
        build_poset(C("3,2,1,0"), rg64, budget=2)


def test_compare_gc_examples(pv411):
    assert compare_gc(pv411, C("3,2,1"), C("2,3,1")) is Ordering.GREATER
    assert compare_gc(pv411, C("2,3,1"), C("3,2,1")) is Ordering.LESS
    assert compare_gc(pv411, C("3,1,2"), C("3,1,2")) is Ordering.EQUAL
    assert compare_gc(pv411, C("2,3,1"), C("3,1,2")) is Ordering.INCOMPARABLE


def test_compare_gc_errors(pv411, pv3210):
    with pytest.raises(UnreachableError):
        compare_gc(pv411, C("4,1,1"), C("0,0,6"))
    with pytest.raises(DualTargetError):
        compare_gc(pv3210, BOTTOM, C("3,2,1,0"))


def test_inf_sup_worked_instance(pv411):
    assert inf_gc(pv411, C("2,3,1"), C("3,1,2")) == C("2,2,2")
    assert sup_gc(pv411, C("2,3,1"), C("3,1,2")) == C("3,2,1")


def test_lattice_laws(pv411, pv3210):
    for pv in (pv411, pv3210):
        for a in pv.elements:
            assert inf_gc(pv, a, a) == a
            assert sup_gc(pv, a, a) == a
        for a, b in it.permutations(pv.elements, 2):
            if pv.leq(b, a):
                assert inf_gc(pv, a, b) == b
                assert sup_gc(pv, a, b) == a
            assert inf_gc(pv, a, b) == inf_gc(pv, b, a)
            assert sup_gc(pv, a, b) == sup_gc(pv, b, a)


def test_bottom_handling(pv3210):
    x = C("2,3,1,0")
    assert inf_gc(pv3210, BOTTOM, x) is BOTTOM
    assert sup_gc(pv3210, BOTTOM, x) == x


def test_inf_maps_dual_reconstruction_to_bottom(pv3210):
    p64 = make_params(6, 4)
    # two elements whose componentwise-max reconstruction is a dual configuration
    hits = [
        (a, b)
        for a, b in it.combinations(pv3210.sorted_elements, 2)
        if a is not BOTTOM and b is not BOTTOM
        and is_dual(reconstruct(pv3210.origin, componentwise_max(pv3210.labels[a], pv3210.labels[b])), p64)
    ]
    assert hits
    for a, b in hits:
        assert inf_gc(pv3210, a, b) is BOTTOM


def test_order_matches_shot_dominance_on_every_origin():
    params = make_params(5, 3)
    rg = reduce(build_graph(params), params)
    for origin in rg.nodes:
        if origin is BOTTOM or is_dual(origin, params):
            continue
        pv = build_poset(origin, rg)
        for a, b in it.permutations([x for x in pv.elements if x is not BOTTOM], 2):
            reach = pv.leq(b, a)
            assert reach == (pv.labels[a] < pv.labels[b])
            assert (compare_gc(pv, a, b) is Ordering.GREATER) == reach


def test_hasse_dot(pv411):
    dot = hasse_to_dot(pv411)
    assert dot.startswith('digraph "GC(4,1,1)" {\n')
    assert '"2,2,2" [label="2,2,2 | 2,1,0"];' in dot
    assert '"3,2,1" -> "2,3,1";' in dot
    assert "inf(" not in dot
    table = hasse_to_dot(pv411, table=True)
    assert "  // inf(2,3,1; 3,1,2) = 2,2,2  sup(2,3,1; 3,1,2) = 3,2,1\n" in table


def test_hasse_dot_bottom(pv3210):
    dot = hasse_to_dot(pv3210)
    assert 'BOT [label="BOT"];' in dot


def test_hasse_records(pv411):
    records = [json.loads(line) for line in hasse_records(pv411, table=True)]
    kinds = [r["kind"] for r in records]
    assert kinds.count("element") == 5
    assert kinds.count("cover") == 5
    assert kinds.count("pair") == 10
    assert {"kind": "element", "config": "4,1,1", "shot": "0,0,0"} in records
    assert len(pair_table(pv411)) == 10
