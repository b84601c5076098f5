import random
from collections import Counter

import pytest

from conftest import connected_graphs
from p3iso.constructions import build_bk_star, build_bn, build_bn_k3_h, build_cycle, build_path
from p3iso.constructive import (
    EXACT_ORACLE,
    FAST,
    PreconditionError,
    isolating_set_bounded,
    reduce_tight,
)
from p3iso.enumeration import random_c6free_graph
from p3iso.exact import iota_exact, is_tight
from p3iso.graph import Graph
from p3iso.patterns import find_induced_cycle, is_p3_isolating

K3 = Graph.from_edges(3, [(0, 1), (1, 2), (0, 2)])


def valid_inputs(max_n: int = 8):
    for n in range(1, max_n + 1):
        for g in connected_graphs(n):
            if find_induced_cycle(g, 6) is None:
                yield g


def test_base_cases():
    assert isolating_set_bounded(K3).size == 1
    assert isolating_set_bounded(build_path(3)).vertices == [1]
    assert isolating_set_bounded(build_path(2)).size == 0


def test_cycle_c7():
    res = isolating_set_bounded(build_cycle(7))
    assert res.size == 2
    assert [s.case for s in res.case_trace] == ["cycle"]
    assert res.vertices == [0, 5]


def test_path_pattern():
    res = isolating_set_bounded(build_path(9))
    assert res.vertices == [3, 7]


def test_bk_star_4():
    g = build_bk_star(4)
    res = isolating_set_bounded(g)
    assert res.size <= 4
    assert iota_exact(g).iota == 4
    assert is_p3_isolating(g, res.set)


@pytest.mark.parametrize("n", range(1, 25))
def test_bn_within_bound(n):
    g = build_bn(n)
    res = isolating_set_bounded(g)
    assert is_p3_isolating(g, res.set)
    assert res.size <= (n + 1) // 4


def test_bn_k3_h_meets_floor_n_over_4():
    for n, h in [(12, 5), (16, 6), (20, 6), (30, 6)]:
        res = isolating_set_bounded(build_bn_k3_h(n, h))
        assert res.size <= n // 4
        assert res.size_bound_used == n // 4


def test_rejects_disconnected_and_c6():
    with pytest.raises(PreconditionError, match="connected"):
        isolating_set_bounded(Graph.from_edges(4, [(0, 1), (2, 3)]))
    with pytest.raises(PreconditionError, match="C6"):
        isolating_set_bounded(build_cycle(6))


def test_unknown_mode():
    with pytest.raises(ValueError):
        isolating_set_bounded(K3, mode="greedy")


def test_every_valid_input_upto_8():
    for g in valid_inputs():
        res = isolating_set_bounded(g)
        bound = (g.n + 1) // 4
        assert is_p3_isolating(g, res.set)
        assert iota_exact(g).iota <= res.size <= bound
        assert res.size <= res.size_bound_used <= bound


def test_delta_at_least_5_meets_floor_n_over_4():
    for g in valid_inputs():
        if g.max_degree >= 5:
            assert isolating_set_bounded(g).size <= g.n // 4


def test_case_222_pivot_degree():
    seen = Counter()
    for g in valid_inputs():
        for step in isolating_set_bounded(g).case_trace:
            seen[step.case] += 1
            if step.case == "case2.2.2":
                assert step.pivot_degree in (3, 4)
    assert seen["case2.2.2"] > 0


def test_fast_mode_is_always_isolating():
    for g in valid_inputs(7):
        assert is_p3_isolating(g, isolating_set_bounded(g, FAST).set)
    rng = random.Random(3)
    for _ in range(150):
        g = random_c6free_graph(rng.randint(9, 22), rng, local=0.3, far=0.02)
        assert is_p3_isolating(g, isolating_set_bounded(g, FAST).set)


def test_random_inputs_reach_every_case():
    rng = random.Random(11)
    cases = Counter()
    for _ in range(400):
        g = random_c6free_graph(rng.randint(9, 24), rng, local=rng.choice([0.2, 0.4]), far=0.02)
        res = isolating_set_bounded(g, EXACT_ORACLE)
        assert res.size <= (g.n + 1) // 4
        cases.update(s.case for s in res.case_trace)
    for tag in ("case1", "case2.1", "case2.2.1", "case2.2.2", "no-tight", "path", "cycle"):
        assert cases[tag] > 0, tag


def test_trace_pivots_use_input_labels():
    g = build_bn_k3_h(16, 5)
    res = isolating_set_bounded(g)
    for step in res.case_trace:
        if step.pivot is not None:
            assert 0 <= step.pivot < g.n
    assert res.case_trace[0].pivot == 0 and res.case_trace[0].pivot_degree == 5


def test_reduce_tight_examples():
    c7 = build_cycle(7)
    for v in range(7):
        assert reduce_tight(c7, v).bit_count() == 1
        d = reduce_tight(c7, v)
        assert not d >> v & 1
        assert is_p3_isolating(c7.delete(1 << v).graph, c7.delete(1 << v).lower(d))
    for v in range(3):
        assert reduce_tight(K3, v) == 0
    b2 = build_bk_star(2)
    for v in range(7):
        assert reduce_tight(b2, v).bit_count() == 1


def test_reduce_tight_preconditions():
    with pytest.raises(PreconditionError, match="tight"):
        reduce_tight(build_path(7), 0)
    with pytest.raises(PreconditionError):
        reduce_tight(K3, 5)


def test_reduce_tight_on_all_tight_graphs():
    for n in (3, 7):
        for g in connected_graphs(n):
            if find_induced_cycle(g, 6) is None and is_tight(g):
                iota = iota_exact(g).iota
                for v in range(n):
                    d = reduce_tight(g, v)
                    assert d.bit_count() == iota_exact(g.delete(1 << v).graph).iota == iota - 1
