import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from evencycle.errors import BudgetExceeded
from evencycle.generators import complete_bipartite, complete_graph, cycle_graph, gnm, path_graph, star_graph
from evencycle.graph import Graph, degree_order, restricted_bfs_subgraph
from evencycle.listing import (
    ListingConfig, colorful_probability, delta_for, detect, detect_c2k, list_c2k, list_c6,
    list_colorful_cycles_through, repetitions, run_listing,
)
from evencycle.oracle import Cycle, count_capped_k_walks, enumerate_cycles

BIG = 10**9


def test_colorful_probability_and_rounds():
    assert colorful_probability(2) == Fraction(24, 256)
    assert colorful_probability(3) == Fraction(720, 46656)
    r = repetitions(40, 3, Fraction(1, 10**9))
    p = 720 / 46656
    assert (1 - p) ** r <= 1e-9 / 40**6
    assert (1 - p) ** (r - 1) > 1e-9 / 40**6


def test_config_validation():
    with pytest.raises(ValueError):
        ListingConfig(k=1, delta=1)
    with pytest.raises(ValueError):
        ListingConfig(k=2, delta=0)
    with pytest.raises(ValueError):
        ListingConfig(k=2, delta=1, epsilon=Fraction(1))


def test_rainbow_hexagon():
    g = cycle_graph(6)
    assert list_colorful_cycles_through(g, 5, list(range(6)), 3) == {Cycle.from_walk(range(6))}


def test_repeated_color_hides_cycle():
    g = cycle_graph(6)
    assert list_colorful_cycles_through(g, 5, [0, 0, 2, 3, 4, 5], 3) == set()


def test_k33_bijective_coloring():
    g = complete_bipartite(3, 3)
    colors = [3, 0, 5, 1, 4, 2]
    assert list_colorful_cycles_through(g, 2, colors, 3) == enumerate_cycles(g, 3)


@settings(max_examples=60, deadline=None)
@given(st.integers(5, 14), st.integers(4, 35), st.integers(0, 10**6), st.sampled_from([2, 3]))
def test_colorful_search_matches_filtered_oracle(n, m, seed, k):
    g = gnm(n, min(m, n * (n - 1) // 2), seed)
    rng = random.Random(seed)
    colors = [rng.randrange(2 * k) for _ in range(n)]
    v = rng.randrange(n)
    expected = {c for c in enumerate_cycles(g, k) if v in c and len({colors[u] for u in c}) == 2 * k}
    assert list_colorful_cycles_through(g, v, colors, k) == expected


@pytest.mark.parametrize("g,k,count", [
    (cycle_graph(6), 3, 1),
    (complete_graph(4), 2, 3),
    (complete_graph(5), 2, 15),
    (cycle_graph(7), 3, 0),
])
def test_list_examples(g, k, count):
    cycles = list_c2k(g, ListingConfig(k=k, delta=delta_for(g.m, k)))
    assert len(cycles) == count
    assert cycles == enumerate_cycles(g, k)


def test_list_c6_named(named):
    assert len(list_c6(named["K33"])) == 6
    assert list_c6(named["Heawood"]) == enumerate_cycles(named["Heawood"], 3)
    assert list_c6(named["C7"]) == set()


def test_random_instance_matches_oracle():
    g = gnm(30, 90, 17)
    assert list_c2k(g, ListingConfig(k=3, delta=delta_for(g.m, 3))) == enumerate_cycles(g, 3)


def test_octagons_use_mask_kernel():
    g = Graph(8, list(cycle_graph(8).edges()) + [(0, 4), (2, 6)])
    expected = enumerate_cycles(g, 4)
    assert len(expected) == 1
    assert list_c2k(g, ListingConfig(k=4, delta=4, epsilon=Fraction(1, 10**6))) == expected


def test_empty_and_edgeless_inputs():
    for g in (Graph(0), Graph(4), path_graph(5)):
        assert list_c2k(g, ListingConfig(k=2, delta=1)) == set()
        assert detect_c2k(g, 3) is None


def test_found_only_at_highest_vertex(small_corpus):
    for g in small_corpus:
        order = degree_order(g)
        res = run_listing(g, ListingConfig(k=3, delta=4, seed=1), order=order)
        for c, i in res.found_at.items():
            assert i == max(order.rank[v] for v in c)


def test_soundness_with_few_rounds(small_corpus):
    for g in small_corpus:
        got = list_c2k(g, ListingConfig(k=2, delta=3, epsilon=Fraction(1, 2)))
        assert got <= enumerate_cycles(g, 2)
        assert all(c.is_valid_in(g) and len(c) == 4 for c in got)


def test_deterministic_and_thread_independent():
    g = gnm(35, 100, 8)
    cfg = ListingConfig(k=3, delta=6, seed=42)
    a = run_listing(g, cfg)
    b = run_listing(g, cfg, threads=4)
    c = run_listing(g, cfg)
    assert a.cycles == b.cycles == c.cycles
    assert a.counters == b.counters == c.counters


def test_delta_only_moves_accounting():
    g = gnm(25, 70, 2)
    low = run_listing(g, ListingConfig(k=3, delta=1))
    high = run_listing(g, ListingConfig(k=3, delta=BIG))
    assert low.cycles == high.cycles
    assert low.counters.below_delta + low.counters.above_delta == high.counters.below_delta
    assert high.counters.above_delta == 0


def test_edge_count_can_exceed_k_walks_alone():
    # C4 with k=2: G_i for the top vertex has all 4 edges but only 2 capped 2-walks start there
    g = cycle_graph(4)
    order = degree_order(g)
    top = order.by_rank[-1]
    gi = restricted_bfs_subgraph(g, top, 2, lambda u: order.rank[u] <= order.rank[top])
    assert gi.m == 4
    assert count_capped_k_walks(g, 2, order, starts=[top]) == 2


def test_below_delta_work_bounded_by_capped_walks(small_corpus):
    for g in small_corpus:
        order = degree_order(g)
        for k in (2, 3):
            delta = delta_for(g.m, k)
            res = run_listing(g, ListingConfig(k=k, delta=delta), order=order)
            low = [v for v in range(g.n) if g.degree(v) <= delta]
            bound = sum(count_capped_k_walks(g, j, order, starts=low) for j in range(1, k + 1))
            assert res.counters.below_delta <= bound


def test_budget_exceeded():
    g = complete_graph(7)
    with pytest.raises(BudgetExceeded):
        list_c2k(g, ListingConfig(k=3, delta=3, budget=50))


@pytest.mark.parametrize("g,k,found", [
    (star_graph(5), 3, False),
    (path_graph(9), 3, False),
    (cycle_graph(6), 3, True),
    (cycle_graph(7), 3, False),
])
def test_detect_examples(g, k, found):
    c = detect_c2k(g, k, seed=3)
    assert (c is not None) == found
    if found:
        assert c == Cycle.from_walk(range(6)) and c.is_valid_in(g)


def test_detect_budget_flag():
    res = detect(complete_graph(8), 3, budget=5)
    assert res.cycle is None and res.budget_exhausted
