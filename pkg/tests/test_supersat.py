from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from evencycle.errors import BudgetExceeded, NoEdges, SetsOverlap
from evencycle.generators import bipartite_gnp, complete_bipartite
from evencycle.graph import Graph, edges_between
from evencycle.oracle import complete_bipartite_counts, count_2paths, count_4paths, enumerate_cycles
from evencycle.supersat import (
    CSV_COLUMNS, disjoint_corollary_hypothesis, extremal_hypothesis, hand_checked_cases, p2_lower_bound,
    p4_factors, p4_formula, p4_lower_bound, partialsupersat_hypothesis, partialsupersat_rhs, peel_sets,
    reports_to_csv, supersat_experiment,
)


def sides(L, R):
    return frozenset(range(L)), frozenset(range(L, L + R))


def test_extremal_examples():
    assert not extremal_hypothesis(3, 3, 9, 2)
    n = 10**4
    assert extremal_hypothesis(n // 2, n // 2, 201 * n * 100, 2)


@pytest.mark.parametrize("m", [10**13, 2 * 10**11, 200_400_000_000, 200_400_000_001, 10**10])
def test_extremal_matches_float_away_from_threshold(m):
    L = R = 10**6
    exact = extremal_hypothesis(L, R, m, 2)
    threshold = 200 * (L + R + (L * R) ** 0.75)
    if abs(m - threshold) > 1e-9 * threshold:
        assert exact == (m > threshold)


@settings(max_examples=200)
@given(st.integers(1, 50), st.integers(1, 50), st.integers(0, 10**6), st.integers(2, 4))
def test_extremal_agrees_with_rational_bound(L, R, m, k):
    # compare against m/(100k) - (L+R) > (LR)^((k+1)/(2k)) via exact integer powers on the other side
    lhs = Fraction(m, 100 * k) - (L + R)
    expected = lhs > 0 and lhs ** (2 * k) > Fraction(L * R) ** (k + 1)
    assert extremal_hypothesis(L, R, m, k) == expected


def test_extremal_never_holds_on_small_simple_graphs():
    # the predicate needs m > 100k(L+R), unreachable for simple graphs this small
    for L in range(1, 10):
        for R in range(1, 10):
            assert not extremal_hypothesis(L, R, L * R, 2)


def test_hand_checked_arithmetic():
    cases = hand_checked_cases()
    assert len(cases) == 10
    for name, got, expected in cases:
        assert got == expected, name


def test_partialsupersat_examples():
    assert not partialsupersat_hypothesis(1000, 1000, 10**5)
    value = partialsupersat_rhs(100, 200, 10**4, 1024)
    dL, dR = Fraction(100), Fraction(50)
    assert value == dR**3 * dL**3 * min(1, dR**3 / 100, dL**2 * dR**2 / 100**2) / 10**70
    with pytest.raises(ValueError):
        partialsupersat_rhs(50, 200, 10**4, 1024)


def test_partial_min_term_selection():
    # dR^3 < L so the middle term is below 1
    L, R, m = 1000, 2 * 10**4, 10**5
    dR, dL = Fraction(m, R), Fraction(m, L)
    assert dR**3 / L < 1 and dR**3 / L < dL**2 * dR**2 / L**2
    # ceil(log 21000) = 15
    assert partialsupersat_rhs(L, R, m, 21000) == dR**3 * dL**3 * (dR**3 / L) / 15**70


def test_disjoint_corollary_boundaries():
    assert disjoint_corollary_hypothesis(1, 1, 200, 2)
    assert not disjoint_corollary_hypothesis(1, 1, 199, 2)
    # L=8, R=64: max(R L^(1/3), L sqrt(R)) = max(128, 64) = 128
    assert disjoint_corollary_hypothesis(8, 64, 200 * 128, 2)
    assert not disjoint_corollary_hypothesis(8, 64, 200 * 128 - 1, 2)


def test_peel_complete():
    g = complete_bipartite(2, 2)
    A, B = sides(2, 2)
    assert peel_sets(g, A, B) == (B, A, B)


def test_peel_two_to_one():
    g = Graph(3, [(0, 2), (1, 2)])
    B1, A1, B2 = peel_sets(g, {0, 1}, {2})
    assert (B1, A1, B2) == ({2}, {0, 1}, {2})


def test_peel_errors():
    with pytest.raises(NoEdges):
        peel_sets(Graph(4), {0, 1}, {2, 3})
    with pytest.raises(SetsOverlap):
        peel_sets(complete_bipartite(2, 2), {0, 1}, {1, 2})


def test_peel_guarantees_on_corpus(bip_corpus):
    for g, A, B in bip_corpus:
        m = edges_between(g, A, B)
        if m == 0:
            continue
        B1, A1, B2 = peel_sets(g, A, B)
        assert B2 <= B1 <= B and A1 <= A
        assert 2 * edges_between(g, A, B1) >= m
        assert 4 * edges_between(g, A1, B1) >= m
        assert 8 * edges_between(g, A1, B2) >= m


def test_p2_examples():
    assert p2_lower_bound(2, 2, 4) == 4 == count_2paths(complete_bipartite(2, 2), *sides(2, 2))
    assert p2_lower_bound(3, 5, 9) is None
    assert p2_lower_bound(100, 100, 10**4) == 5 * 10**5 <= complete_bipartite_counts(100, 100).two_paths


def test_p2_bound_on_corpus(bip_corpus):
    for g, A, B in bip_corpus:
        m = edges_between(g, A, B)
        bound = p2_lower_bound(len(A), len(B), m)
        if bound is not None:
            assert count_2paths(g, A, B) >= bound


def test_p4_inapplicable_when_sparse():
    g = complete_bipartite(3, 3)
    assert p4_lower_bound(g, *sides(3, 3)) is None


@pytest.mark.parametrize("n", [100, 150])
def test_p4_complete_bipartite(n):
    g = complete_bipartite(n, n)
    value = p4_lower_bound(g, *sides(n, n))
    m = n * n
    assert value == Fraction(m, 8) * (Fraction(m, 8 * n) - 1) * (Fraction(m, 4 * n) - 1) * (Fraction(m, 2 * n) - 2)
    assert 0 < value <= complete_bipartite_counts(n, n).four_paths


def test_p4_formula_below_exact_count(bip_corpus):
    checked = 0
    for g, A, B in bip_corpus:
        if edges_between(g, A, B) == 0:
            continue
        if all(f > 0 for f in p4_factors(g, A, B)):
            assert count_4paths(g, A, B) >= p4_formula(g, A, B)
            checked += 1
    assert checked > 0


def test_experiment_k33():
    [rep] = supersat_experiment(3, 3, 3, edge_prob=1.0)
    assert rep.t_exact == 6
    assert rep.ratio == Fraction(6 * 3**3 * 3**3, 9**6) == Fraction(4374, 531441)
    assert rep.bound_conjecture == Fraction(9**6, 3**6)


def test_experiment_edgeless():
    [rep] = supersat_experiment(4, 5, 3, m=0)
    assert (rep.t_exact, rep.ratio) == (0, 0)


def test_experiment_random_matches_oracle():
    reps = supersat_experiment(12, 12, 2, trials=3, seed=5, edge_prob=0.5)
    assert len(reps) == 3
    for rep in reps:
        assert rep.t_exact > 0 and rep.ratio > 0
    again = supersat_experiment(12, 12, 2, trials=3, seed=5, edge_prob=0.5)
    assert [r.as_row() for r in reps] == [r.as_row() for r in again]


def test_experiment_guard():
    with pytest.raises(BudgetExceeded):
        supersat_experiment(30, 30, 3, edge_prob=1.0, oracle_budget=10**6)


def test_csv_columns():
    text = reports_to_csv(supersat_experiment(3, 3, 3, edge_prob=1.0))
    header, row = text.strip().splitlines()
    assert header.split(",") == list(CSV_COLUMNS)
    assert row.startswith("3,3,9,3,6,6,2/243,")
