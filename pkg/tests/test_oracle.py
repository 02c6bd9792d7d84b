from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from oracles import member, pair_sums, raw_parts
from strategies import interval_sets, positive_sets
from sumsetlab.linear_sets import IntervalSet, measure, minkowski_sum
from sumsetlab.oracle import gap_points, gap_runs, gap_segments, grid_measure, grid_set, grid_sumset

S = IntervalSet.of
A_FAM = S(0, ("1/10", "9/10"), 1)


def test_grid_sumset_examples():
    assert grid_sumset(S((0, 1)), S((0, 1)), 2).points() == [0, F(1, 2), 1, F(3, 2), 2]
    exact = minkowski_sum(A_FAM, A_FAM)
    G = grid_sumset(A_FAM, A_FAM, 10)
    assert all(x in exact for x in G.points())
    assert len(grid_sumset(IntervalSet.empty(), A_FAM, 10)) == 0


def test_grid_measure_examples():
    assert abs(grid_measure(grid_set(S((0, 1)), 10)) - 1) <= F(1, 5)
    B = S((0, "1/5"), ("9/10", 1))
    assert grid_measure(grid_set(B, 20)) == F(3, 10)
    assert abs(grid_measure(grid_set(B, 20)) - F(3, 10)) <= F(4, 20)
    assert grid_measure(grid_set(IntervalSet.empty(), 20)) == 0


def test_gap_point_examples():
    SUM = minkowski_sum(A_FAM, A_FAM)
    assert gap_points(SUM, (0, 1), 20) == [F(1, 20)]
    assert gap_points(S((0, 2)), (0, 2), 7) == []
    assert gap_points(S((0, 1)), (0, 2), 2) == [F(3, 2), 2]
    with pytest.raises(ValueError):
        grid_set(S((0, 1)), 0)


@given(interval_sets(), st.sampled_from([1, 3, 10, 12, 60]))
def test_grid_set_is_exact_membership(X, q):
    G = grid_set(X, q)
    parts = raw_parts(X)
    if not X:
        assert len(G) == 0
        return
    for k in range(len(G.bits)):
        x = F(G.start + k, q)
        assert bool(G.bits[k]) == member(parts, x)


@given(positive_sets(), positive_sets(), st.sampled_from([10, 24, 100]))
def test_grid_sumset_soundness_and_completeness(A, B, q):
    exact = minkowski_sum(A, B)
    sums = pair_sums(raw_parts(A), raw_parts(B))
    G = grid_sumset(A, B, q)
    for x in G.points():
        assert member(sums, x) and x in exact
    # when every endpoint lies on the grid the sampled sumset is exactly the grid trace
    if all((p * q).denominator == 1 for iv in A.parts + B.parts for p in iv):
        assert G.points() == grid_set(exact, q).points()


@given(interval_sets(), st.sampled_from([10, 100, 1000]))
def test_grid_measure_bound(X, q):
    assert abs(grid_measure(grid_set(X, q)) - measure(X)) <= F(2 * len(X), q)


@given(interval_sets(), st.sampled_from([2, 5, 12, 360]))
def test_gap_points_and_segments(X, q):
    lo, hi = F(-4), F(4)
    pts = gap_points(X, (lo, hi), q)
    want = [F(i, q) for i in range(-4 * q, 4 * q + 1) if not member(raw_parts(X), F(i, q))]
    assert pts == want
    flat = [F(i, q) for a, b in gap_segments(X, (lo, hi), q) for i in range(int(a * q), int(b * q) + 1)]
    assert flat == want
    assert sum(b - a + 1 for a, b in gap_runs(X, (lo, hi), q)) == len(want)
