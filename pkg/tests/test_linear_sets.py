from fractions import Fraction as F

import pytest
from hypothesis import given, strategies as st

from oracles import member, pair_sums, probe_points, raw_parts, union_measure
from strategies import fractions, interval_sets, raw_intervals
from sumsetlab.linear_sets import (
    EmptySetError,
    IntervalSet,
    SetParseError,
    canonicalize,
    contains_point,
    difference,
    diameter,
    format_set,
    intersect,
    measure,
    minkowski_sum,
    normalize_to_zero,
    parse_set,
    reflect,
    restrict,
    set_from_json,
    set_to_json,
    symmetric_difference_measure,
    translate,
    union,
)

S = IntervalSet.of
B_FIG = S((0, "1/5"), ("9/10", 1))
A_FAM = S(0, ("1/10", "9/10"), 1)


# -- examples -------------------------------------------------------------

@pytest.mark.parametrize("raw, parts", [
    ([(0, 1), (1, 2)], [(0, 2)]),
    ([(F(1, 2), 1), (0, F(1, 4))], [(0, F(1, 4)), (F(1, 2), 1)]),
    ([(0, 1), (F(1, 4), F(1, 2))], [(0, 1)]),
])
def test_canonicalize_examples(raw, parts):
    assert canonicalize(raw).parts == tuple((F(a), F(b)) for a, b in parts)


def test_canonicalize_rejects_reversed():
    with pytest.raises(ValueError):
        canonicalize([(1, 0)])


def test_measure_examples():
    assert measure(B_FIG) == F(3, 10)
    assert measure(IntervalSet.empty()) == 0
    assert measure(A_FAM) == F(4, 5)


def test_diameter_examples():
    assert diameter(S(0, 1)) == 1
    assert diameter(B_FIG) == 1
    assert diameter(S((2, 3))) == 1
    with pytest.raises(EmptySetError):
        diameter(IntervalSet.empty())


def test_affine_examples():
    assert translate(S((0, 1)), F(1, 2)) == S(("1/2", "3/2"))
    assert normalize_to_zero(S((2, 3), (4, 5))) == S((0, 1), (2, 3))
    assert reflect(B_FIG, 1) == S((0, "1/10"), ("4/5", 1))
    for op in (normalize_to_zero, lambda X: reflect(X, 1)):
        with pytest.raises(EmptySetError):
            op(IntervalSet.empty())


def test_boolean_examples():
    assert intersect(S((0, 1)), S(("1/2", 2))) == S(("1/2", 1))
    assert restrict(A_FAM, (0, F(1, 2))) == S(0, ("1/10", "1/2"))
    assert union(S((0, 1)), S((2, 3))) == S((0, 1), (2, 3))
    # touching closed intervals meet in a point
    assert intersect(S((0, 1)), S((1, 2))) == S(1)


def test_minkowski_examples():
    assert minkowski_sum(S((0, 1)), S((0, 1))) == S((0, 2))
    BB = minkowski_sum(B_FIG, B_FIG)
    assert BB == S((0, "2/5"), ("9/10", "6/5"), ("9/5", 2))
    assert measure(BB) == F(9, 10)
    assert minkowski_sum(A_FAM, A_FAM) == S(0, ("1/10", "19/10"), 2)
    with pytest.raises(EmptySetError):
        minkowski_sum(IntervalSet.empty(), B_FIG)


def test_contains_point_examples():
    assert contains_point(S((0, 1)), 1)
    assert not contains_point(B_FIG, F(1, 2))
    assert contains_point(S(0), 0)
    assert not contains_point(IntervalSet.empty(), 0)


# -- text and JSON forms --------------------------------------------------

@pytest.mark.parametrize("text", [
    "[0,1/5] U [9/10,1]",
    "[0,1/5] ∪ [9/10,1]",
    "[0,1/5]; [9/10,1]",
    "[[0,1/5],[9/10,1]]",
    "[0, 0.2] U [0.9, 1]",
    '{"intervals": [["0","1/5"],["9/10","1"]]}',
    '{"intervals": [["0","0.2"],["0.9","1"]]}',
])
def test_parse_forms(text):
    assert parse_set(text) == B_FIG


def test_parse_singletons_and_empty():
    assert parse_set("{0} U [1/10,9/10] U {1}") == A_FAM
    assert parse_set("") == IntervalSet.empty()
    assert parse_set("[]") == IntervalSet.empty()
    assert parse_set("{}") == IntervalSet.empty()


@pytest.mark.parametrize("text", ["[1,0]", "[0,1] U", "U [0,1]", "[0,1/0]", "[a,1]", "[0,1", '{"intervals": 3}'])
def test_parse_errors(text):
    with pytest.raises(SetParseError):
        parse_set(text)


def test_format_examples():
    assert format_set(A_FAM) == "{0} U [1/10,9/10] U {1}"
    assert format_set(IntervalSet.empty()) == "{}"
    assert format_set(B_FIG, 3) == "[0.000,0.200] U [0.900,1.000]"
    assert set_to_json(B_FIG) == {"intervals": [["0", "1/5"], ["9/10", "1"]]}


# -- properties -----------------------------------------------------------

@given(raw_intervals())
def test_canonical_form_invariants(raw):
    X = canonicalize(raw)
    assert canonicalize(X.parts) == X
    for (a0, a1), (b0, b1) in zip(X.parts, X.parts[1:]):
        assert a0 <= a1 < b0 <= b1
    # same points as the raw union
    pts = probe_points([p for iv in raw for p in iv])
    for x in pts:
        assert contains_point(X, x) == member(raw, x)
    assert measure(X) == union_measure(raw)


@given(interval_sets())
def test_round_trips(X):
    assert parse_set(format_set(X)) == X
    assert set_from_json(set_to_json(X)) == X


@given(interval_sets(), interval_sets())
def test_inclusion_exclusion(X, Y):
    assert measure(union(X, Y)) + measure(intersect(X, Y)) == measure(X) + measure(Y)


@given(interval_sets(), interval_sets())
def test_boolean_ops_pointwise(X, Y):
    px, py = raw_parts(X), raw_parts(Y)
    U, I = union(X, Y), intersect(X, Y)
    for x in probe_points([p for iv in px + py for p in iv]):
        assert contains_point(U, x) == (member(px, x) or member(py, x))
        assert contains_point(I, x) == (member(px, x) and member(py, x))
    D = difference(X, Y)
    assert measure(D) == measure(X) - measure(I)
    assert symmetric_difference_measure(X, Y) == measure(D) + measure(difference(Y, X))


@given(interval_sets(), fractions(), fractions())
def test_restrict_is_intersection(X, a, b):
    lo, hi = min(a, b), max(a, b)
    assert restrict(X, (lo, hi)) == intersect(X, S((lo, hi)))


@given(interval_sets(), interval_sets())
def test_minkowski_against_pairwise_oracle(X, Y):
    Z = minkowski_sum(X, Y)
    sums = pair_sums(raw_parts(X), raw_parts(Y))
    assert measure(Z) == union_measure(sums)
    for x in probe_points([p for iv in sums for p in iv]):
        assert contains_point(Z, x) == member(sums, x)
    assert diameter(Z) == diameter(X) + diameter(Y)
    assert measure(Z) >= measure(X) + measure(Y)
    assert minkowski_sum(Y, X) == Z


@given(interval_sets(3), interval_sets(3), interval_sets(3))
def test_minkowski_associative(X, Y, W):
    assert minkowski_sum(minkowski_sum(X, Y), W) == minkowski_sum(X, minkowski_sum(Y, W))


@given(interval_sets(), fractions())
def test_affine_maps_preserve_size(X, t):
    for Y in (translate(X, t), reflect(X, t), normalize_to_zero(X)):
        assert measure(Y) == measure(X)
        assert diameter(Y) == diameter(X)
    assert normalize_to_zero(X).inf == 0
    assert reflect(reflect(X, t), t) == X


@given(st.lists(st.tuples(fractions(), fractions()), max_size=4))
def test_of_matches_canonicalize(pairs):
    raw = [(min(a, b), max(a, b)) for a, b in pairs]
    assert S(*raw) == canonicalize(raw)
