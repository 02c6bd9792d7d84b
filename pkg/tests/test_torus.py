import math
from fractions import Fraction as F

import pytest
from hypothesis import given

from oracles import member, probe_points, raw_parts
from strategies import fractions, ordered_pairs, positive_sets
from sumsetlab.errors import PreconditionError
from sumsetlab.linear_sets import IntervalSet, contains_point, measure, minkowski_sum
from sumsetlab.torus import (
    TorusSet,
    fold,
    max_multiplicity,
    max_multiplicity_positive,
    modular_split,
    torus_sum,
)

S = IntervalSet.of


def hits(parts, D, x) -> int:
    """#{n >= 0 : x + nD in S} for a residue x in [0, D)."""
    top = max(hi for _, hi in parts)
    return sum(member(parts, x + n * D) for n in range(math.floor(top / D) + 2))


def test_fold_examples():
    L = fold(S((0, "1/2"), (1, "3/2")), 1)
    assert [k for k, _ in L.layers] == [1, 2]
    assert L.layer(1) == S((0, "1/2")) and L.layer(2) == S((0, "1/2"))

    L = fold(S((0, 1)), 1)
    assert L.layer(2) == S(0)
    assert measure(L.layer(2)) == 0
    assert L.max_point == 2 and L.max_positive == 1


def test_fold_small_extremal_family():
    A = S((0, "11/20"), ("9/10", "27/20"), ("9/5", "43/20"))
    L = fold(A, 1)
    # residues: [0,11/20], [9/10,1], [0,7/20], [4/5,1], [0,3/20]
    assert L.layer(1) == S((0, "11/20"), ("4/5", 1))
    assert L.layer(2) == S((0, "7/20"), ("9/10", 1))
    assert L.layer(3) == S((0, "3/20"))
    assert sum(L.measures()) == F(27, 20) == measure(A)


def test_max_multiplicity_examples():
    assert max_multiplicity(S((0, "1/2"), (1, "3/2")), 1) == 2
    assert max_multiplicity(S((0, 1)), 1) == 2
    assert max_multiplicity(S((0, "1/3")), 1) == 1


def test_fold_errors():
    with pytest.raises(ValueError):
        fold(S((1, 2)), 1)
    with pytest.raises(ValueError):
        fold(S((0, 1)), 0)


def test_torus_sum_examples():
    X = TorusSet.from_line(S(("3/4", 1)), 1)
    Y = TorusSet.from_line(S(("1/2", "3/4")), 1)
    assert torus_sum(X, Y).parts == S(("1/4", "3/4"))
    full = TorusSet.from_line(S((0, 1)), 1)
    assert torus_sum(full, Y).is_full
    assert torus_sum(TorusSet.from_line(S(0), 1), Y) == Y
    with pytest.raises(ValueError):
        torus_sum(X, TorusSet.from_line(S((0, 1)), 2))


def test_modular_split_examples():
    assert tuple(modular_split(S((0, 1)), S((0, 1)))) == (1, 1)
    A = S(0, ("1/10", "9/10"), 1)
    assert tuple(modular_split(A, A)) == (1, F(4, 5))
    assert tuple(modular_split(S((0, 2)), S((0, 1)))) == (2, 1)
    with pytest.raises(PreconditionError):
        modular_split(S((0, 1)), S((0, 2)))


@given(positive_sets(), fractions(1, 2))
def test_fold_matches_pointwise_count(X, D):
    if D <= 0:
        D = F(1, 2)
    L = fold(X, D)
    parts = raw_parts(X)
    residues = {p % D for iv in parts for p in iv} | {F(0)}
    for x in probe_points(sorted(residues) + [D]):
        if x >= D:
            continue
        c = hits(parts, D, x)
        for k in range(1, L.max_point + 2):
            assert contains_point(L.layer(k), x) == (c >= k)
    assert sum(L.measures()) == measure(X)
    for (_, lo), (_, hi) in zip(L.layers[1:], L.layers):
        assert lo.issubset(hi)
    assert L.max_point <= math.ceil(X.diameter / D) + 1
    assert max_multiplicity_positive(X, D) <= max(1, math.ceil(X.diameter / D))


@given(ordered_pairs())
def test_modular_split_total(pair):
    A, B = pair
    if A.diameter == 0:
        return
    assert modular_split(A, B).total == measure(minkowski_sum(A, B))


@given(positive_sets(), fractions(1, 3))
def test_torus_set_membership(X, D):
    if D <= 0:
        D = F(1)
    T = TorusSet.from_line(X, D)
    parts = raw_parts(X)
    assert T.measure <= D
    for x in probe_points([p % D for iv in parts for p in iv] + [F(0), D]):
        if x < D:
            assert (x in T) == (hits(parts, D, x) > 0 or (x == 0 and hits(parts, D, D) > 0))
