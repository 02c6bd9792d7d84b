from fractions import Fraction as F

import pytest
from hypothesis import assume, given, strategies as st

from oracles import pair_sums, prefix_measure, raw_parts, union_measure
from sumsetlab.generators import (
    gen_asymmetric,
    gen_freiman_large,
    gen_random,
    gen_small_extremal,
    random_pair,
)
from sumsetlab.linear_sets import IntervalSet, contains_point, measure
from sumsetlab.structure import first_half_density_point

S = IntervalSet.of


def sum_measure(A, B):
    return union_measure(pair_sums(raw_parts(A), raw_parts(B)))


def test_freiman_large_examples():
    A = gen_freiman_large(2, 2, F(1, 5), F(1, 5))
    assert A == S(0, ("1/10", "9/10"), 1)
    assert measure(A) == F(4, 5) and sum_measure(A, A) == F(9, 5)
    assert gen_freiman_large(1, 1, F(1, 3), F(1, 7)) == S((0, 1))
    A = gen_freiman_large(4, 3, F(1, 10), F(1, 10))
    assert measure(A) == F(3, 4) and sum_measure(A, A) == F(7, 4)


def test_freiman_large_constraint():
    with pytest.raises(ValueError):
        gen_freiman_large(3, 3, F(1, 4), F(1, 4))
    with pytest.raises(ValueError):
        gen_freiman_large(2, 2, 0, F(1, 5))


@given(st.integers(1, 6), st.integers(1, 6), st.integers(1, 15), st.integers(1, 15))
def test_freiman_large_identity_and_density(n, m, k1, k2):
    a1, a2 = F(k1, 60), F(k2, 60)
    assume((n - 1) * a1 + (m - 1) * a2 < 1)
    A = gen_freiman_large(n, m, a1, a2)
    delta = (1 - (n - 1) * a1 - (m - 1) * a2) / 2
    assert measure(A) == F(1, 2) + delta
    assert sum_measure(A, A) == 1 + measure(A)
    assert A.inf == 0 and A.sup == 1
    c1 = first_half_density_point(A, 1)
    if c1 > 0:
        for K in range(1, n):
            x = K * a1
            if x <= c1:
                assert prefix_measure(raw_parts(A), x) >= x * x / (2 * c1)


def test_asymmetric_examples():
    p = gen_asymmetric(F(1, 5), F(2, 25), F(1, 100), 2)
    A, B = p
    assert p.lambda_sum == 1 + measure(A) == sum_measure(A, B)
    assert B.diameter == 1
    assert p.regime_product == 2 * (F(2, 5) - 3 * F(1, 100))
    q = gen_asymmetric(F(1, 4), F(1, 10), F(1, 100), 3)
    assert q.regime_product == F(69, 50) and q.regime_product > 1
    with pytest.raises(ValueError):
        gen_asymmetric(F(1, 5), F(1, 10), F(1, 100), 2)
    # meets a/2 > b > ε, 1 - na >= b and nε <= a - b, yet A+B misses part of [na, 2]
    with pytest.raises(ValueError, match="a - ε"):
        gen_asymmetric(F(12, 25), F(1, 100), F(1, 200), 2)


@given(st.integers(2, 30), st.integers(1, 30), st.integers(1, 30), st.integers(1, 4))
def test_asymmetric_identity(ka, kb, ke, n):
    a, b, eps = F(ka, 60), F(kb, 120), F(ke, 600)
    try:
        p = gen_asymmetric(a, b, eps, n)
    except ValueError:
        return
    A, B = p
    assert sum_measure(A, B) == B.diameter + measure(A)
    assert p.strict_regime == (p.lambda_sum < measure(A) + 2 * measure(B))


def test_small_extremal_examples():
    p = gen_small_extremal(3, F(1, 2), F(1, 5), F(1, 10), 1)
    A, B = p
    assert A == S((0, "11/20"), ("9/10", "27/20"), ("9/5", "43/20"))
    assert B == S((0, "1/5"), ("9/10", 1))
    assert p.lambda_sum == F(12, 5) == sum_measure(A, B)
    assert not p.strict_regime
    A, B = gen_small_extremal(1, F(1, 2), F(3, 10), 0, 1)
    assert A == S((0, "3/20")) and B == S((0, "3/10"), 1)
    assert sum_measure(A, B) == F(3, 20) + F(9, 20)


@pytest.mark.parametrize("args", [
    (2, F(9, 10), F(1, 2), F(2, 5), 1),  # overlapping blocks
    (3, F(1, 2), F(1, 5), F(1, 10), 1, True),  # outside the strict regime
    (2, 1, F(1, 5), F(1, 5), 1),
    (1, 0, F(1, 5), 0, 1),
])
def test_small_extremal_errors(args):
    with pytest.raises(ValueError):
        gen_small_extremal(*args)


def test_gen_random_examples():
    a = gen_random(1, 3, 1, F(1, 2))
    assert a == gen_random(1, 3, 1, F(1, 2))
    assert gen_random(2, 1, 1, 1) == S((0, 1))


@given(st.integers(0, 10**6), st.integers(1, 8), st.sampled_from([F(1), F(2, 3), F(3, 2), F(5, 2)]),
       st.integers(1, 20))
def test_gen_random_contract(seed, count, scale, k):
    X = gen_random(seed, count, scale, F(k, 20))
    assert X == gen_random(seed, count, scale, F(k, 20))
    assert contains_point(X, 0) and contains_point(X, scale)
    assert X.inf == 0 and X.sup == scale
    assert len(X) <= count
    assert all(p.denominator <= 720 for iv in X.parts for p in iv)


def test_gen_random_denominator_env(monkeypatch):
    monkeypatch.setenv("SUMSETLAB_DENOM_LIMIT", "12")
    X = gen_random(5, 6, 1, F(1, 2))
    assert all(12 % p.denominator == 0 for iv in X.parts for p in iv)


def test_random_pair_is_deterministic():
    assert random_pair(42) == random_pair(42)
    assert random_pair(42) != random_pair(43)
