"""Lower bounds on λ(A+B) in terms of measures and diameters.

The ratio λ(A)/λ(B) is written uniquely as K(K-1)/2 + K·δ with K >= 1 and
0 <= δ < 1.  With f(k) = (k+1)/k·λ(A) + (k+1)/2·λ(B), f is minimized at
k = K where f(K) = λ(A) + (K+δ)λ(B).  Several of the bounds are
disjunctions ("λ(A+B) >= λ(A) + D_B, or λ(A+B) >= f(k)"); such a bound is
guaranteed only at the smaller of its two sides, and the report records which
side the instance actually satisfies.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction

from .errors import PreconditionError
from .linear_sets import IntervalSet, as_fraction, measure, minkowski_sum, normalize_to_zero
from .density import zone_partition
from .torus import fold

__all__ = [
    "RuzsaParams",
    "ruzsa_params",
    "f_of_k",
    "Bound",
    "BoundReport",
    "lower_bounds",
    "DiamImplication",
    "diam_bound_implications",
    "CrossingBound",
    "crossing_bound",
]


@dataclass(frozen=True)
class RuzsaParams:
    K: int
    delta: Fraction
    ratio: Fraction

    @property
    def K_plus_delta(self) -> Fraction:
        return self.K + self.delta


def ruzsa_params(lamA, lamB) -> RuzsaParams:
    """Solve λ(A)/λ(B) = K(K-1)/2 + Kδ exactly."""
    lamA, lamB = as_fraction(lamA), as_fraction(lamB)
    if lamA <= 0 or lamB <= 0:
        raise ValueError("measures must be positive")
    r = lamA / lamB
    # largest K with K(K-1)/2 <= r; start from the integer square root estimate
    K = max(1, (1 + math.isqrt(1 + 8 * math.floor(r))) // 2)
    while K * (K - 1) / Fraction(2) > r:
        K -= 1
    while (K + 1) * K / Fraction(2) <= r:
        K += 1
    delta = (r - Fraction(K * (K - 1), 2)) / K
    return RuzsaParams(K, delta, r)


def f_of_k(k: int, lamA, lamB) -> Fraction:
    if k < 1:
        raise ValueError("k must be a positive integer")
    lamA, lamB = as_fraction(lamA), as_fraction(lamB)
    return Fraction(k + 1, k) * lamA + Fraction(k + 1, 2) * lamB


@dataclass(frozen=True)
class Bound:
    """One lower bound.  ``value`` is what the theory guarantees for this instance.

    For a disjunction, ``main`` is the non-diameter side, ``alternative`` is
    λ(A) + D_B, ``value`` is their minimum, and ``holds`` names the side that
    λ(A+B) actually satisfies ("main", "alternative", or None on violation).
    """

    name: str
    value: Fraction
    main: Fraction
    alternative: Fraction | None = None
    holds: str | None = "main"

    @property
    def disjunctive(self) -> bool:
        return self.alternative is not None


@dataclass(frozen=True)
class BoundReport:
    lamA: Fraction
    lamB: Fraction
    DA: Fraction
    DB: Fraction
    lambda_sum: Fraction
    params: RuzsaParams
    K_A: int
    K_A_positive: int
    bounds: tuple[Bound, ...]
    binding: str
    slack: Fraction
    violations: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return not self.violations

    def get(self, name: str) -> Bound | None:
        for b in self.bounds:
            if b.name == name:
                return b
        return None


def _disjunct(name: str, main: Fraction, alt: Fraction, lam_sum: Fraction) -> Bound:
    if lam_sum >= main:
        holds = "main"
    elif lam_sum >= alt:
        holds = "alternative"
    else:
        holds = None
    return Bound(name, min(main, alt), main, alt, holds)


def lower_bounds(A: IntervalSet, B: IntervalSet) -> BoundReport:
    """Every lower bound on λ(A+B) the theory provides, checked against the exact value."""
    lamA, lamB = measure(A), measure(B)
    if lamA <= 0 or lamB <= 0:
        raise PreconditionError("lower bounds need positive measures")
    A0, B0 = normalize_to_zero(A), normalize_to_zero(B)
    DA, DB = A0.diameter, B0.diameter
    lam_sum = measure(minkowski_sum(A0, B0))
    p = ruzsa_params(lamA, lamB)
    layers = fold(A0, DB)
    K_A, K_A_pos = layers.max_point, layers.max_positive
    alt = lamA + DB

    bounds = [Bound("superadditive", lamA + lamB, lamA + lamB)]
    bounds.append(_disjunct("ruzsa_min", lamA + p.K_plus_delta * lamB, alt, lam_sum))
    ceil_ratio = math.ceil(DA / DB)
    if DA / DB <= p.K:
        bounds.append(_disjunct("improved", f_of_k(ceil_ratio, lamA, lamB), alt, lam_sum))
    bounds.append(_disjunct("fk_at_KA", f_of_k(K_A, lamA, lamB), alt, lam_sum))

    violations = tuple(b.name for b in bounds if lam_sum < b.value)
    binding = max(bounds, key=lambda b: b.value)  # first maximal entry wins ties
    return BoundReport(
        lamA, lamB, DA, DB, lam_sum, p, K_A, K_A_pos, tuple(bounds),
        binding.name, lam_sum - binding.value, violations,
    )


@dataclass(frozen=True)
class DiamImplication:
    hyp_ruzsa: bool  # λ(A+B) < λ(A) + (K+δ)λ(B)
    hyp_improved: bool  # D_A/D_B <= K and λ(A+B) < f(ceil(D_A/D_B))
    applies: bool
    diam_B: Fraction
    bound: Fraction  # λ(A+B) - λ(A)
    holds: bool | None  # None when neither hypothesis holds


def diam_bound_implications(A: IntervalSet, B: IntervalSet) -> DiamImplication:
    """If the sum is below either Ruzsa-type bound, diam(B) <= λ(A+B) - λ(A)."""
    lamA, lamB = measure(A), measure(B)
    if lamA <= 0 or lamB <= 0:
        raise PreconditionError("needs positive measures")
    DA, DB = A.diameter, B.diameter
    lam_sum = measure(minkowski_sum(A, B))
    p = ruzsa_params(lamA, lamB)
    hyp1 = lam_sum < lamA + p.K_plus_delta * lamB
    hyp2 = DA / DB <= p.K and lam_sum < f_of_k(math.ceil(DA / DB), lamA, lamB)
    applies = hyp1 or hyp2
    bound = lam_sum - lamA
    return DiamImplication(hyp1, hyp2, applies, DB, bound, (DB <= bound) if applies else None)


@dataclass(frozen=True)
class CrossingBound:
    m: int  # down crossings of the zone picture
    value: Fraction  # λ(B) + D_A + m(Δ + D_A - D_B)
    lambda_sum: Fraction

    @property
    def holds(self) -> bool:
        return self.lambda_sum >= self.value


def crossing_bound(A: IntervalSet, B: IntervalSet, zones=None) -> CrossingBound:
    """λ(A+B) >= λ(B) + D_A + m(Δ + D_A - D_B), m the number of down crossings.

    The sets are ordered so that diam(B) <= diam(A); requires Δ > 0.
    """
    A0, B0 = normalize_to_zero(A), normalize_to_zero(B)
    if B0.diameter > A0.diameter:
        A0, B0 = B0, A0
    lamA, lamB = measure(A0), measure(B0)
    DA, DB = A0.diameter, B0.diameter
    delta = lamA + lamB - DA
    if delta <= 0:
        raise PreconditionError("crossing bound needs Delta > 0", slack=delta)
    zp = zones if zones is not None else zone_partition(A0, B0)
    m = zp.down_count
    lam_sum = measure(minkowski_sum(A0, B0))
    return CrossingBound(m, lamB + DA + m * (delta + DA - DB), lam_sum)
