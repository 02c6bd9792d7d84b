"""Explicit extremal families and seeded random instances.

All constructors return exact :class:`IntervalSet` values and check the
identity their family is known for before returning.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass
from fractions import Fraction

from .linear_sets import IntervalSet, as_fraction, canonicalize, measure, minkowski_sum

__all__ = [
    "DEFAULT_DENOM",
    "denominator_limit",
    "gen_freiman_large",
    "AsymmetricPair",
    "gen_asymmetric",
    "small_extremal_template",
    "SmallExtremalPair",
    "gen_small_extremal",
    "gen_random",
    "random_pair",
]

DEFAULT_DENOM = 720


def denominator_limit() -> int:
    """Denominator cap for random endpoints; ``SUMSETLAB_DENOM_LIMIT`` overrides."""
    raw = os.environ.get("SUMSETLAB_DENOM_LIMIT")
    if raw:
        value = int(raw)
        if value < 1:
            raise ValueError("SUMSETLAB_DENOM_LIMIT must be a positive integer")
        return value
    return DEFAULT_DENOM


def gen_freiman_large(n: int, m: int, a1, a2) -> IntervalSet:
    """Symmetric large-density extremal set A ⊆ [0, 1] with λ(A+A) = 1 + λ(A).

    A is the union of the blocks [k·a1(1 - 1/n), k·a1] for k < n, the blocks
    [1 - k·a2, 1 - k·a2(1 - 1/m)] for k < m, and the middle interval
    [(n-1)a1, 1 - (m-1)a2].  Requires (n-1)a1 + (m-1)a2 < 1; the surplus
    δ = (1 - (n-1)a1 - (m-1)a2)/2 gives λ(A) = 1/2 + δ.
    """
    a1, a2 = as_fraction(a1), as_fraction(a2)
    if n < 1 or m < 1:
        raise ValueError("n and m must be positive integers")
    if a1 <= 0 or a2 <= 0:
        raise ValueError("a1 and a2 must be positive")
    used = (n - 1) * a1 + (m - 1) * a2
    if not used < 1:
        raise ValueError(f"constraint (n-1)a1 + (m-1)a2 < 1 violated: {used} >= 1")
    raw = [((n - 1) * a1, 1 - (m - 1) * a2)]
    for k in range(n):
        raw.append((k * a1 * (1 - Fraction(1, n)), k * a1))
    for k in range(m):
        raw.append((1 - k * a2, 1 - k * a2 * (1 - Fraction(1, m))))
    A = canonicalize(raw)
    delta = (1 - used) / 2
    lam = measure(A)
    if lam != Fraction(1, 2) + delta:
        raise ArithmeticError(f"family measure {lam} != 1/2 + δ = {Fraction(1, 2) + delta}")
    lam_sum = measure(minkowski_sum(A, A))
    if lam_sum != 1 + lam:
        raise ArithmeticError(f"λ(A+A) = {lam_sum} but 1 + λ(A) = {1 + lam}")
    return A


@dataclass(frozen=True)
class AsymmetricPair:
    A: IntervalSet
    B: IntervalSet
    lambda_sum: Fraction
    # value of n(2a - (n+1)ε); the sum stays below λ(A) + 2λ(B) exactly when it is < 1
    regime_product: Fraction
    strict_regime: bool

    def __iter__(self):
        # unpacks as the pair (A, B)
        return iter((self.A, self.B))


def gen_asymmetric(a, b, eps, n: int) -> AsymmetricPair:
    """Pair with λ(A+B) = D_B + λ(A) = 1 + λ(A) and no x²-type density cap for A at 0.

    A = {0} ∪ ⋃_{k=1..n} [ak - b - (k-1)ε, ak] ∪ [na, 1],
    B = ⋃_{k=0..n} [(a-ε)k, ak] ∪ [na, 1].

    Requires a/2 > b > ε > 0, 1 - na >= b, nε <= a - b and 1 - na >= a - ε;
    without the last one A+B can miss part of [na, 2].
    """
    a, b, eps = as_fraction(a), as_fraction(b), as_fraction(eps)
    if n < 1:
        raise ValueError("n must be a positive integer")
    if not (a / 2 > b > eps > 0):
        raise ValueError(f"constraint a/2 > b > ε > 0 violated (a={a}, b={b}, ε={eps})")
    if not 1 - n * a >= b:
        raise ValueError(f"constraint 1 - na >= b violated: {1 - n * a} < {b}")
    if not n * eps <= a - b:
        raise ValueError(f"constraint nε <= a - b violated: {n * eps} > {a - b}")
    # the translates [na, 1] + [(a-ε)k, ak] only chain into [na, 2] when this holds
    if not 1 - n * a >= a - eps:
        raise ValueError(f"constraint 1 - na >= a - ε violated: {1 - n * a} < {a - eps}")
    rawA = [(0, 0), (n * a, 1)]
    rawA += [(a * k - b - (k - 1) * eps, a * k) for k in range(1, n + 1)]
    rawB = [((a - eps) * k, a * k) for k in range(n + 1)] + [(n * a, 1)]
    A, B = canonicalize(rawA), canonicalize(rawB)
    lam_sum = measure(minkowski_sum(A, B))
    lamA, lamB = measure(A), measure(B)
    if lam_sum != 1 + lamA:
        raise ArithmeticError(f"λ(A+B) = {lam_sum} but 1 + λ(A) = {1 + lamA}")
    product = n * (2 * a - (n + 1) * eps)
    return AsymmetricPair(A, B, lam_sum, product, lam_sum < lamA + 2 * lamB)


def small_extremal_template(K: int, delta, b1, b2, DB) -> tuple[IntervalSet, IntervalSet]:
    """The K-block template (A', B') with B' = [0, b1] ∪ [D_B - b2, D_B].

    Block j of A' (j = 0..K-1) is [j(D_B - b2), j·D_B + δb + (K-1-j)b1].
    No validity checks; see :func:`gen_small_extremal`.
    """
    delta, b1, b2, DB = (as_fraction(v) for v in (delta, b1, b2, DB))
    b = b1 + b2
    A = canonicalize([(j * (DB - b2), j * DB + delta * b + (K - 1 - j) * b1) for j in range(K)])
    B = canonicalize([(0, b1), (DB - b2, DB)])
    return A, B


@dataclass(frozen=True)
class SmallExtremalPair:
    A: IntervalSet
    B: IntervalSet
    lambda_sum: Fraction
    # λ(A+B) < λ(A) + D_B: only then does the characterization theorem apply
    strict_regime: bool

    def __iter__(self):
        # unpacks as the pair (A, B)
        return iter((self.A, self.B))


def gen_small_extremal(K: int, delta, b1, b2, DB, strict: bool = False) -> SmallExtremalPair:
    """Build the template pair and confirm λ(A+B) = λ(A) + (K+δ)λ(B).

    With ``strict=True`` the pair must also satisfy λ(A+B) < λ(A) + D_B.
    """
    delta, b1, b2, DB = (as_fraction(v) for v in (delta, b1, b2, DB))
    if K < 1:
        raise ValueError("K must be a positive integer")
    if not 0 <= delta < 1:
        raise ValueError(f"δ must lie in [0, 1), got {delta}")
    if K == 1 and delta == 0:
        raise ValueError("K = 1 with δ = 0 makes A' a single point")
    if b1 < 0 or b2 < 0 or b1 + b2 <= 0:
        raise ValueError("need b1, b2 >= 0 and b1 + b2 > 0")
    if b1 + b2 > DB or (b1 + b2 == DB and b2 > 0 and b1 > 0):
        raise ValueError(f"B' = [0,{b1}] ∪ [{DB - b2},{DB}] is not a two-block set")
    b = b1 + b2
    for j in range(K - 1):
        end = j * DB + delta * b + (K - 1 - j) * b1
        nxt = (j + 1) * (DB - b2)
        if not end < nxt:
            raise ValueError(f"template blocks {j} and {j + 1} overlap: {end} >= {nxt}")
    A, B = small_extremal_template(K, delta, b1, b2, DB)
    lamA, lamB = measure(A), measure(B)
    lam_sum = measure(minkowski_sum(A, B))
    target = lamA + (K + delta) * lamB
    if lam_sum != target:
        raise ValueError(f"template sumset blocks overlap: λ(A+B) = {lam_sum} != {target}")
    strict_regime = lam_sum < lamA + DB
    if strict and not strict_regime:
        raise ValueError(
            f"strict regime violated: λ(A+B) = {lam_sum} >= λ(A) + D_B = {lamA + DB}"
        )
    return SmallExtremalPair(A, B, lam_sum, strict_regime)


def gen_random(seed: int, count: int, scale=1, density_hint=Fraction(1, 2),
               denom: int | None = None) -> IntervalSet:
    """Seeded random set of at most ``count`` intervals spanning exactly [0, scale].

    Endpoints lie on the grid scale·(i/N) with N = denom // den(scale), so
    every endpoint denominator is at most ``denom``.  ``density_hint`` is the target
    fraction of [0, scale] that is covered; 1 forces the whole interval.
    Interval lengths may be zero, so singletons appear naturally.
    """
    scale = as_fraction(scale)
    density_hint = as_fraction(density_hint)
    if count < 1:
        raise ValueError("count must be positive")
    if scale <= 0:
        raise ValueError("scale must be positive")
    if not 0 < density_hint <= 1:
        raise ValueError("density_hint must lie in (0, 1]")
    N = max(1, min(denom or denominator_limit(), denominator_limit()) // scale.denominator)
    rng = random.Random(seed)
    gap_total = round((1 - density_hint) * N)
    # a single interval containing 0 and scale is all of [0, scale]
    pieces = rng.randint(2, count) if count >= 2 and gap_total > 0 else 1
    n_gaps = min(pieces - 1, gap_total)
    if n_gaps == 0:
        gap_total = 0
    pieces = n_gaps + 1
    covered = N - gap_total
    gaps = _composition(rng, gap_total, n_gaps, minimum=1)
    lengths = _composition(rng, covered, pieces, minimum=0)
    raw = []
    pos = 0
    for i in range(pieces):
        raw.append((pos, pos + lengths[i]))
        pos += lengths[i]
        if i < n_gaps:
            pos += gaps[i]
    return canonicalize((scale * Fraction(lo, N), scale * Fraction(hi, N)) for lo, hi in raw)


def _composition(rng: random.Random, total: int, parts: int, minimum: int) -> list[int]:
    """Random split of ``total`` into ``parts`` integers, each >= ``minimum``."""
    if parts == 0:
        return []
    free = total - parts * minimum
    cuts = sorted(rng.randint(0, free) for _ in range(parts - 1))
    bounds = [0, *cuts, free]
    return [minimum + bounds[i + 1] - bounds[i] for i in range(parts)]


_SCALES = tuple(Fraction(p, q) for p, q in [(1, 1), (1, 2), (2, 3), (3, 4), (1, 1), (3, 2), (2, 1), (5, 2), (3, 1)])


def random_pair(seed: int, max_parts: int = 6, denom: int | None = None) -> tuple[IntervalSet, IntervalSet]:
    """Two random sets with independent scales and densities, deterministic in ``seed``.

    Scales come from a small list and densities from multiples of 1/20;
    endpoint denominators stay within the limit of :func:`gen_random`.
    """
    rng = random.Random(seed * 7919 + 17)
    out = []
    for _ in range(2):
        scale = rng.choice(_SCALES)
        density = Fraction(rng.randint(4, 20), 20)
        out.append(gen_random(rng.randrange(2**31), rng.randint(1, max_parts), scale, density, denom))
    return out[0], out[1]
