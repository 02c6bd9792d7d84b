"""Reduction of line sets modulo a period.

A set S with inf(S) = 0 folded modulo D gives multiplicity layers

    layer_k = {x in [0, D) : #{n >= 0 : x + nD in S} >= k},

whose measures add up to the measure of S.  Layers are stored as closures
(:class:`IntervalSet` parts inside [0, D]); multiplicities are tracked
pointwise so that measure-zero witnesses, such as the residue 0 of [0, D],
still count.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from .errors import PreconditionError
from .linear_sets import (
    EmptySetError,
    IntervalSet,
    as_fraction,
    canonicalize,
    contains_point,
    intersect,
    measure,
    minkowski_sum,
    restrict,
    translate,
)

__all__ = [
    "TorusSet",
    "TorusLayers",
    "fold",
    "max_multiplicity",
    "max_multiplicity_positive",
    "torus_sum",
    "modular_split",
    "ModularSplit",
]


def _residue_pieces(S: IntervalSet, D: Fraction) -> list[tuple[Fraction, Fraction]]:
    """Cut S at multiples of D and shift each piece into [0, D].

    A piece ending exactly at D stands for the half-open [a, D); the point
    (j+1)D itself shows up as the degenerate piece [0, 0] of the next block.
    """
    pieces = []
    for lo, hi in S.parts:
        j = math.floor(lo / D)
        last = math.floor(hi / D)
        while j <= last:
            base = j * D
            pieces.append((max(lo, base) - base, min(hi, base + D) - base))
            j += 1
    return pieces


def _normalize_wrap(parts: IntervalSet, D: Fraction) -> IntervalSet:
    """Identify 0 with D: the circle contains one iff it contains the other."""
    if not parts:
        return parts
    if parts.parts[0] == (Fraction(0), D):
        return parts
    has0 = parts.parts[0][0] == 0
    hasD = parts.parts[-1][1] == D
    if has0 == hasD:
        return parts
    return canonicalize(list(parts.parts) + [(Fraction(0), Fraction(0)), (D, D)])


@dataclass(frozen=True)
class TorusSet:
    """Closed subset of the circle R/DZ, stored inside [0, D] with D identified with 0."""

    period: Fraction
    parts: IntervalSet

    @classmethod
    def from_line(cls, S: IntervalSet, period) -> "TorusSet":
        D = as_fraction(period)
        if D <= 0:
            raise ValueError("period must be positive")
        return cls(D, _normalize_wrap(canonicalize(_residue_pieces(S, D)), D))

    @property
    def measure(self) -> Fraction:
        return measure(self.parts)

    @property
    def is_full(self) -> bool:
        return self.measure == self.period

    def __contains__(self, x) -> bool:
        x = as_fraction(x) % self.period
        return contains_point(self.parts, x)


@dataclass(frozen=True)
class TorusLayers:
    period: Fraction
    layers: tuple[tuple[int, IntervalSet], ...]
    max_point: int
    max_positive: int

    def layer(self, k: int) -> IntervalSet:
        if 1 <= k <= len(self.layers):
            return self.layers[k - 1][1]
        return IntervalSet.empty()

    def measures(self) -> list[Fraction]:
        return [measure(L) for _, L in self.layers]


def fold(S: IntervalSet, D) -> TorusLayers:
    """Multiplicity layers of S modulo D (S must start at 0)."""
    D = as_fraction(D)
    if D <= 0:
        raise ValueError("period must be positive")
    if not S:
        raise EmptySetError("cannot fold the empty set")
    if S.inf != 0:
        raise ValueError(f"fold needs inf(S) = 0, got {S.inf}")
    pieces = _residue_pieces(S, D)
    starts = sorted(a for a, _ in pieces)
    ends = sorted(b for _, b in pieces)
    cuts = sorted({Fraction(0), D, *starts, *ends})

    point_counts = []
    for p in cuts[:-1]:
        point_counts.append((p, bisect_right(starts, p) - bisect_left(ends, p)))
    seg_counts = []
    for p, q in zip(cuts, cuts[1:]):
        seg_counts.append((p, q, bisect_right(starts, p) - bisect_right(ends, p)))

    max_point = max(c for _, c in point_counts)
    max_positive = max((c for _, _, c in seg_counts), default=0)
    layers = []
    for k in range(1, max_point + 1):
        raw = [(p, q) for p, q, c in seg_counts if c >= k]
        raw += [(p, p) for p, c in point_counts if c >= k]
        layers.append((k, canonicalize(raw)))
    return TorusLayers(D, tuple(layers), max_point, max_positive)


def max_multiplicity(S: IntervalSet, D) -> int:
    """Largest k such that some residue x in [0, D) is hit k times by S."""
    return fold(S, D).max_point


def max_multiplicity_positive(S: IntervalSet, D) -> int:
    """Like :func:`max_multiplicity` but the witness residues must have positive measure."""
    return fold(S, D).max_positive


def torus_sum(X: TorusSet, Y: TorusSet) -> TorusSet:
    if X.period != Y.period:
        raise ValueError(f"period mismatch: {X.period} vs {Y.period}")
    if not X.parts or not Y.parts:
        return TorusSet(X.period, IntervalSet.empty())
    return TorusSet.from_line(minkowski_sum(X.parts, Y.parts), X.period)


class ModularSplit(NamedTuple):
    mu_image: Fraction
    mu_double: Fraction

    @property
    def total(self) -> Fraction:
        return self.mu_image + self.mu_double


def modular_split(A: IntervalSet, B: IntervalSet) -> ModularSplit:
    """Split λ(A+B) into the measure of A+B mod D_A and the doubly covered part.

    With inf A = inf B = 0 and D_B <= D_A, A+B lies in [0, 2 D_A], so
    λ(A+B) = μ(A+B mod D_A) + μ{x in [0, D_A] : x, x + D_A in A+B}.
    """
    if not A or not B:
        raise EmptySetError("modular_split needs nonempty sets")
    if A.inf != 0 or B.inf != 0:
        raise PreconditionError("modular_split needs inf(A) = inf(B) = 0")
    DA, DB = A.diameter, B.diameter
    if DA <= 0:
        raise PreconditionError("modular_split needs diam(A) > 0")
    if DB > DA:
        raise PreconditionError("modular_split needs diam(B) <= diam(A)", slack=DA - DB)
    S = minkowski_sum(A, B)
    image = TorusSet.from_line(S, DA).measure
    double = measure(intersect(restrict(S, (0, DA)), translate(S, -DA)))
    return ModularSplit(image, double)
