"""Grid sampling used to cross-check the exact computations.

A :class:`GridSet` marks the points i/q that belong to a set, decided by
exact rational comparison.  Marked points are always true members, so a
disagreement with the exact algorithms is a real bug and never a rounding
artifact.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .linear_sets import Interval, IntervalSet, as_fraction

__all__ = ["GridSet", "grid_set", "grid_sumset", "grid_measure", "gap_runs", "gap_points", "gap_segments"]


@dataclass(frozen=True)
class GridSet:
    """Membership of the points (start + k)/q, k = 0..len(bits)-1."""

    q: int
    start: int
    bits: np.ndarray

    def points(self) -> list[Fraction]:
        return [Fraction(self.start + int(k), self.q) for k in np.flatnonzero(self.bits)]

    def __len__(self) -> int:
        return int(self.bits.sum())


def _empty(q: int) -> GridSet:
    return GridSet(q, 0, np.zeros(0, dtype=bool))


def grid_set(S: IntervalSet, q: int) -> GridSet:
    """Mark every grid point i/q lying in S."""
    if q < 1:
        raise ValueError("q must be a positive integer")
    if not S:
        return _empty(q)
    start = math.floor(S.inf * q)
    stop = math.ceil(S.sup * q)
    bits = np.zeros(stop - start + 1, dtype=bool)
    for lo, hi in S.parts:
        i0, i1 = math.ceil(lo * q), math.floor(hi * q)
        if i0 <= i1:
            bits[i0 - start:i1 - start + 1] = True
    bits.flags.writeable = False
    return GridSet(q, start, bits)


def grid_sumset(A: IntervalSet, B: IntervalSet, q: int) -> GridSet:
    """All sums of marked grid points of A and of B (an integer convolution)."""
    GA, GB = grid_set(A, q), grid_set(B, q)
    if not GA.bits.any() or not GB.bits.any():
        return _empty(q)
    conv = np.convolve(GA.bits.astype(np.int64), GB.bits.astype(np.int64))
    bits = conv > 0
    bits.flags.writeable = False
    return GridSet(q, GA.start + GB.start, bits)


def grid_measure(G: GridSet) -> Fraction:
    """(number of cells [i/q, (i+1)/q] with both ends marked) / q."""
    if len(G.bits) < 2:
        return Fraction(0)
    cells = int(np.count_nonzero(G.bits[:-1] & G.bits[1:]))
    return Fraction(cells, G.q)


def _window(window) -> tuple[Fraction, Fraction]:
    if isinstance(window, Interval):
        return window.lo, window.hi
    lo, hi = window
    return as_fraction(lo), as_fraction(hi)


def gap_runs(S: IntervalSet, window, q: int) -> list[tuple[int, int]]:
    """Maximal runs i0..i1 of grid indices in the window whose points i/q are not in S."""
    if q < 1:
        raise ValueError("q must be a positive integer")
    lo, hi = _window(window)
    i_lo, i_hi = math.ceil(lo * q), math.floor(hi * q)
    if i_lo > i_hi:
        return []
    outside = np.ones(i_hi - i_lo + 1, dtype=bool)
    for a, b in S.parts:
        j0, j1 = max(math.ceil(a * q), i_lo), min(math.floor(b * q), i_hi)
        if j0 <= j1:
            outside[j0 - i_lo:j1 - i_lo + 1] = False
    edges = np.diff(np.concatenate(([0], outside.astype(np.int8), [0])))
    starts = np.flatnonzero(edges == 1)
    stops = np.flatnonzero(edges == -1) - 1
    return [(i_lo + int(a), i_lo + int(b)) for a, b in zip(starts, stops)]


def gap_points(S: IntervalSet, window, q: int) -> list[Fraction]:
    """Grid points i/q in the closed window that are not in S (exact test)."""
    return [Fraction(i, q) for i0, i1 in gap_runs(S, window, q) for i in range(i0, i1 + 1)]


def gap_segments(S: IntervalSet, window, q: int) -> list[tuple[Fraction, Fraction]]:
    """Grid gap points grouped by the gap of S they lie in, as (first, last) pairs.

    Flattening the segments back to their grid points gives exactly
    :func:`gap_points`.
    """
    if q < 1:
        raise ValueError("q must be a positive integer")
    lo, hi = _window(window)
    i_lo, i_hi = math.ceil(lo * q), math.floor(hi * q)
    if i_lo > i_hi:
        return []
    if not S:
        return [(Fraction(i_lo, q), Fraction(i_hi, q))]
    # index ranges strictly between consecutive parts, plus the two unbounded sides
    bounds = [(None, S.inf)] + S.gaps() + [(S.sup, None)]
    out = []
    for g_lo, g_hi in bounds:
        a = i_lo if g_lo is None else max(i_lo, math.floor(g_lo * q) + 1)
        b = i_hi if g_hi is None else min(i_hi, math.ceil(g_hi * q) - 1)
        if a <= b:
            out.append((Fraction(a, q), Fraction(b, q)))
    return out
