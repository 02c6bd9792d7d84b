"""Seeded sweeps of random pairs through every bound and structural check.

Each pair is prepared once (normalized sets, exact sumset, zones) and then
handed to the individual checkers, which return failure messages.  Results
are merged in seed order, so a sweep is reproducible from (count, seed).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

import numpy as np

from .bounds import crossing_bound, lower_bounds
from .density import ZonePartition, zone_partition
from .errors import PreconditionError
from .generators import random_pair
from .linear_sets import IntervalSet, measure, minkowski_sum, normalize_to_zero, restrict
from .oracle import gap_segments, grid_measure, grid_set, grid_sumset
from .structure import _freiman, _relaxed, lemma_mes_segments
from .torus import fold, modular_split

__all__ = ["PairCase", "prepare", "CHECKS", "SweepResult", "run_sweep", "pair_seed"]


@dataclass(frozen=True)
class PairCase:
    seed: int
    A: IntervalSet  # normalized to inf 0
    B: IntervalSet
    S: IntervalSet  # exact A+B
    swapped: bool  # True when B has the larger diameter
    zones: ZonePartition  # of the pair ordered by diameter

    @property
    def ordered(self) -> tuple[IntervalSet, IntervalSet]:
        return (self.B, self.A) if self.swapped else (self.A, self.B)

    @property
    def delta(self) -> Fraction:
        return self.zones.delta


def pair_seed(base: int, i: int) -> int:
    return base * 1_000_003 + i


def prepare(seed: int, max_parts: int = 6) -> PairCase:
    A, B = random_pair(seed, max_parts)
    A, B = normalize_to_zero(A), normalize_to_zero(B)
    swapped = B.diameter > A.diameter
    P, Q = (B, A) if swapped else (A, B)
    return PairCase(seed, A, B, minkowski_sum(A, B), swapped, zone_partition(P, Q))


def check_bounds(case: PairCase, stats: Counter) -> list[str]:
    rep = lower_bounds(case.A, case.B)
    out = [f"{name} bound violated" for name in rep.violations]
    rep2 = lower_bounds(case.B, case.A)
    stats["improved bound applicable"] += rep.get("improved") is not None
    out += [f"{name} bound violated (roles exchanged)" for name in rep2.violations]
    if case.delta > 0:
        P, Q = case.ordered
        cb = crossing_bound(P, Q, zones=case.zones)
        stats["crossing bound applicable"] += 1
        stats["crossing bound with m >= 1"] += cb.m >= 1
        if not cb.holds:
            out.append(f"crossing bound violated: {cb.lambda_sum} < {cb.value} (m={cb.m})")
    return out


def check_structure(case: PairCase, stats: Counter) -> list[str]:
    out = []
    P, Q = case.ordered
    for X, Y in ((case.A, case.B), (case.B, case.A)):
        rep = _freiman(X, Y, case.S, case.zones)
        stats["3k-4 hypotheses hold"] += rep.applies
        if rep.applies and not rep.ok:
            out += [f"3k-4 conclusion failed: {ch}" for ch in rep.checks if not ch.ok]
    for m in (0, 1, 2):
        try:
            rel = _relaxed(P, Q, case.S, case.zones, m)
        except PreconditionError:
            continue
        stats[f"relaxed m={m} applicable"] += 1
        out += [f"relaxed m={m}: {ch}" for ch in rel.checks if not ch.ok]
        for iv in rel.intervals:
            if measure(restrict(case.S, (iv.lo, iv.hi))) != iv.length:
                out.append(f"relaxed m={m}: ({iv.lo}, {iv.hi}) not inside A+B")
    return out


def check_lemma(case: PairCase, stats: Counter, q: int = 360) -> list[str]:
    A, B, S = case.A, case.B, case.S
    segs = gap_segments(S, (0, A.diameter + B.diameter), q)
    stats["gap points checked"] += sum(int((hi - lo) * q) + 1 for lo, hi in segs)
    if not segs:
        return []
    return [f"gap lemma fails at x={x}" for x in lemma_mes_segments(A, B, segs)]


def check_torus(case: PairCase, stats: Counter) -> list[str]:
    out = []
    for X, D in ((case.A, case.B.diameter), (case.B, case.A.diameter)):
        total = sum(fold(X, D).measures(), Fraction(0))
        if total != measure(X):
            out.append(f"fold mod {D}: layer measures sum to {total}, not {measure(X)}")
    P, Q = case.ordered
    split = modular_split(P, Q)
    stats["folds checked"] += 2
    if split.total != measure(case.S):
        out.append(f"modular split {split.total} != lambda(A+B) = {measure(case.S)}")
    return out


def check_oracle(case: PairCase, stats: Counter, qs=(10, 100)) -> list[str]:
    out = []
    S = case.S
    for q in qs:
        G, exact = grid_sumset(case.A, case.B, q), grid_set(S, q)
        # compare on a common index range; indices outside exact's range are non-members
        start = min(G.start, exact.start)
        stop = max(G.start + len(G.bits), exact.start + len(exact.bits))
        marked = np.zeros(stop - start, dtype=bool)
        member = np.zeros(stop - start, dtype=bool)
        marked[G.start - start:G.start - start + len(G.bits)] = G.bits
        member[exact.start - start:exact.start - start + len(exact.bits)] = exact.bits
        stray = marked & ~member
        if stray.any():
            bad = [Fraction(start + int(k), q) for k in np.flatnonzero(stray)[:3]]
            out.append(f"q={q}: grid sums outside A+B at {bad}")
        err = abs(grid_measure(exact) - measure(S))
        if err > Fraction(2 * len(S), q):
            out.append(f"q={q}: grid measure error {err} > 2*parts/q")
    return out


CHECKS: dict[str, Callable[[PairCase, Counter], list[str]]] = {
    "bounds": check_bounds,
    "structure": check_structure,
    "lemma": check_lemma,
    "torus": check_torus,
    "oracle": check_oracle,
}


@dataclass
class SweepResult:
    count: int
    base_seed: int
    checks: tuple[str, ...]
    failures: list[tuple[int, str, str]] = field(default_factory=list)  # (seed, check, message)
    stats: Counter = field(default_factory=Counter)  # how often each hypothesis applied

    @property
    def ok(self) -> bool:
        return not self.failures


def run_sweep(count: int, base_seed: int = 0, checks=tuple(CHECKS), cases=None) -> SweepResult:
    """Run the named checks over ``count`` seeded pairs (or the given prepared cases)."""
    res = SweepResult(count, base_seed, tuple(checks))
    if cases is None:
        cases = (prepare(pair_seed(base_seed, i)) for i in range(count))
    for case in cases:
        for name in checks:
            for msg in CHECKS[name](case, res.stats):
                res.failures.append((case.seed, name, msg))
    return res
