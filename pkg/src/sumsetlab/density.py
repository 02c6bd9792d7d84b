"""Cumulative density profiles and the zone picture on [0, D_A].

For sets A, B with inf = 0 and D_B <= D_A:

    g_A(x) = λ(A ∩ [0, x]),   g(x) = g_A(x) + g_B(x),
    h(x)   = g_A(x + D_A - D_B) + g_B(x).

Z1 = {g(x) <= x}, Z3 = {h(x) >= x + D_A - D_B + Δ}, Z2 is the rest of
[0, D_A], where Δ = λ(A) + λ(B) - D_A.  Points of Z3 are in A+B, points of
Z1 shifted by D_A are in A+B, and Z2 has both properties.  All zone sets are
exact: every profile is piecewise linear with rational breakpoints, so the
sign conditions are solved segment by segment.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .errors import PreconditionError
from .linear_sets import (
    EmptySetError,
    IntervalSet,
    as_fraction,
    canonicalize,
    difference,
    measure,
    union,
)

__all__ = [
    "PiecewiseLinear",
    "cumulative_profile",
    "summed_profile",
    "build_g_h",
    "Profiles",
    "ZonePartition",
    "Crossing",
    "zone_partition",
    "Run",
    "RunDecomposition",
    "run_decomposition",
]


class PiecewiseLinear:
    """Continuous piecewise-linear function given by its breakpoints.

    Outside ``[x_first, x_last]`` the function is held constant at the end
    values, which is the natural extension for cumulative profiles.
    """

    __slots__ = ("xs", "ys")

    def __init__(self, points: Iterable[tuple]):
        xs, ys = [], []
        for x, y in points:
            x, y = as_fraction(x), as_fraction(y)
            if xs and x == xs[-1]:
                if y != ys[-1]:
                    raise ValueError(f"discontinuity at x={x}")
                continue
            if xs and x < xs[-1]:
                raise ValueError("breakpoints must be increasing")
            xs.append(x)
            ys.append(y)
        if not xs:
            raise ValueError("need at least one breakpoint")
        self.xs: tuple[Fraction, ...] = tuple(xs)
        self.ys: tuple[Fraction, ...] = tuple(ys)

    @classmethod
    def _trusted(cls, xs, ys) -> "PiecewiseLinear":
        # xs strictly increasing Fractions, ys Fractions; no checks
        obj = cls.__new__(cls)
        obj.xs, obj.ys = tuple(xs), tuple(ys)
        return obj

    @property
    def breakpoints(self) -> list[tuple[Fraction, Fraction]]:
        return list(zip(self.xs, self.ys))

    @property
    def domain(self) -> tuple[Fraction, Fraction]:
        return self.xs[0], self.xs[-1]

    def __repr__(self) -> str:
        pts = ", ".join(f"({x}, {y})" for x, y in self.breakpoints)
        return f"PiecewiseLinear([{pts}])"

    def __eq__(self, other) -> bool:
        if not isinstance(other, PiecewiseLinear):
            return NotImplemented
        return self.simplified().breakpoints == other.simplified().breakpoints

    def __call__(self, x) -> Fraction:
        xs, ys = self.xs, self.ys
        if x <= xs[0]:
            return ys[0]
        if x >= xs[-1]:
            return ys[-1]
        i = bisect_right(xs, x) - 1
        if xs[i] == x:
            return ys[i]
        return ys[i] + (ys[i + 1] - ys[i]) * (x - xs[i]) / (xs[i + 1] - xs[i])

    def slopes(self) -> list[Fraction]:
        xs, ys = self.xs, self.ys
        return [(ys[i + 1] - ys[i]) / (xs[i + 1] - xs[i]) for i in range(len(xs) - 1)]

    def simplified(self) -> "PiecewiseLinear":
        """Drop breakpoints where the slope does not change."""
        if len(self.xs) <= 2:
            return self
        keep = [0]
        slopes = self.slopes()
        for i in range(1, len(self.xs) - 1):
            if slopes[i - 1] != slopes[i]:
                keep.append(i)
        keep.append(len(self.xs) - 1)
        return PiecewiseLinear._trusted([self.xs[i] for i in keep], [self.ys[i] for i in keep])

    def on(self, lo, hi) -> "PiecewiseLinear":
        """The same function with breakpoints restricted to [lo, hi]."""
        lo, hi = as_fraction(lo), as_fraction(hi)
        if lo > hi:
            raise ValueError("empty window")
        inner = [i for i, x in enumerate(self.xs) if lo < x < hi]
        xs = [lo] + [self.xs[i] for i in inner] + ([hi] if hi > lo else [])
        ys = [self(lo)] + [self.ys[i] for i in inner] + ([self(hi)] if hi > lo else [])
        return PiecewiseLinear._trusted(xs, ys)

    def shifted(self, t) -> "PiecewiseLinear":
        """x -> f(x + t)."""
        t = as_fraction(t)
        return PiecewiseLinear._trusted([x - t for x in self.xs], self.ys)

    def _values_on(self, grid: list[Fraction]) -> list[Fraction]:
        # evaluate at a sorted grid in one merged pass
        xs, ys = self.xs, self.ys
        out = []
        i, n = 0, len(xs)
        for x in grid:
            while i < n and xs[i] < x:
                i += 1
            if i == n:
                out.append(ys[-1])
            elif xs[i] == x or i == 0:
                out.append(ys[i])
            else:
                x0, y0 = xs[i - 1], ys[i - 1]
                out.append(y0 + (ys[i] - y0) * (x - x0) / (xs[i] - x0))
        return out

    def _combine(self, other: "PiecewiseLinear", op) -> "PiecewiseLinear":
        grid = sorted({*self.xs, *other.xs})
        return PiecewiseLinear._trusted(
            grid, [op(a, b) for a, b in zip(self._values_on(grid), other._values_on(grid))]
        )

    def __add__(self, other: "PiecewiseLinear") -> "PiecewiseLinear":
        return self._combine(other, lambda a, b: a + b)

    def __sub__(self, other: "PiecewiseLinear") -> "PiecewiseLinear":
        return self._combine(other, lambda a, b: a - b)

    def minus_line(self, slope, intercept) -> "PiecewiseLinear":
        """x -> f(x) - (slope * x + intercept) on the same breakpoints."""
        slope, intercept = as_fraction(slope), as_fraction(intercept)
        return PiecewiseLinear._trusted(
            self.xs, [y - slope * x - intercept for x, y in zip(self.xs, self.ys)]
        )

    def is_nondecreasing(self) -> bool:
        return all(a <= b for a, b in zip(self.ys, self.ys[1:]))

    def lipschitz_constant(self) -> Fraction:
        return max((abs(s) for s in self.slopes()), default=Fraction(0))

    def sublevel(self, c=0) -> IntervalSet:
        """Closed set {x in domain : f(x) <= c}."""
        return self._level(as_fraction(c), below=True)

    def superlevel(self, c=0) -> IntervalSet:
        """Closed set {x in domain : f(x) >= c}."""
        return self._level(as_fraction(c), below=False)

    def _level(self, c: Fraction, below: bool) -> IntervalSet:
        xs = self.xs
        vals = [y - c if below else c - y for y in self.ys]
        raw = []
        if len(xs) == 1:
            return canonicalize([(xs[0], xs[0])] if vals[0] <= 0 else [])
        for i in range(len(xs) - 1):
            x0, x1, v0, v1 = xs[i], xs[i + 1], vals[i], vals[i + 1]
            if v0 <= 0 and v1 <= 0:
                raw.append((x0, x1))
            elif v0 <= 0 < v1:
                raw.append((x0, x0 + (x1 - x0) * (-v0) / (v1 - v0)))
            elif v1 <= 0 < v0:
                raw.append((x0 + (x1 - x0) * v0 / (v0 - v1), x1))
        return canonicalize(raw)

    def last_at_most(self, c=0):
        """sup{x : f(x) <= c} inside the domain, or None if the set is empty."""
        S = self.sublevel(c)
        return S.sup if S else None

    def to_json(self) -> list[list[str]]:
        return [[str(x), str(y)] for x, y in zip(self.xs, self.ys)]


def cumulative_profile(S: IntervalSet, upto=None) -> PiecewiseLinear:
    """x -> λ(S ∩ [0, x]) on [0, upto] (upto defaults to sup S)."""
    if S and S.inf < 0:
        raise ValueError("cumulative profile needs S inside [0, +inf)")
    if upto is None:
        upto = S.sup if S else Fraction(0)
    upto = as_fraction(upto)
    pts = [(Fraction(0), Fraction(0))]
    acc = Fraction(0)
    for lo, hi in S.parts:
        if lo >= upto:
            break
        if lo > pts[-1][0]:
            pts.append((lo, acc))
        top = min(hi, upto)
        acc += top - lo
        pts.append((top, acc))
    if pts[-1][0] < upto:
        pts.append((upto, acc))
    return PiecewiseLinear(pts)


def summed_profile(terms: Iterable[tuple[IntervalSet, Fraction]], lo, hi) -> PiecewiseLinear:
    """x -> Σ λ(S ∩ [0, x + t]) over the (S, t) terms, on [lo, hi].

    Built by one sweep over the shifted endpoints, so only additions are
    needed.  Each S must lie in [0, +inf).
    """
    lo, hi = as_fraction(lo), as_fraction(hi)
    events: list[tuple[Fraction, int]] = []
    y = Fraction(0)
    slope = 0
    for S, t in terms:
        for a, b in S.parts:
            a, b = a - t, b - t
            if b <= lo:
                y += b - a
            elif a < lo:
                y += lo - a
                slope += 1
                events.append((b, -1))
            else:
                events.append((a, 1))
                events.append((b, -1))
    events.sort()
    xs, ys = [lo], [y]
    x = lo
    for ex, ds in events:
        if ex >= hi:
            break
        if ex > x:
            y += slope * (ex - x)
            x = ex
            xs.append(x)
            ys.append(y)
        slope += ds
    if hi > x:
        xs.append(hi)
        ys.append(y + slope * (hi - x))
    return PiecewiseLinear._trusted(xs, ys)


@dataclass(frozen=True)
class Profiles:
    """g_A, g_B, g and h on [0, D_A], plus the scalars they depend on."""

    gA: PiecewiseLinear
    gB: PiecewiseLinear
    g: PiecewiseLinear
    h: PiecewiseLinear
    DA: Fraction
    DB: Fraction
    lamA: Fraction
    lamB: Fraction

    @property
    def delta(self) -> Fraction:
        return self.lamA + self.lamB - self.DA

    @property
    def offset(self) -> Fraction:
        return self.DA - self.DB


def _check_normalized(A: IntervalSet, B: IntervalSet):
    if not A or not B:
        raise EmptySetError("profiles need nonempty sets")
    if A.inf != 0 or B.inf != 0:
        raise PreconditionError("sets must be normalized to inf = 0")
    if B.diameter > A.diameter:
        raise PreconditionError("need diam(B) <= diam(A)", slack=A.diameter - B.diameter)


def build_g_h(A: IntervalSet, B: IntervalSet) -> Profiles:
    """g on [0, D_A] and h on [0, D_A]; beyond D_A the profile of A is held at λ(A)."""
    _check_normalized(A, B)
    DA, DB = A.diameter, B.diameter
    gA = cumulative_profile(A, DA)
    gB = cumulative_profile(B, DA)
    g = summed_profile([(A, Fraction(0)), (B, Fraction(0))], 0, DA)
    h = summed_profile([(A, DA - DB), (B, Fraction(0))], 0, DA)
    return Profiles(gA, gB, g, h, DA, DB, measure(A), measure(B))


@dataclass(frozen=True)
class Crossing:
    kind: str  # "up" (Z1 -> Z3) or "down" (Z3 -> Z1)
    lo: Fraction  # last point of the run being left
    hi: Fraction  # first point of the run being entered

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo


@dataclass(frozen=True)
class ZonePartition:
    Z1: IntervalSet
    Z2: IntervalSet
    Z3: IntervalSet
    delta: Fraction
    crossings: tuple[Crossing, ...]
    runs: tuple[tuple[int, Fraction, Fraction], ...]
    profiles: Profiles

    @property
    def down_count(self) -> int:
        return sum(1 for c in self.crossings if c.kind == "down")

    @property
    def up_count(self) -> int:
        return sum(1 for c in self.crossings if c.kind == "up")

    @property
    def DA(self) -> Fraction:
        return self.profiles.DA

    @property
    def DB(self) -> Fraction:
        return self.profiles.DB

    def summary(self) -> dict:
        return {
            "Z1": measure(self.Z1),
            "Z2": measure(self.Z2),
            "Z3": measure(self.Z3),
            "delta": self.delta,
            "m": self.down_count,
        }


def zone_partition(A: IntervalSet, B: IntervalSet) -> ZonePartition:
    """Exact zones Z1, Z2, Z3 of [0, D_A] and the crossings between them.

    Z1 wins ties: when Δ <= 0 the two sign conditions can overlap and the
    overlap is kept in Z1 only, so the three zones always meet in boundary
    points alone.
    """
    prof = build_g_h(A, B)
    DA, delta, off = prof.DA, prof.delta, prof.offset
    Z1 = prof.g.minus_line(1, 0).sublevel(0)
    Z3 = prof.h.minus_line(1, off + delta).superlevel(0)
    Z3 = difference(Z3, Z1)
    whole = IntervalSet([(Fraction(0), DA)])
    Z2 = difference(whole, union(Z1, Z3))

    labelled = sorted([(lo, hi, 1) for lo, hi in Z1.parts] + [(lo, hi, 3) for lo, hi in Z3.parts])
    runs: list[list] = []
    for lo, hi, lab in labelled:
        if runs and runs[-1][0] == lab:
            runs[-1][2] = max(runs[-1][2], hi)
        else:
            runs.append([lab, lo, hi])
    crossings = []
    for (lab0, _, end0), (lab1, start1, _) in zip(runs, runs[1:]):
        crossings.append(Crossing("up" if lab0 == 1 else "down", end0, start1))
    return ZonePartition(
        Z1, Z2, Z3, delta, tuple(crossings), tuple((r[0], r[1], r[2]) for r in runs), prof
    )


@dataclass(frozen=True)
class Run:
    label: str  # "I1", "I2", "I3" or "J"
    index: int
    lo: Fraction
    hi: Fraction
    closed: bool  # crossing runs (I2, J) are open intervals

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    @property
    def name(self) -> str:
        if self.label == "J":
            return f"J_{self.index}"
        return f"I_{self.index}^({self.label[1]})"


@dataclass(frozen=True)
class RunDecomposition:
    runs: tuple[Run, ...]
    m: int
    delta: Fraction
    DA: Fraction
    DB: Fraction

    def by_label(self, label: str) -> list[Run]:
        return [r for r in self.runs if r.label == label]

    def get(self, label: str, index: int) -> Run:
        for r in self.runs:
            if r.label == label and r.index == index:
                return r
        raise KeyError((label, index))

    def sumset_intervals(self) -> list[tuple[Fraction, Fraction]]:
        """The 2m+1 intervals of A+B assembled from consecutive runs.

        For k = 1..m: I_{k-1}^(2) ∪ I_{k-1}^(3) ∪ J_k; then
        I_m^(2) ∪ I_m^(3) ∪ (D_A + I_0^(1)) ∪ (D_A + I_0^(2)); then
        D_A + (J_k ∪ I_k^(1) ∪ I_k^(2)) for k = 1..m.  Each is returned as
        (lo, hi) of an open interval.
        """
        m, DA = self.m, self.DA
        out = []
        for k in range(1, m + 1):
            out.append((self.get("I2", k - 1).lo, self.get("J", k).hi))
        out.append((self.get("I2", m).lo, DA + self.get("I2", 0).hi))
        for k in range(1, m + 1):
            out.append((DA + self.get("J", k).lo, DA + self.get("I2", k).hi))
        return out


def run_decomposition(zp: ZonePartition) -> RunDecomposition:
    """The 4m+3 consecutive intervals covering [0, D_A] (requires Δ > 0)."""
    if zp.delta <= 0:
        raise PreconditionError("run decomposition needs Δ > 0", slack=zp.delta)
    runs = zp.runs
    if not runs or runs[0][0] != 1 or runs[-1][0] != 3 or len(runs) % 2:
        raise AssertionError(f"unexpected zone run pattern {[r[0] for r in runs]}")
    m = len(runs) // 2 - 1
    out: list[Run] = []
    for k in range(m + 1):
        _, s1, e1 = runs[2 * k]
        _, s3, e3 = runs[2 * k + 1]
        if k > 0:
            prev_e3 = runs[2 * k - 1][2]
            out.append(Run("J", k, prev_e3, s1, False))
        out.append(Run("I1", k, Fraction(0) if k == 0 else s1, e1, True))
        out.append(Run("I2", k, e1, s3, False))
        out.append(Run("I3", k, s3, zp.DA if k == m else e3, True))
    return RunDecomposition(tuple(out), m, zp.delta, zp.DA, zp.DB)
