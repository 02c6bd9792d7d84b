"""Structural conclusions about A+B: the guaranteed interval, the relaxed
multi-interval statement, and the two kinds of extremal configurations.

Every verifier returns a report whose ``checks`` list carries each asserted
inequality with its exact sides, so a failed check is a concrete reproducer.
"""

from __future__ import annotations

from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .bounds import ruzsa_params
from .density import (
    PiecewiseLinear,
    ZonePartition,
    cumulative_profile,
    run_decomposition,
    zone_partition,
)
from .errors import PreconditionError
from .generators import small_extremal_template
from .linear_sets import (
    EmptySetError,
    Interval,
    IntervalSet,
    as_fraction,
    contains_point,
    intersect,
    measure,
    minkowski_sum,
    normalize_to_zero,
    reflect,
    restrict,
    symmetric_difference_measure,
    translate,
    union,
)

__all__ = [
    "Check",
    "FreimanReport",
    "freiman_verify",
    "interval_endpoints",
    "LemmaMesResult",
    "lemma_mes_check",
    "lemma_mes_scan",
    "lemma_mes_segments",
    "RelaxedReport",
    "relaxed_verify",
    "ExtremalDecomposition",
    "extremal_large_decompose",
    "first_half_density_point",
    "cap_holds",
    "SmallExtremalShape",
    "Recognition",
    "small_extremal_recognize",
]


@dataclass(frozen=True)
class Check:
    name: str
    ok: bool
    lhs: object
    relation: str
    rhs: object

    def __str__(self) -> str:
        mark = "ok" if self.ok else "FAILED"
        return f"{self.name}: {self.lhs} {self.relation} {self.rhs} [{mark}]"


def _le(name, lhs, rhs) -> Check:
    return Check(name, lhs <= rhs, lhs, "<=", rhs)


def _ge(name, lhs, rhs) -> Check:
    return Check(name, lhs >= rhs, lhs, ">=", rhs)


def _eq(name, lhs, rhs) -> Check:
    return Check(name, lhs == rhs, lhs, "==", rhs)


def _zero(name, value) -> Check:
    return Check(name, value == 0, value, "==", Fraction(0))


def _nonempty_positive(A: IntervalSet, B: IntervalSet):
    if not A or not B:
        raise EmptySetError("inputs must be nonempty")
    if measure(A) <= 0 or measure(B) <= 0:
        raise PreconditionError("inputs must have positive measure")


# --- the guaranteed interval ------------------------------------------------


def interval_endpoints(S: IntervalSet, DA: Fraction, DB: Fraction) -> tuple[Fraction, Fraction]:
    """e = sup of non-members in [0, D_A] and c = inf of non-members in [D_A, D_A + D_B].

    S is a sumset with inf 0 and sup D_A + D_B.  With no non-member, e = 0
    and c = D_A + D_B.
    """
    e, c = Fraction(0), DA + DB
    for lo, hi in S.gaps():
        if lo < DA:
            e = max(e, min(hi, DA))
        if hi > DA:
            c = min(c, max(lo, DA))
    return e, c


@dataclass(frozen=True)
class FreimanReport:
    hyp_i: bool
    hyp_ii: bool
    lamA: Fraction
    lamB: Fraction
    DA: Fraction
    DB: Fraction
    lambda_sum: Fraction
    swapped: bool  # True when B has the larger diameter and plays the role of A for e, c
    e: Fraction
    c: Fraction
    interval_I: Interval
    I_length: Fraction
    delta: Fraction
    diamA_slack: Fraction
    diamB_slack: Fraction
    diamA_ok: bool
    diamB_ok: bool
    I_in_sum: bool
    checks: tuple[Check, ...]

    @property
    def applies(self) -> bool:
        return self.hyp_i or self.hyp_ii

    @property
    def ok(self) -> bool:
        """True unless a hypothesis holds and some conclusion fails."""
        return not self.applies or all(ch.ok for ch in self.checks)

    def render_text(self) -> str:
        lines = [
            f"lambda(A) = {self.lamA}, lambda(B) = {self.lamB}, lambda(A+B) = {self.lambda_sum}",
            f"diam(A) = {self.DA}, diam(B) = {self.DB}",
            f"hypothesis (i): {'holds' if self.hyp_i else 'fails'}",
            f"hypothesis (ii): {'holds' if self.hyp_ii else 'fails'}",
        ]
        if not self.applies:
            lines.append("no conclusion claimed")
            return "\n".join(lines)
        lines.append(f"I = ({self.e}, {self.c}), length {self.I_length}")
        lines += [str(ch) for ch in self.checks]
        lines.append("verified" if self.ok else "COUNTEREXAMPLE")
        return "\n".join(lines)


def freiman_verify(A: IntervalSet, B: IntervalSet) -> FreimanReport:
    """Check the three conclusions of the continuous 3k-4 theorem."""
    _nonempty_positive(A, B)
    A0, B0 = normalize_to_zero(A), normalize_to_zero(B)
    return _freiman(A0, B0, minkowski_sum(A0, B0), None)


def _freiman(A0: IntervalSet, B0: IntervalSet, S: IntervalSet, zp: ZonePartition | None) -> FreimanReport:
    # zp, when given, must be the zone partition of the pair ordered by diameter
    lamA, lamB = measure(A0), measure(B0)
    DA, DB = A0.diameter, B0.diameter
    lam_sum = measure(S)
    hyp_i = lam_sum < lamA + lamB + min(lamA, lamB)
    hyp_ii = DB <= DA and lam_sum < lamA + 2 * lamB

    swapped = DB > DA
    P, Q = (B0, A0) if swapped else (A0, B0)
    DP, DQ = P.diameter, Q.diameter
    e, c = interval_endpoints(S, DP, DQ)
    I_len = c - e
    delta = lamA + lamB - DP
    slackA = lam_sum - lamB - DA
    slackB = lam_sum - lamA - DB
    in_sum = e == c or S.contains_interval(e, c)

    checks = [
        _le("diam(A) <= lambda(A+B) - lambda(B)", DA, lam_sum - lamB),
        _le("diam(B) <= lambda(A+B) - lambda(A)", DB, lam_sum - lamA),
        Check("I subset of A+B", in_sum, f"({e}, {c})", "subset", "A+B"),
        _ge("|I| >= lambda(A) + lambda(B)", I_len, lamA + lamB),
    ]
    if delta > 0:
        if zp is None:
            zp = zone_partition(P, Q)
        for cr in zp.crossings:
            if cr.kind == "up":
                checks.append(_ge(f"middle run ({cr.lo}, {cr.hi}) length >= Delta", cr.length, delta))
    return FreimanReport(
        hyp_i, hyp_ii, lamA, lamB, DA, DB, lam_sum, swapped, e, c, Interval(e, c), I_len,
        delta, slackA, slackB, slackA >= 0, slackB >= 0, in_sum, tuple(checks),
    )


# --- the gap lemma ----------------------------------------------------------


@dataclass(frozen=True)
class LemmaMesResult:
    x: Fraction
    applicable: bool
    holds: bool
    first: tuple[Fraction, Fraction] | None  # (lhs, rhs) of the first inequality
    second: tuple[Fraction, Fraction] | None


def lemma_mes_check(A: IntervalSet, B: IntervalSet, x) -> LemmaMesResult:
    """For x outside A+B, check λ([0,x]∩A) + λ([0,x]∩B) <= x and the mirrored tail bound.

    Measures are taken directly from restricted sets.  Returns applicable=False
    when x is in A+B (or outside both ranges), in which case nothing is asserted.
    """
    if not A or not B:
        raise EmptySetError("inputs must be nonempty")
    if A.inf != 0 or B.inf != 0:
        raise PreconditionError("lemma check needs inf(A) = inf(B) = 0")
    x = as_fraction(x)
    DA, DB = A.diameter, B.diameter
    S = minkowski_sum(A, B)
    if contains_point(S, x):
        return LemmaMesResult(x, False, True, None, None)
    first = second = None
    if x >= 0:
        lhs = measure(restrict(A, (0, x))) + measure(restrict(B, (0, x)))
        first = (lhs, x)
    if x <= DA + DB:
        lhs = _tail(A, x - DB, DA) + _tail(B, x - DA, DB)
        second = (lhs, DA + DB - x)
    applicable = first is not None or second is not None
    holds = all(p[0] <= p[1] for p in (first, second) if p is not None)
    return LemmaMesResult(x, applicable, holds, first, second)


def _tail(S: IntervalSet, lo: Fraction, hi: Fraction) -> Fraction:
    if lo > hi:
        return Fraction(0)
    return measure(restrict(S, (lo, hi)))


class _GapLemma:
    """Both sides of the gap lemma as exact functions of x, from the profiles."""

    def __init__(self, A: IntervalSet, B: IntervalSet):
        if A.inf != 0 or B.inf != 0:
            raise PreconditionError("lemma check needs inf(A) = inf(B) = 0")
        self.DA, self.DB = A.diameter, B.diameter
        self.gA, self.gB = cumulative_profile(A), cumulative_profile(B)
        self.lamA, self.lamB = self.gA.ys[-1], self.gB.ys[-1]
        self.S = minkowski_sum(A, B)
        DA, DB = self.DA, self.DB
        self.breaks = sorted(
            {*self.gA.xs, *self.gB.xs, *(t + DB for t in self.gA.xs), *(t + DA for t in self.gB.xs), DA + DB}
        )

    def excess(self, x: Fraction) -> Fraction:
        """max of (lhs - rhs) over the inequalities that apply at x."""
        worst = Fraction(-1)
        if x >= 0:
            worst = self.gA(x) + self.gB(x) - x
        if x <= self.DA + self.DB:
            tail = (self.lamA - self.gA(x - self.DB)) + (self.lamB - self.gB(x - self.DA))
            worst = max(worst, tail - (self.DA + self.DB - x))
        return worst

    def worst_on(self, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction]:
        """(x, excess) maximizing the excess on [lo, hi]; both sides are linear between breaks."""
        probe = [lo, hi, *self.breaks[bisect_right(self.breaks, lo):bisect_left(self.breaks, hi)]]
        return max(((x, self.excess(x)) for x in probe), key=lambda p: p[1])


def lemma_mes_scan(A: IntervalSet, B: IntervalSet, points: Iterable) -> list[Fraction]:
    """Check the gap lemma at many non-members of A+B; return the points where it fails."""
    lem = _GapLemma(A, B)
    out = []
    for p in points:
        x = as_fraction(p)
        if contains_point(lem.S, x):
            raise ValueError(f"{x} is not outside A+B")
        if lem.excess(x) > 0:
            out.append(x)
    return out


def lemma_mes_segments(A: IntervalSet, B: IntervalSet, segments: Iterable) -> list[Fraction]:
    """Certify the gap lemma on closed segments lying outside A+B.

    Along a gap of A+B both sides of each inequality are piecewise linear in
    x, so the worst point of a segment is an end or a profile breakpoint.
    Returns witness points where an inequality fails (empty when certified).
    """
    lem = _GapLemma(A, B)
    gaps = lem.S.gaps()
    witnesses = []
    for lo, hi in segments:
        lo, hi = as_fraction(lo), as_fraction(hi)
        inside = hi < lem.S.inf or lo > lem.S.sup or any(g_lo < lo and hi < g_hi for g_lo, g_hi in gaps)
        if not inside:
            raise ValueError(f"segment [{lo}, {hi}] meets A+B")
        x, worst = lem.worst_on(lo, hi)
        if worst > 0:
            witnesses.append(x)
    return witnesses


# --- several intervals ------------------------------------------------------


@dataclass(frozen=True)
class RelaxedReport:
    m: int
    n: int  # down crossings found; 2n+1 intervals are returned
    delta: Fraction
    assembled: tuple[Interval, ...]  # bracketed unions of consecutive runs
    intervals: tuple[Interval, ...]  # each widened to its maximal interval in A+B
    total: Fraction
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(ch.ok for ch in self.checks)


def _containing_part(S: IntervalSet, lo: Fraction, hi: Fraction) -> tuple[Fraction, Fraction] | None:
    for p_lo, p_hi in S.parts:
        if p_lo <= lo and hi <= p_hi:
            return p_lo, p_hi
    return None


def relaxed_verify(A: IntervalSet, B: IntervalSet, m: int) -> RelaxedReport:
    """Intervals inside A+B when λ(A+B) < D_A + λ(B) + (m+1)(D_A - D_B + Δ)."""
    _nonempty_positive(A, B)
    A0, B0 = normalize_to_zero(A), normalize_to_zero(B)
    return _relaxed(A0, B0, minkowski_sum(A0, B0), None, m)


def _relaxed(A0: IntervalSet, B0: IntervalSet, S: IntervalSet, zp: ZonePartition | None, m: int) -> RelaxedReport:
    if m < 0:
        raise ValueError("m must be nonnegative")
    DA, DB = A0.diameter, B0.diameter
    lamA, lamB = measure(A0), measure(B0)
    if DB > DA:
        raise PreconditionError("relaxed theorem needs diam(B) <= diam(A)", slack=DA - DB)
    delta = lamA + lamB - DA
    if delta <= 0:
        raise PreconditionError("relaxed theorem needs Delta > 0", slack=delta)
    lam_sum = measure(S)
    limit = DA + lamB + (m + 1) * (DA - DB + delta)
    if not lam_sum < limit:
        raise PreconditionError(
            f"relaxed theorem needs lambda(A+B) < {limit}, got {lam_sum}", slack=lam_sum - limit
        )
    dec = run_decomposition(zp if zp is not None else zone_partition(A0, B0))
    n = dec.m
    assembled = [Interval(lo, hi) for lo, hi in dec.sumset_intervals()]
    checks = [_le("crossings n <= m", n, m)]
    widened: list[Interval] = []
    min_len = 2 * delta + DA - DB
    for iv in assembled:
        part = _containing_part(S, iv.lo, iv.hi)
        checks.append(Check(f"({iv.lo}, {iv.hi}) subset of A+B", part is not None, iv, "subset", "A+B"))
        checks.append(_ge(f"length of ({iv.lo}, {iv.hi})", iv.length, min_len))
        if part is not None and (not widened or widened[-1] != Interval(*part)):
            widened.append(Interval(*part))
    for a, b in zip(assembled, assembled[1:]):
        checks.append(_le("assembled intervals disjoint", a.hi, b.lo))
    total = sum((iv.length for iv in assembled), Fraction(0))
    checks.append(_ge("total measure >= D_A + (2n+1)Delta", total, DA + (2 * n + 1) * delta))
    return RelaxedReport(m, n, delta, tuple(assembled), tuple(widened), total, tuple(checks))


# --- large-density extremal sets --------------------------------------------


def first_half_density_point(S: IntervalSet, window_hi: Fraction) -> Fraction:
    """sup{x in [0, window_hi] : λ(S ∩ [0, x]) <= x/2}, solved on the exact profile."""
    prof = cumulative_profile(S, window_hi).on(0, window_hi)
    return prof.minus_line(Fraction(1, 2), 0).sublevel(0).sup


def cap_holds(F: PiecewiseLinear, c: Fraction) -> tuple[bool, bool]:
    """Does F(x) <= x²/c hold on [0, c]?  Returns (everywhere, at breakpoints).

    On each linear piece the gap x²/c - F(x) is a convex quadratic, so its
    minimum is at the vertex or an end of the piece.
    """
    if c <= 0:
        return True, True
    G = F.on(0, c)
    at_breaks = all(y <= x * x / c for x, y in G.breakpoints)
    everywhere = at_breaks
    for (x0, y0), (x1, y1) in zip(G.breakpoints, G.breakpoints[1:]):
        s = (y1 - y0) / (x1 - x0)
        v = s * c / 2  # vertex of x²/c - s·x
        if x0 < v < x1 and v * v / c < y0 + s * (v - x0):
            everywhere = False
    return everywhere, at_breaks


def _sharper_bound_failures(F: PiecewiseLinear, c: Fraction) -> list[Fraction]:
    """Breakpoints u in (0, c] where λ <= u/(floor(c/u)+1) fails."""
    out = []
    if c <= 0:
        return out
    for u, y in F.on(0, c).breakpoints:
        if u > 0 and y > 0 and y > u / (int(c // u) + 1):
            out.append(u)
    return out


@dataclass(frozen=True)
class ExtremalDecomposition:
    """Pieces of an extremal pair.  The "A-side" fields belong to the stable set.

    ``stable`` names which input set carries the interval: "A" for the
    λ(A+B) = D_B + λ(A) variant, "B" for λ(A+B) = D_A + λ(B).  Labels refer
    to the inputs after ordering so that diam(B) <= diam(A) (``swapped``).
    """

    variant: str
    stable: str
    swapped: bool
    delta: Fraction
    b: Fraction
    c: Fraction
    A1: IntervalSet
    A2: IntervalSet
    interior: Interval
    B1: IntervalSet
    B2: IntervalSet
    B_I: IntervalSet
    c1: Fraction
    c2: Fraction
    cap1_breakpoints: bool
    cap2_breakpoints: bool
    sharper_bound_failures: tuple[Fraction, ...]
    checks: tuple[Check, ...]

    @property
    def ok(self) -> bool:
        return all(ch.ok for ch in self.checks)


def extremal_large_decompose(A: IntervalSet, B: IntervalSet) -> ExtremalDecomposition:
    """Three-part structure of A, B and A+B when λ(A+B) is D_B + λ(A) or D_A + λ(B)."""
    _nonempty_positive(A, B)
    A0, B0 = normalize_to_zero(A), normalize_to_zero(B)
    swapped = B0.diameter > A0.diameter
    if swapped:
        A0, B0 = B0, A0
    DA, DB = A0.diameter, B0.diameter
    lamA, lamB = measure(A0), measure(B0)
    S = minkowski_sum(A0, B0)
    lam_sum = measure(S)
    if lam_sum == DB + lamA:
        variant, stable, P, Q = "diam_B_plus_lam_A", "A", A0, B0
    elif lam_sum == DA + lamB:
        variant, stable, P, Q = "diam_A_plus_lam_B", "B", B0, A0
    else:
        raise PreconditionError(
            f"extremal equality fails: lambda(A+B) = {lam_sum}, D_B + lambda(A) = {DB + lamA}, "
            f"D_A + lambda(B) = {DA + lamB}",
            slack=lam_sum - (DB + lamA),
        )
    if not lam_sum < lamA + 2 * lamB:
        raise PreconditionError(
            f"strict side condition fails: lambda(A+B) = {lam_sum} >= lambda(A) + 2 lambda(B) = {lamA + 2 * lamB}",
            slack=lam_sum - lamA - 2 * lamB,
        )
    delta = lamA + lamB - DA
    dec = run_decomposition(zone_partition(A0, B0))
    checks = [_eq("down crossings", dec.m, 0)]
    b = dec.get("I1", 0).hi
    c = DB - dec.get("I3", 0).lo
    DP, DQ = P.diameter, Q.diameter
    top = DA + DB

    P1 = restrict(P, (0, b))
    P2 = reflect(restrict(P, (DP - c, DP)), DP)
    Q1 = restrict(Q, (0, b))
    Q2 = reflect(restrict(Q, (DQ - c, DQ)), DQ)
    Q_I = restrict(Q, (b, DQ - c)) if b <= DQ - c else IntervalSet.empty()
    interior = Interval(b, max(b, DP - c))

    checks += [
        _ge("b >= 0", b, 0), _ge("c >= 0", c, 0), _le("b <= D_B", b, DB), _le("c <= D_B", c, DB),
        _ge("interior length", DP - c - b, delta + (DA - DB if stable == "A" else 0)),
        _zero("stable prefix (A+B)∩[0,b] vs A1", symmetric_difference_measure(restrict(S, (0, b)), P1)),
        _zero(
            "stable suffix of A+B vs mirrored A2",
            symmetric_difference_measure(restrict(S, (top - c, top)), translate(restrict(P, (DP - c, DP)), top - DP)),
        ),
        _eq("interior inside stable set", measure(restrict(P, (b, DP - c))), DP - c - b),
        _eq("(b, D_A+D_B-c) inside A+B", measure(restrict(S, (b, top - c))), top - c - b),
        _zero(
            "stable set = A1 ∪ interior ∪ (D - A2)",
            symmetric_difference_measure(P, union(union(P1, IntervalSet([(b, DP - c)])), reflect(P2, DP))),
        ),
        _zero(
            "A+B = A1 ∪ (b, D_A+D_B-c) ∪ (D_A+D_B - A2)",
            symmetric_difference_measure(
                S, union(union(P1, IntervalSet([(b, top - c)])), translate(reflect(P2, DP), top - DP))
            ),
        ),
        _zero("B1 inside A1", measure(Q1) - measure(intersect(Q1, P1))),
        _zero("B2 inside A2", measure(Q2) - measure(intersect(Q2, P2))),
        _zero(
            "other set = B1 ∪ B_I ∪ (D - B2)",
            symmetric_difference_measure(Q, union(union(Q1, Q_I), reflect(Q2, DQ))),
        ),
    ]
    c1 = first_half_density_point(P, DP - c)
    c2 = first_half_density_point(reflect(P, DP), DP - b)
    F1, F2 = cumulative_profile(Q1, max(c1, Q1.sup if Q1 else 0)), cumulative_profile(Q2, max(c2, Q2.sup if Q2 else 0))
    cap1, cap1_b = cap_holds(F1, c1)
    cap2, cap2_b = cap_holds(F2, c2)
    checks += [
        Check("cap lambda(B1∩[0,x]) <= x²/c1 on [0,c1]", cap1, "B1", "cap", c1),
        Check("cap lambda(B2∩[0,x]) <= x²/c2 on [0,c2]", cap2, "B2", "cap", c2),
    ]
    sharper = _sharper_bound_failures(F1, c1) + _sharper_bound_failures(F2, c2)
    return ExtremalDecomposition(
        variant, stable, swapped, delta, b, c, P1, P2, interior, Q1, Q2, Q_I,
        c1, c2, cap1_b, cap2_b, tuple(sharper), tuple(checks),
    )


# --- small-ratio extremal sets ----------------------------------------------


@dataclass(frozen=True)
class SmallExtremalShape:
    K: int
    delta: Fraction
    b1: Fraction
    b2: Fraction
    D_B: Fraction
    shiftA: Fraction
    shiftB: Fraction

    @property
    def params(self) -> tuple:
        return self.K, self.delta, self.b1, self.b2, self.D_B


@dataclass(frozen=True)
class Recognition:
    shape: SmallExtremalShape | None
    mismatch: str | None
    lambda_sum: Fraction
    target: Fraction
    strict_regime: bool  # λ(A+B) < λ(A) + D_B, the regime the characterization covers

    @property
    def recognized(self) -> bool:
        return self.shape is not None


def _positive_parts(S: IntervalSet) -> list[tuple[Fraction, Fraction]]:
    return [(lo, hi) for lo, hi in S.parts if hi > lo]


def small_extremal_recognize(A: IntervalSet, B: IntervalSet) -> Recognition:
    """Match (A, B) against the K-block template attaining λ(A) + (K+δ)λ(B)."""
    _nonempty_positive(A, B)
    A0, B0 = normalize_to_zero(A), normalize_to_zero(B)
    lamA, lamB = measure(A0), measure(B0)
    DB = B0.diameter
    lam_sum = measure(minkowski_sum(A0, B0))
    p = ruzsa_params(lamA, lamB)
    target = lamA + p.K_plus_delta * lamB
    if lam_sum != target:
        raise PreconditionError(
            f"equality fails: lambda(A+B) = {lam_sum}, lambda(A) + (K+delta) lambda(B) = {target}",
            slack=lam_sum - target,
        )
    strict = lam_sum < lamA + DB

    def miss(reason: str) -> Recognition:
        return Recognition(None, reason, lam_sum, target, strict)

    parts = _positive_parts(B0)
    if len(parts) > 2:
        return miss(f"B has {len(parts)} blocks of positive length, template allows 2")
    if len(parts) == 1 and parts[0] == (0, DB):
        b1, b2 = DB, Fraction(0)
    else:
        b1 = parts[0][1] if parts[0][0] == 0 else Fraction(0)
        b2 = DB - parts[-1][0] if parts[-1][1] == DB else Fraction(0)
        if b1 + b2 != lamB:
            return miss(f"B is not [0,b1] ∪ [D_B-b2, D_B] (b1={b1}, b2={b2}, lambda(B)={lamB})")
    tA, tB = small_extremal_template(p.K, p.delta, b1, b2, DB)
    if symmetric_difference_measure(B0, tB) != 0:
        return miss("B differs from the two-block template on a set of positive measure")
    d = symmetric_difference_measure(A0, tA)
    if d != 0:
        return miss(f"A differs from the {p.K}-block template by measure {d}")
    return Recognition(SmallExtremalShape(p.K, p.delta, b1, b2, DB, A.inf, B.inf), None, lam_sum, target, strict)
