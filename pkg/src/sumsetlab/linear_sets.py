"""Finite unions of closed rational intervals on the real line.

Every set handled by the package is an :class:`IntervalSet`: a sorted tuple of
pairwise disjoint, non-adjacent closed intervals with :class:`fractions.Fraction`
endpoints.  Degenerate intervals ``[p, p]`` are singletons and carry measure 0.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Union

Number = Union[int, Fraction, str]

__all__ = [
    "EmptySetError",
    "SetParseError",
    "Interval",
    "IntervalSet",
    "as_fraction",
    "canonicalize",
    "measure",
    "diameter",
    "translate",
    "normalize_to_zero",
    "reflect",
    "union",
    "intersect",
    "restrict",
    "difference",
    "minkowski_sum",
    "contains_point",
    "symmetric_difference_measure",
    "parse_set",
    "format_set",
    "set_to_json",
    "set_from_json",
]


class EmptySetError(ValueError):
    """Raised when an operation needs a nonempty set."""


class SetParseError(ValueError):
    """Raised for malformed set text; ``pos`` is the offending character offset."""

    def __init__(self, message: str, pos: int = 0):
        super().__init__(f"{message} (at position {pos})")
        self.pos = pos


def as_fraction(value: Number) -> Fraction:
    """Convert an int, Fraction, or exact string ("3/10", "0.25") to a Fraction.

    Floats are rejected: they would smuggle binary rounding into exact geometry.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"expected an exact rational, got {type(value).__name__}")


@dataclass(frozen=True, order=True)
class Interval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", as_fraction(self.lo))
        object.__setattr__(self, "hi", as_fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"interval with lo > hi: [{self.lo}, {self.hi}]")

    @property
    def length(self) -> Fraction:
        return self.hi - self.lo

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __iter__(self):
        yield self.lo
        yield self.hi


class IntervalSet:
    """Immutable canonical union of closed intervals.

    Construct with :func:`canonicalize` or ``IntervalSet.of(...)``; the raw
    constructor trusts its input and is reserved for code that already holds a
    canonical sequence.
    """

    __slots__ = ("_parts", "_hash")

    def __init__(self, parts: Sequence[tuple[Fraction, Fraction]] = ()):
        self._parts: tuple[tuple[Fraction, Fraction], ...] = tuple(parts)
        self._hash = None

    @classmethod
    def of(cls, *items) -> "IntervalSet":
        """``IntervalSet.of((0, 1), ("9/10", 1), 2)``; a bare number is a singleton."""
        raw = []
        for item in items:
            if isinstance(item, Interval):
                raw.append((item.lo, item.hi))
            elif isinstance(item, (tuple, list)):
                lo, hi = item
                raw.append((as_fraction(lo), as_fraction(hi)))
            else:
                p = as_fraction(item)
                raw.append((p, p))
        return canonicalize(raw)

    @classmethod
    def empty(cls) -> "IntervalSet":
        return cls(())

    @property
    def parts(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return self._parts

    @property
    def intervals(self) -> list[Interval]:
        return [Interval(lo, hi) for lo, hi in self._parts]

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self):
        return iter(self._parts)

    def __bool__(self) -> bool:
        return bool(self._parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self._parts)
        return self._hash

    def __repr__(self) -> str:
        return f"IntervalSet({format_set(self)!r})"

    def __str__(self) -> str:
        return format_set(self)

    def __contains__(self, x) -> bool:
        return contains_point(self, as_fraction(x))

    def __add__(self, other: "IntervalSet") -> "IntervalSet":
        return minkowski_sum(self, other)

    @property
    def inf(self) -> Fraction:
        if not self._parts:
            raise EmptySetError("inf of the empty set")
        return self._parts[0][0]

    @property
    def sup(self) -> Fraction:
        if not self._parts:
            raise EmptySetError("sup of the empty set")
        return self._parts[-1][1]

    @property
    def measure(self) -> Fraction:
        return measure(self)

    @property
    def diameter(self) -> Fraction:
        return diameter(self)

    def endpoints(self) -> list[Fraction]:
        out = []
        for lo, hi in self._parts:
            out.append(lo)
            if hi != lo:
                out.append(hi)
        return out

    def contains_interval(self, lo: Fraction, hi: Fraction) -> bool:
        """True iff the closed interval [lo, hi] lies inside one part."""
        for a, b in self._parts:
            if a <= lo and hi <= b:
                return True
            if a > lo:
                return False
        return False

    def issubset(self, other: "IntervalSet") -> bool:
        return all(other.contains_interval(lo, hi) for lo, hi in self._parts)

    def gaps(self) -> list[tuple[Fraction, Fraction]]:
        """Bounded open gaps between consecutive parts, as (lo, hi) pairs."""
        return [(self._parts[i][1], self._parts[i + 1][0]) for i in range(len(self._parts) - 1)]


def _merge_sorted(raw: list[tuple[Fraction, Fraction]]) -> IntervalSet:
    out: list[list[Fraction]] = []
    for lo, hi in raw:
        if out and lo <= out[-1][1]:
            if hi > out[-1][1]:
                out[-1][1] = hi
        else:
            out.append([lo, hi])
    return IntervalSet([(lo, hi) for lo, hi in out])


def canonicalize(raw: Iterable) -> IntervalSet:
    """Sort, validate, and merge overlapping or touching closed intervals."""
    pairs = []
    for item in raw:
        lo, hi = item
        lo, hi = as_fraction(lo), as_fraction(hi)
        if lo > hi:
            raise ValueError(f"interval with lo > hi: [{lo}, {hi}]")
        pairs.append((lo, hi))
    pairs.sort()
    return _merge_sorted(pairs)


def measure(S: IntervalSet) -> Fraction:
    return sum((hi - lo for lo, hi in S.parts), Fraction(0))


def diameter(S: IntervalSet) -> Fraction:
    if not S:
        raise EmptySetError("diameter of the empty set")
    return S.sup - S.inf


def translate(S: IntervalSet, t: Number) -> IntervalSet:
    t = as_fraction(t)
    return IntervalSet([(lo + t, hi + t) for lo, hi in S.parts])


def normalize_to_zero(S: IntervalSet) -> IntervalSet:
    """Return S - inf(S)."""
    if not S:
        raise EmptySetError("cannot normalize the empty set")
    return translate(S, -S.inf)


def reflect(S: IntervalSet, D: Number) -> IntervalSet:
    """Return D - S."""
    if not S:
        raise EmptySetError("cannot reflect the empty set")
    D = as_fraction(D)
    return IntervalSet([(D - hi, D - lo) for lo, hi in reversed(S.parts)])


def union(S: IntervalSet, T: IntervalSet) -> IntervalSet:
    return _merge_sorted(sorted(S.parts + T.parts))


def intersect(S: IntervalSet, T: IntervalSet) -> IntervalSet:
    out = []
    a, b = S.parts, T.parts
    i = j = 0
    while i < len(a) and j < len(b):
        lo = max(a[i][0], b[j][0])
        hi = min(a[i][1], b[j][1])
        if lo <= hi:
            out.append((lo, hi))
        if a[i][1] < b[j][1]:
            i += 1
        else:
            j += 1
    # touching pieces (e.g. [0,1]∩[1,2] next to [1,1]∩...) can repeat a point
    return _merge_sorted(out)


def restrict(S: IntervalSet, window) -> IntervalSet:
    """S ∩ [lo, hi] for a window given as Interval or (lo, hi)."""
    lo, hi = window
    lo, hi = as_fraction(lo), as_fraction(hi)
    if lo > hi:
        return IntervalSet.empty()
    out = []
    for a, b in S.parts:
        if b < lo:
            continue
        if a > hi:
            break
        out.append((max(a, lo), min(b, hi)))
    return IntervalSet(out)


def difference(S: IntervalSet, T: IntervalSet) -> IntervalSet:
    """Closure of S \\ T.

    The true difference of closed sets is not closed; its closure has the same
    measure, which is all the callers need.
    """
    out = []
    for lo, hi in S.parts:
        if lo == hi:
            if not contains_point(T, lo):
                out.append((lo, hi))
            continue
        cur = lo
        for tlo, thi in T.parts:
            if thi < cur:
                continue
            if tlo > hi:
                break
            if tlo > cur:
                out.append((cur, tlo))
            cur = thi
            if cur >= hi:
                break
        if cur < hi:
            out.append((cur, hi))
    return _merge_sorted(out)


def symmetric_difference_measure(S: IntervalSet, T: IntervalSet) -> Fraction:
    """λ(S Δ T); zero means the sets agree up to a null set."""
    return measure(union(S, T)) - measure(intersect(S, T))


def minkowski_sum(A: IntervalSet, B: IntervalSet) -> IntervalSet:
    if not A or not B:
        raise EmptySetError("Minkowski sum with the empty set")
    pairs = [(a0 + b0, a1 + b1) for a0, a1 in A.parts for b0, b1 in B.parts]
    pairs.sort()
    return _merge_sorted(pairs)


def contains_point(S: IntervalSet, x) -> bool:
    parts = S.parts
    lo, hi = 0, len(parts)
    # rightmost part with start <= x
    while lo < hi:
        mid = (lo + hi) // 2
        if parts[mid][0] <= x:
            lo = mid + 1
        else:
            hi = mid
    return lo > 0 and x <= parts[lo - 1][1]


# ---------------------------------------------------------------------------
# text and JSON forms

_NUM = r"[+-]?\d+(?:\.\d+)?(?:/\d+)?"
_TOKEN = re.compile(
    rf"\s*(?:(?P<iv>\[\s*(?P<lo>{_NUM})\s*,\s*(?P<hi>{_NUM})\s*\])"
    rf"|(?P<pt>\{{\s*(?P<p>{_NUM})\s*\}})"
    rf"|(?P<sep>;|,|∪|U)"
    rf"|(?P<empty>\{{\s*\}}|∅))"
)


def _num(text: str, pos: int) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise SetParseError(f"bad number {text!r}", pos) from exc


def parse_set(text: str) -> IntervalSet:
    """Parse ``"[0,1/5] U [9/10,1]"``, ``"{0}; [1/10,9/10]"``, ``"[[0,1/5],[9/10,1]]"`` or JSON."""
    stripped = text.strip()
    if stripped.startswith("{") and '"intervals"' in stripped:
        return set_from_json(stripped)
    pos = 0
    if stripped.startswith("[[") or stripped == "[]":
        # nested list form [[lo,hi],[lo,hi]]: drop the outer brackets
        if not stripped.endswith("]"):
            raise SetParseError("unbalanced outer bracket", len(text))
        outer = text.index("[")
        text = text[:outer] + " " + text[outer + 1:text.rindex("]")]
    raw = []
    expect_item = True
    n = len(text)
    while pos < n:
        if text[pos:].strip() == "":
            break
        m = _TOKEN.match(text, pos)
        if not m:
            skip = len(text[pos:]) - len(text[pos:].lstrip())
            raise SetParseError(f"unexpected input {text[pos + skip:pos + skip + 10]!r}", pos + skip)
        start = m.start() + (len(m.group(0)) - len(m.group(0).lstrip()))
        if m.group("sep"):
            if expect_item:
                raise SetParseError("separator without a preceding interval", start)
            expect_item = True
        elif m.group("empty"):
            pass
        else:
            if m.group("iv"):
                lo = _num(m.group("lo"), m.start("lo"))
                hi = _num(m.group("hi"), m.start("hi"))
                if lo > hi:
                    raise SetParseError(f"interval [{lo},{hi}] has lo > hi", start)
            else:
                lo = hi = _num(m.group("p"), m.start("p"))
            raw.append((lo, hi))
            expect_item = False
        pos = m.end()
    if raw and expect_item:
        raise SetParseError("trailing separator", n)
    return canonicalize(raw)


def format_set(S: IntervalSet, decimal: int | None = None) -> str:
    """Canonical text form; ``decimal`` renders fixed-point approximations instead."""
    if not S:
        return "{}"
    fmt = (lambda q: _fmt_decimal(q, decimal)) if decimal is not None else str
    items = []
    for lo, hi in S.parts:
        items.append("{" + fmt(lo) + "}" if lo == hi else f"[{fmt(lo)},{fmt(hi)}]")
    return " U ".join(items)


def _fmt_decimal(q: Fraction, digits: int) -> str:
    scaled = round(q * 10**digits)
    sign = "-" if scaled < 0 else ""
    scaled = abs(scaled)
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}" if digits else f"{sign}{whole}"


def set_to_json(S: IntervalSet) -> dict:
    return {"intervals": [[str(lo), str(hi)] for lo, hi in S.parts]}


def set_from_json(data) -> IntervalSet:
    if isinstance(data, str):
        try:
            data = json.loads(data)
        except json.JSONDecodeError as exc:
            raise SetParseError(f"invalid JSON: {exc.msg}", exc.pos) from exc
    try:
        items = data["intervals"]
    except (TypeError, KeyError) as exc:
        raise SetParseError('JSON set needs an "intervals" list') from exc
    if not isinstance(items, list):
        raise SetParseError('JSON set needs an "intervals" list')
    raw = []
    for k, item in enumerate(items):
        try:
            lo, hi = item
            lo, hi = as_fraction(lo), as_fraction(hi)
        except (TypeError, ValueError, ZeroDivisionError) as exc:
            raise SetParseError(f"bad interval #{k}: {item!r}", k) from exc
        if lo > hi:
            raise SetParseError(f"interval #{k} has lo > hi", k)
        raw.append((lo, hi))
    return canonicalize(raw)
