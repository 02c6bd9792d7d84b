"""Conversion of result objects to JSON-ready values.

Rationals become exact "p/q" strings (or fixed-point strings when a number
of decimals is requested); sets use the ``{"intervals": ...}`` form.
"""

from __future__ import annotations

import dataclasses
import json
from fractions import Fraction

from .density import PiecewiseLinear
from .linear_sets import Interval, IntervalSet, _fmt_decimal, set_to_json

__all__ = ["SCHEMA", "jsonable", "dumps"]

SCHEMA = 1


def _num(q: Fraction, decimal: int | None) -> str:
    return _fmt_decimal(q, decimal) if decimal is not None else str(q)


def jsonable(obj, decimal: int | None = None):
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, Fraction):
        return _num(obj, decimal)
    if isinstance(obj, int):
        return obj
    if isinstance(obj, IntervalSet):
        if decimal is None:
            return set_to_json(obj)
        return {"intervals": [[_num(lo, decimal), _num(hi, decimal)] for lo, hi in obj.parts]}
    if isinstance(obj, Interval):
        return [_num(obj.lo, decimal), _num(obj.hi, decimal)]
    if isinstance(obj, PiecewiseLinear):
        return [[_num(x, decimal), _num(y, decimal)] for x, y in obj.breakpoints]
    if dataclasses.is_dataclass(obj) and not isinstance(obj, type):
        return {f.name: jsonable(getattr(obj, f.name), decimal) for f in dataclasses.fields(obj)}
    if isinstance(obj, dict):
        return {str(k): jsonable(v, decimal) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [jsonable(v, decimal) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps(payload: dict, decimal: int | None = None) -> str:
    """Schema-tagged, key-sorted JSON text (stable across runs)."""
    body = {"schema": SCHEMA, **payload}
    return json.dumps(jsonable(body, decimal), indent=2, sort_keys=True, ensure_ascii=False)
