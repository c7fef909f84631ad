"""Lossless JSON-friendly rendering of exact values.

Rationals serialize as "num/den" strings and minus infinity as "-inf", so
emitted reports parse back without any floating point.
"""

from __future__ import annotations

import json
from dataclasses import is_dataclass
from fractions import Fraction


def format_fraction(value: Fraction) -> str:
    value = Fraction(value)
    return f"{value.numerator}/{value.denominator}"


def parse_fraction(text: str) -> Fraction:
    num, _, den = text.partition("/")
    return Fraction(int(num), int(den) if den else 1)


def to_jsonable(obj):
    """Recursively convert exact values into JSON-safe primitives."""
    if isinstance(obj, Fraction):
        return format_fraction(obj)
    if isinstance(obj, float):
        if obj == float("-inf"):
            return "-inf"
        raise ValueError(f"refusing to serialize inexact float {obj!r}")
    if isinstance(obj, bool) or isinstance(obj, int) or obj is None:
        return obj
    if isinstance(obj, str):
        return obj
    if isinstance(obj, dict):
        return {str(k): to_jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple, set, frozenset)):
        items = sorted(obj) if isinstance(obj, (set, frozenset)) else obj
        return [to_jsonable(x) for x in items]
    if is_dataclass(obj) and hasattr(obj, "to_json"):
        return to_jsonable(obj.to_json())
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def dumps_report(payload) -> str:
    """Canonical JSON text: sorted keys, fixed layout, trailing newline."""
    return json.dumps(to_jsonable(payload), indent=2, sort_keys=True) + "\n"
