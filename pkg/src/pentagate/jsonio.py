"""Deterministic JSON emission shared by the circuit schema and CLI reports.

Floats are written with 17 significant digits so output is byte-stable and
round-trips losslessly through a JSON parser. Complex numbers are emitted
as two-element ``[re, im]`` arrays. Dicts keep insertion order; nothing is
sorted, so the caller controls field order.
"""

from __future__ import annotations

import json
import math

import numpy as np


def format_float(x: float) -> str:
    """Render a float with 17 significant digits (lossless for float64)."""
    x = float(x)
    if math.isnan(x) or math.isinf(x):
        raise ValueError("non-finite number cannot be emitted as JSON")
    return format(x, ".17g")


def complex_pair(z) -> list[float]:
    z = complex(z)
    return [z.real, z.imag]


def dumps(value) -> str:
    """Serialize a dict/list/scalar tree to canonical JSON text."""
    parts: list[str] = []
    _emit(value, parts)
    return "".join(parts)


def _emit(value, parts: list[str]) -> None:
    if value is None:
        parts.append("null")
    elif isinstance(value, bool):
        parts.append("true" if value else "false")
    elif isinstance(value, str):
        parts.append(json.dumps(value))
    elif isinstance(value, (int, np.integer)):
        parts.append(str(int(value)))
    elif isinstance(value, (float, np.floating)):
        parts.append(format_float(value))
    elif isinstance(value, (complex, np.complexfloating)):
        _emit(complex_pair(value), parts)
    elif isinstance(value, dict):
        parts.append("{")
        for i, (key, item) in enumerate(value.items()):
            if i:
                parts.append(", ")
            parts.append(json.dumps(str(key)))
            parts.append(": ")
            _emit(item, parts)
        parts.append("}")
    elif isinstance(value, (list, tuple)) or isinstance(value, np.ndarray):
        items = value.tolist() if isinstance(value, np.ndarray) else value
        parts.append("[")
        for i, item in enumerate(items):
            if i:
                parts.append(", ")
            _emit(item, parts)
        parts.append("]")
    else:
        raise TypeError(f"cannot emit {type(value).__name__} as JSON")
