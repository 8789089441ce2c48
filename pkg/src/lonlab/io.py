"""Byte-stable text output: reals at 17 significant digits, undefined values as null."""

from __future__ import annotations

import json
import math
import os
from typing import Any


def format_real(x: float | None) -> str:
    """17 significant digits (exact round trip); empty string for undefined."""
    if x is None:
        return ""
    x = float(x)
    if not math.isfinite(x):
        raise ValueError(f"refusing to serialize non-finite value {x}")
    return format(x, ".17g")


def _encode(value: Any, indent: int, level: int) -> str:
    pad = " " * (indent * (level + 1))
    end = " " * (indent * level)
    if value is None:
        return "null"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, float):
        text = format_real(value)
        # keep the JSON type a real even when the value is integral
        if not any(c in text for c in ".en"):
            text += ".0"
        return text
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, dict):
        if not value:
            return "{}"
        items = [f"{pad}{json.dumps(str(k))}: {_encode(v, indent, level + 1)}" for k, v in value.items()]
        return "{\n" + ",\n".join(items) + "\n" + end + "}"
    if isinstance(value, (list, tuple)):
        if not value:
            return "[]"
        items = [f"{pad}{_encode(v, indent, level + 1)}" for v in value]
        return "[\n" + ",\n".join(items) + "\n" + end + "]"
    if hasattr(value, "item"):  # numpy scalar
        return _encode(value.item(), indent, level)
    raise TypeError(f"cannot encode {type(value).__name__}")


def dumps(value: Any, indent: int = 2) -> str:
    return _encode(value, indent, 0) + "\n"


def write_json(path: str | os.PathLike, value: Any) -> None:
    with open(path, "w") as fh:
        fh.write(dumps(value))
