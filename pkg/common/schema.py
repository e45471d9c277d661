# common/schema.py
"""
JSON payload plumbing shared by every package.

Canonical top-level keys live here so codecs and the CLI agree on spelling;
the helpers raise ``InputError`` with the offending key path instead of
leaking ``KeyError``/``TypeError`` from deep inside a decoder.
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Mapping

from .errors import InputError

# Canonical keys
K_ROWS = "rows"
K_COLS = "cols"
K_ENTRIES = "entries"
K_RANK = "rank"
K_TORSION = "torsion"
K_DEGREES = "degrees"
K_RANKS = "ranks"
K_D = "d"
K_RELATIONS = "relations"
K_SOURCE = "source"
K_TARGET = "target"
K_MATRICES = "matrices"
K_ALPHABET = "alphabet"
K_RULES = "rules"


def read_json(path: str | Path) -> Any:
    p = Path(path)
    try:
        with p.open("r", encoding="utf-8") as f:
            return json.load(f)
    except FileNotFoundError as exc:
        raise InputError(f"file not found: {p}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{p}: invalid JSON at line {exc.lineno}: {exc.msg}") from exc


def require(payload: Any, key: str, kind: type | tuple[type, ...], where: str = "") -> Any:
    """Fetch ``payload[key]`` and check its JSON type."""
    label = f"{where}.{key}" if where else key
    if not isinstance(payload, Mapping):
        raise InputError(f"{where or 'payload'}: expected an object")
    if key not in payload:
        raise InputError(f"missing key '{label}'")
    value = payload[key]
    # bool is an int subclass; never accept it where a count is expected
    if isinstance(value, bool) and bool not in (kind if isinstance(kind, tuple) else (kind,)):
        raise InputError(f"'{label}': unexpected boolean")
    if not isinstance(value, kind):
        raise InputError(f"'{label}': expected {getattr(kind, '__name__', kind)}")
    return value


def as_int(value: Any, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise InputError(f"'{where}': expected an integer, got {value!r}")
    return value


def dumps(payload: Any) -> str:
    return json.dumps(payload, indent=2, ensure_ascii=False, sort_keys=False)
