# cli/inputs.py
"""
Input resolution for the CLI.

Every argument naming an input may be a built-in (``pd``, ``tm``, ``solenoid``,
``figure8``, ``tm-pd``), a path to a JSON file, or an inline JSON object.
Substitutions also accept inline rule strings such as ``"1->21, 2->11"``.
"""
from __future__ import annotations

import json
from typing import Any

from abelian import IntMatrix
from common.errors import InputError
from common.logger import get_logger
from common.models import get_model_loader
from common.schema import K_MATRICES, K_RULES, require
from complexes import CochainComplex, CochainMap
from cw import CellularMap, CWComplex, CWPair
from limits import StationarySystem
from tiling1d import LetterMap, Substitution1D, bd_complex

log = get_logger(__name__)

BUILTINS = ("pd", "tm", "solenoid", "figure8")


def load_payload(ref: str | dict) -> Any:
    if isinstance(ref, dict):
        return ref
    text = ref.strip()
    if text.startswith("{"):
        try:
            return json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"inline JSON: {exc.msg} at column {exc.colno}") from exc
    return get_model_loader().load(text)


def _kind(payload: Any) -> str:
    if not isinstance(payload, dict):
        raise InputError("expected a JSON object")
    if "kind" in payload:
        return str(payload["kind"])
    if "factor" in payload:
        return "cw-pair"
    if K_RULES in payload:
        return "substitution"
    if "vertices" in payload:
        return "cw"
    if K_MATRICES in payload:
        return "cochain-map"
    if "degrees" in payload:
        return "complex"
    return "unknown"


# ---------- single objects ----------

def load_matrix(ref: str) -> IntMatrix:
    return IntMatrix.from_json(load_payload(ref), ref if not ref.lstrip().startswith("{") else "matrix")


def load_substitution(ref: str) -> Substitution1D:
    text = ref.strip()
    if any(arrow in text for arrow in ("->", "→", "=>")) and not text.startswith("{"):
        return Substitution1D.parse(text)
    payload = load_payload(text)
    if _kind(payload) != "substitution":
        raise InputError(f"'{ref}' is not a substitution")
    return Substitution1D.from_json(payload, text if len(text) < 40 else "substitution")


def load_cw(ref: str) -> CWComplex:
    """A CW complex, the space of a CW pair, or the Barge-Diamond approximant of a substitution."""
    text = ref.strip()
    if any(arrow in text for arrow in ("->", "→", "=>")) and not text.startswith("{"):
        return bd_complex(Substitution1D.parse(text)).complex
    payload = load_payload(text)
    kind = _kind(payload)
    if kind == "cw":
        return CWComplex.from_json(payload)
    if kind == "cw-pair":
        return load_cw_pair(payload).space
    if kind == "substitution":
        return bd_complex(Substitution1D.from_json(payload)).complex
    raise InputError(f"'{ref}' does not describe a CW complex")


def load_complex(ref: str) -> CochainComplex:
    payload = load_payload(ref)
    if _kind(payload) == "complex":
        return CochainComplex.from_json(payload)
    return load_cw(ref).cochain_complex


def load_system(ref: str) -> StationarySystem:
    return StationarySystem.from_json(load_payload(ref))


# ---------- pairs and maps ----------

def load_cw_pair(ref: str | dict) -> CWPair:
    payload = load_payload(ref)
    space = CWComplex.from_json(require(payload, "space", dict), "space")
    base = CWComplex.from_json(require(payload, "base", dict), "base")
    factor = CellularMap.from_json(require(payload, "factor", dict), space, base, "factor")
    maps = {}
    for key, K in (("space_map", space), ("base_map", base)):
        if key in payload:
            maps[key] = CellularMap.from_json(payload[key], K, K, key)
    return CWPair(space, base, factor, **maps)


def _complex_ref(value: Any, where: str) -> CochainComplex:
    if isinstance(value, str):
        return load_complex(value)
    if isinstance(value, dict):
        return CochainComplex.from_json(value, where)
    raise InputError(f"'{where}': expected a complex or a reference to one")


def load_cochain_map(ref: str) -> CochainMap:
    """
    A pullback C(Y) -> C(X): either a CW pair (its factor's pullback) or
    ``{"source": <complex of Y>, "target": <complex of X>, "matrices": {...}}``
    where source and target are inline complexes or references to them.
    """
    payload = load_payload(ref)
    kind = _kind(payload)
    if kind == "cw-pair":
        return load_cw_pair(payload).pullback
    if kind != "cochain-map":
        raise InputError(f"'{ref}' is neither a CW pair nor a cochain map")
    source = _complex_ref(require(payload, "source", (str, dict)), "source")
    target = _complex_ref(require(payload, "target", (str, dict)), "target")
    return CochainMap.from_json(payload, source, target)


def load_letter_map(ref: str, s: Substitution1D, t: Substitution1D) -> tuple[Substitution1D, LetterMap]:
    """
    ``{"mapping": {...}, "collar_source": bool}``; with ``collar_source`` the
    mapping is read on the right-collared alphabet of ``s``, which is returned
    in place of ``s``.
    """
    payload = load_payload(ref)
    mapping = require(payload, "mapping", dict, "letter map")
    if payload.get("collar_source", False):
        s, _ = s.collar()
        log.info("letter map reads the collared alphabet %s", list(s.alphabet))
    return s, LetterMap.build(s, t, {str(a): str(b) for a, b in mapping.items()})


def default_letter_map(s: Substitution1D, t: Substitution1D) -> LetterMap:
    """Only a one-letter target has an obvious letter map."""
    if len(t.alphabet) != 1:
        raise InputError(f"--letter-map is required to factor {s.name or s} onto {t.name or t}")
    return LetterMap.build(s, t, {a: t.alphabet[0] for a in s.alphabet})
