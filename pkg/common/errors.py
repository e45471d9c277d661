# common/errors.py
"""
Exception hierarchy shared by every tilecoh package.

Each class records the package that owns it in ``module`` so the CLI can
report ``error: <ClassName>: ...`` without inspecting tracebacks.
"""
from __future__ import annotations

from typing import Any, Optional

__all__ = [
    "TilecohError",
    "IllDefinedHom",
    "NotComposable",
    "DegreeOutOfRange",
    "InvalidComplex",
    "NotInjectiveOnCochains",
    "InvalidBoundary",
    "IncompatibleMap",
    "Unclassifiable",
    "IntertwiningFailure",
    "InadmissibleHom",
    "UnresolvedExtension",
    "NotPrimitive",
    "NotIntertwining",
    "InconsistentState",
    "InputError",
]


class TilecohError(Exception):
    module = "tilecoh"

    @property
    def name(self) -> str:
        return type(self).__name__


# ---------- abelian ----------

class IllDefinedHom(TilecohError):
    module = "abelian"


class NotComposable(TilecohError):
    module = "abelian"


# ---------- complexes ----------

class DegreeOutOfRange(TilecohError):
    module = "complexes"


class InvalidComplex(TilecohError):
    module = "complexes"


class NotInjectiveOnCochains(TilecohError):
    module = "complexes"


# ---------- cw ----------

class InvalidBoundary(TilecohError):
    module = "cw"


class IncompatibleMap(TilecohError):
    module = "cw"


# ---------- limits ----------

class Unclassifiable(TilecohError):
    """Carries whatever stabilized data was computed before giving up."""
    module = "limits"

    def __init__(self, message: str, data: Optional[dict[str, Any]] = None):
        super().__init__(message)
        self.data = dict(data or {})


class IntertwiningFailure(TilecohError):
    module = "limits"


# ---------- locgroups ----------

class InadmissibleHom(TilecohError):
    module = "locgroups"


class UnresolvedExtension(TilecohError):
    module = "locgroups"


# ---------- tiling1d ----------

class NotPrimitive(TilecohError):
    module = "tiling1d"


class NotIntertwining(TilecohError):
    module = "tiling1d"


# ---------- chair / cli ----------

class InconsistentState(TilecohError):
    module = "chair"


class InputError(TilecohError):
    module = "cli"
