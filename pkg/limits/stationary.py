# limits/stationary.py
"""Stationary systems (G, φ) and the eventual kernel of φ."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from abelian import AbHom, IntMatrix, Presentation, in_column_span
from common.config import get_limit_params
from common.errors import IllDefinedHom, InputError, Unclassifiable
from common.logger import get_logger
from common.schema import K_RELATIONS, require
from complexes import CochainMap, induced_map

log = get_logger(__name__)


@dataclass(frozen=True)
class StationarySystem:
    """A finitely presented group with an endomorphism; models G -φ-> G -φ-> ..."""
    endo: AbHom
    name: str = ""

    def __post_init__(self) -> None:
        if self.endo.source != self.endo.target:
            raise IllDefinedHom("a stationary system needs an endomorphism")

    @property
    def group(self) -> Presentation:
        return self.endo.source

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]], torsion: Sequence[int] = (), name: str = "") -> "StationarySystem":
        """Endomorphism of Z_t1 ⊕ ... ⊕ Z^r; ``torsion`` lists the leading cyclic orders."""
        n = len(rows)
        free = n - len(torsion)
        if free < 0:
            raise InputError("more torsion orders than generators")
        P = Presentation.cyclic(*torsion, *([0] * free))
        return cls(AbHom(P, P, IntMatrix.from_rows(rows, n)), name)

    @classmethod
    def from_cochain_map(cls, f: CochainMap, k: int, name: str = "") -> "StationarySystem":
        if f.source != f.target:
            raise IllDefinedHom("self-map must be an endomorphism of one complex")
        return cls(induced_map(f, k), name)

    def power(self, j: int) -> "StationarySystem":
        if j < 1:
            raise InputError("power must be positive")
        h = self.endo
        for _ in range(j - 1):
            h = h.compose(self.endo)
        return StationarySystem(h, self.name)

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "ngens": self.group.ngens,
            K_RELATIONS: self.group.relations.to_json(),
            "endo": self.endo.matrix.to_json(),
        }

    @classmethod
    def from_json(cls, payload: dict, where: str = "system") -> "StationarySystem":
        if "torsion" in payload or "matrix" in payload:
            rows = require(payload, "matrix", list, where)
            torsion = payload.get("torsion", [])
            return cls.from_matrix(rows, torsion, str(payload.get("name", "")))
        n = require(payload, "ngens", int, where)
        rel = IntMatrix.from_json(require(payload, K_RELATIONS, dict, where), f"{where}.{K_RELATIONS}")
        M = IntMatrix.from_json(require(payload, "endo", dict, where), f"{where}.endo")
        P = Presentation(n, rel)
        return cls(AbHom(P, P, M), str(payload.get("name", "")))


@dataclass(frozen=True)
class EventualKernel:
    lattice: IntMatrix  # columns span ∪ ker φ^n together with the relations
    depth: int

    def reduced(self, S: StationarySystem) -> StationarySystem:
        """The system on G / ker; φ is injective there."""
        P = Presentation(S.group.ngens, self.lattice)
        return StationarySystem(AbHom(P, P, S.endo.matrix), S.name)


def _contains(big: IntMatrix, small: IntMatrix) -> bool:
    return all(in_column_span(big, c) for c in small.columns())


def eventual_kernel(S: StationarySystem) -> EventualKernel:
    limit = get_limit_params().kernel_iterations
    power = S.endo
    current = power.preimage_lattice
    for n in range(1, limit + 1):
        power = S.endo.compose(power)
        nxt = power.preimage_lattice
        if _contains(current, nxt):
            log.debug("eventual kernel of %s stable at depth %d", S.name or "system", n)
            return EventualKernel(current, n)
        current = nxt
    raise Unclassifiable(
        "eventual kernel did not stabilise",
        data={"iterations": limit, "system": S.to_json()},
    )
