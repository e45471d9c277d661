# complexes/cochain.py
"""
Cochain complexes of finitely generated free abelian groups, optionally
presented: degree k may carry a relation matrix R_k whose columns are set to
zero. Free complexes (no relations anywhere) are the cellular ones; presented
ones arise as quotient complexes.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Optional

from abelian import IntMatrix, Presentation, in_column_span
from common.errors import IncompatibleMap, InputError, InvalidComplex
from common.schema import K_D, K_DEGREES, K_MATRICES, K_RANKS, K_RELATIONS, require


def _columns_in_span(product: IntMatrix, span: IntMatrix) -> bool:
    return all(in_column_span(span, c) for c in product.columns())


@dataclass(frozen=True)
class CochainComplex:
    kmin: int
    kmax: int
    ranks: tuple[int, ...]
    d: tuple[IntMatrix, ...]
    relations: tuple[IntMatrix, ...] = field(default=())

    def __post_init__(self) -> None:
        n = self.kmax - self.kmin + 1
        if n < 1:
            raise InvalidComplex(f"empty degree range [{self.kmin}, {self.kmax}]")
        if len(self.ranks) != n or len(self.d) != n:
            raise InvalidComplex("ranks and differentials must cover every degree")
        if not self.relations:
            object.__setattr__(
                self, "relations", tuple(IntMatrix.zeros(r, 0) for r in self.ranks)
            )
        if len(self.relations) != n:
            raise InvalidComplex("relations must cover every degree")
        for k in self.degrees:
            dk = self.differential(k)
            if dk.shape != (self.rank(k + 1), self.rank(k)):
                raise InvalidComplex(
                    f"d_{k} has shape {dk.shape}, expected {(self.rank(k + 1), self.rank(k))}"
                )
            if self.relation(k).rows != self.rank(k):
                raise InvalidComplex(f"relations in degree {k} have the wrong row count")
        for k in self.degrees:
            dd = self.differential(k + 1) @ self.differential(k)
            if not _columns_in_span(dd, self.relation(k + 2)):
                raise InvalidComplex(f"d_{k + 1} ∘ d_{k} is not zero")
            if not _columns_in_span(self.differential(k) @ self.relation(k), self.relation(k + 1)):
                raise InvalidComplex(f"d_{k} does not preserve the relations of degree {k}")

    # ---------- construction ----------

    @classmethod
    def build(
        cls,
        ranks: Mapping[int, int],
        d: Optional[Mapping[int, IntMatrix]] = None,
        relations: Optional[Mapping[int, IntMatrix]] = None,
    ) -> "CochainComplex":
        """Missing coboundaries are zero; degrees span min..max of ``ranks``."""
        kmin, kmax = min(ranks), max(ranks)
        degs = range(kmin, kmax + 1)
        rk = tuple(ranks.get(k, 0) for k in degs)

        def rank(k: int) -> int:
            return ranks.get(k, 0) if kmin <= k <= kmax else 0

        d = dict(d or {})
        mats = tuple(d.get(k, IntMatrix.zeros(rank(k + 1), rank(k))) for k in degs)
        rels = tuple((relations or {}).get(k, IntMatrix.zeros(rank(k), 0)) for k in degs)
        return cls(kmin, kmax, rk, mats, rels)

    # ---------- access ----------

    @property
    def degrees(self) -> range:
        return range(self.kmin, self.kmax + 1)

    def rank(self, k: int) -> int:
        return self.ranks[k - self.kmin] if self.kmin <= k <= self.kmax else 0

    def differential(self, k: int) -> IntMatrix:
        if self.kmin <= k <= self.kmax:
            return self.d[k - self.kmin]
        return IntMatrix.zeros(self.rank(k + 1), self.rank(k))

    def relation(self, k: int) -> IntMatrix:
        if self.kmin <= k <= self.kmax:
            return self.relations[k - self.kmin]
        return IntMatrix.zeros(self.rank(k), 0)

    def presentation(self, k: int) -> Presentation:
        return Presentation(self.rank(k), self.relation(k))

    def is_free(self) -> bool:
        return all(r.cols == 0 for r in self.relations)

    def euler_characteristic(self) -> int:
        return sum((-1) ** k * self.rank(k) for k in self.degrees)

    # ---------- JSON ----------

    def to_json(self) -> dict:
        payload = {
            K_DEGREES: [self.kmin, self.kmax],
            K_RANKS: {str(k): self.rank(k) for k in self.degrees},
            K_D: {str(k): self.differential(k).to_json() for k in self.degrees if k < self.kmax},
        }
        if not self.is_free():
            payload[K_RELATIONS] = {str(k): self.relation(k).to_json() for k in self.degrees}
        return payload

    @classmethod
    def from_json(cls, payload: dict, where: str = "complex") -> "CochainComplex":
        degrees = require(payload, K_DEGREES, list, where)
        if len(degrees) != 2:
            raise InputError(f"{where}.{K_DEGREES}: expected [k_min, k_max]")
        kmin, kmax = int(degrees[0]), int(degrees[1])
        raw_ranks = require(payload, K_RANKS, dict, where)
        ranks = {k: int(raw_ranks.get(str(k), 0)) for k in range(kmin, kmax + 1)}
        d = {
            int(k): IntMatrix.from_json(m, f"{where}.{K_D}.{k}")
            for k, m in payload.get(K_D, {}).items()
        }
        rels = {
            int(k): IntMatrix.from_json(m, f"{where}.{K_RELATIONS}.{k}")
            for k, m in payload.get(K_RELATIONS, {}).items()
        }
        try:
            return cls.build(ranks, d, rels)
        except ValueError as exc:
            raise InputError(f"{where}: {exc}") from exc


@dataclass(frozen=True)
class CochainMap:
    """
    Degree-0 map from ``source`` cochains to ``target`` cochains. For a space
    map f: X -> Y the pullback f^* has source C(Y) and target C(X).
    """
    source: CochainComplex
    target: CochainComplex
    matrices: tuple[tuple[int, IntMatrix], ...]

    def __post_init__(self) -> None:
        given = dict(self.matrices)
        for k, m in given.items():
            if m.shape != (self.target.rank(k), self.source.rank(k)):
                raise IncompatibleMap(
                    f"degree {k} matrix has shape {m.shape}, expected "
                    f"{(self.target.rank(k), self.source.rank(k))}"
                )
        for k in self.degrees:
            fk = self.matrix(k)
            if not _columns_in_span(fk @ self.source.relation(k), self.target.relation(k)):
                raise IncompatibleMap(f"degree {k}: source relations leave the target relations")
            lhs = self.target.differential(k) @ fk
            rhs = self.matrix(k + 1) @ self.source.differential(k)
            if not _columns_in_span(lhs - rhs, self.target.relation(k + 1)):
                raise IncompatibleMap(f"map does not commute with coboundaries in degree {k}")

    @classmethod
    def build(
        cls, source: CochainComplex, target: CochainComplex, matrices: Mapping[int, IntMatrix]
    ) -> "CochainMap":
        return cls(source, target, tuple(sorted(matrices.items())))

    @classmethod
    def identity(cls, C: CochainComplex) -> "CochainMap":
        return cls.build(C, C, {k: IntMatrix.identity(C.rank(k)) for k in C.degrees})

    @property
    def degrees(self) -> range:
        lo = min(self.source.kmin, self.target.kmin)
        hi = max(self.source.kmax, self.target.kmax)
        return range(lo, hi + 1)

    def matrix(self, k: int) -> IntMatrix:
        for deg, m in self.matrices:
            if deg == k:
                return m
        return IntMatrix.zeros(self.target.rank(k), self.source.rank(k))

    def compose(self, inner: "CochainMap") -> "CochainMap":
        """self ∘ inner."""
        if inner.target != self.source:
            raise IncompatibleMap("inner target complex differs from outer source")
        degs: Iterable[int] = range(
            min(inner.source.kmin, self.target.kmin), max(inner.source.kmax, self.target.kmax) + 1
        )
        return CochainMap.build(
            inner.source, self.target, {k: self.matrix(k) @ inner.matrix(k) for k in degs}
        )

    def to_json(self) -> dict:
        return {K_MATRICES: {str(k): m.to_json() for k, m in self.matrices}}

    @classmethod
    def from_json(
        cls, payload: dict, source: CochainComplex, target: CochainComplex, where: str = "map"
    ) -> "CochainMap":
        raw = require(payload, K_MATRICES, dict, where)
        mats = {int(k): IntMatrix.from_json(m, f"{where}.{K_MATRICES}.{k}") for k, m in raw.items()}
        return cls.build(source, target, mats)
