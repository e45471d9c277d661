# locgroups/lochom.py
"""Homomorphisms between limit groups: rational matrices over summands, target × source."""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from common.config import get_stage_params
from common.errors import InadmissibleHom, InputError, NotComposable

from .limitgroup import LimitGroup, RationalVector, Summand, in_localization
from .stages import generator, is_trivial


def _residue_ok(q: Fraction, t: int) -> bool:
    return math.gcd(q.denominator, t) == 1


def _residue(q: Fraction, t: int) -> int:
    return q.numerator * pow(q.denominator, -1, t) % t


def admissible(q: Fraction, src: Summand, tgt: Summand) -> str | None:
    """None when x -> q·x is a homomorphism src -> tgt, else the reason it is not."""
    if q == 0:
        return None
    if src.is_torsion:
        if not tgt.is_torsion:
            return "torsion cannot map to a torsion-free summand"
        if not _residue_ok(q, tgt.n) or (_residue(q, tgt.n) * src.n) % tgt.n:
            return f"Z_{src.n} -> Z_{tgt.n} by {q} is not well defined"
        return None
    if tgt.is_torsion:
        if src.is_loc and math.gcd(src.n, tgt.n) != 1:
            return f"Z[1/{src.n}] has no nonzero map to Z_{tgt.n}"
        return None if _residue_ok(q, tgt.n) else f"{q} has no residue modulo {tgt.n}"
    if src.is_loc:
        if tgt.is_free:
            return f"Z[1/{src.n}] maps to Z only by 0"
        if not src.support <= tgt.support:
            return f"Z[1/{src.n}] does not map into Z[1/{tgt.n}]"
    if not in_localization(q, tgt.n if tgt.is_loc else 0):
        return f"{q} is not an element of {tgt.render()}"
    return None


@dataclass(frozen=True)
class LocHom:
    source: LimitGroup
    target: LimitGroup
    matrix: tuple[RationalVector, ...]

    def __post_init__(self) -> None:
        rows = tuple(tuple(Fraction(q) for q in row) for row in self.matrix)
        if len(rows) != len(self.target) or any(len(r) != len(self.source) for r in rows):
            raise InadmissibleHom(
                f"matrix shape does not fit {len(self.source)} -> {len(self.target)} summands"
            )
        object.__setattr__(self, "matrix", rows)
        for i, t in enumerate(self.target.summands):
            for j, s in enumerate(self.source.summands):
                reason = admissible(rows[i][j], s, t)
                if reason:
                    raise InadmissibleHom(f"entry ({i}, {j}): {reason}")
        for r in self.source.relations:
            if not is_trivial(self.target, self.apply(r)):
                raise InadmissibleHom("a source relation maps to a nonzero element")

    # ---------- construction ----------

    @classmethod
    def build(cls, source: LimitGroup, target: LimitGroup, rows: Sequence[Sequence]) -> "LocHom":
        if not len(target):
            rows = ()
        return cls(source, target, tuple(tuple(Fraction(q) for q in r) for r in rows))

    @classmethod
    def zero(cls, source: LimitGroup, target: LimitGroup) -> "LocHom":
        return cls(source, target, tuple((Fraction(0),) * len(source) for _ in target.summands))

    @classmethod
    def identity(cls, G: LimitGroup) -> "LocHom":
        n = len(G)
        return cls(G, G, tuple(tuple(Fraction(int(i == j)) for j in range(n)) for i in range(n)))

    @classmethod
    def from_column(cls, source: LimitGroup, target: LimitGroup, column: Sequence) -> "LocHom":
        """Single-summand source sent to ``column``."""
        return cls.build(source, target, [[q] for q in column])

    # ---------- algebra ----------

    def column(self, j: int) -> RationalVector:
        return tuple(row[j] for row in self.matrix)

    def apply(self, v: Sequence) -> RationalVector:
        return tuple(sum((q * Fraction(x) for q, x in zip(row, v)), Fraction(0)) for row in self.matrix)

    def image_of_generator(self, j: int, depth: int) -> RationalVector:
        g = generator(self.source.summands[j], depth)
        return tuple(q * g for q in self.column(j))

    def compose(self, inner: "LocHom") -> "LocHom":
        """self ∘ inner."""
        if inner.target != self.source:
            raise NotComposable("inner target differs from outer source")
        rows = [
            [sum((self.matrix[i][k] * inner.matrix[k][j] for k in range(len(self.source))), Fraction(0))
             for j in range(len(inner.source))]
            for i in range(len(self.target))
        ]
        return LocHom.build(inner.source, self.target, rows)

    def is_zero(self) -> bool:
        params = get_stage_params()
        for depth in (params.initial_depth, 2 * params.initial_depth):
            for j in range(len(self.source)):
                if not is_trivial(self.target, self.image_of_generator(j, depth)):
                    return False
        return True

    # ---------- JSON ----------

    def to_json(self) -> dict:
        return {
            "source": self.source.to_json(),
            "target": self.target.to_json(),
            "matrix": [[[q.numerator, q.denominator] for q in row] for row in self.matrix],
        }

    @classmethod
    def from_json(cls, payload: dict, where: str = "lochom") -> "LocHom":
        try:
            source = LimitGroup.from_json(payload["source"], f"{where}.source")
            target = LimitGroup.from_json(payload["target"], f"{where}.target")
            rows = [[_pair(p) for p in row] for row in payload["matrix"]]
        except (KeyError, TypeError) as exc:
            raise InputError(f"{where}: {exc}") from exc
        return cls.build(source, target, rows)


def _pair(p) -> Fraction:
    try:
        if isinstance(p, (list, tuple)):
            return Fraction(int(p[0]), int(p[1]))
        return Fraction(p)
    except (ValueError, ZeroDivisionError, IndexError) as exc:
        raise InputError(f"bad rational entry {p!r}") from exc

