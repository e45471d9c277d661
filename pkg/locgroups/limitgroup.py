# locgroups/limitgroup.py
"""
Direct-limit groups as finite direct sums of Z[1/n], Z and Z_t, optionally
presented by rational relation vectors.

A localized summand keeps the integer it came from (``Z[1/4]`` and ``Z[1/2]``
render differently but are isomorphic) and an extension tag t > 1 when its
generator was found to be t times a generator of the abstract summand
(rendered ``(1/t)Z[1/n]`` when extensions are tracked). Tags never affect
isomorphism.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from itertools import groupby
from typing import Iterable, Sequence

from sympy import primefactors

from abelian import FgAbGroup, IntMatrix, cokernel
from common.config import get_render_params
from common.errors import InadmissibleHom, InputError

LOC, FREE, TORSION = "loc", "free", "torsion"

RationalVector = tuple[Fraction, ...]


def support(n: int) -> frozenset[int]:
    return frozenset(primefactors(n)) if n > 1 else frozenset()


def in_localization(q: Fraction, n: int) -> bool:
    """q ∈ Z[1/n] (n = 1 or 0 means Z)."""
    return q.denominator == 1 or (n > 1 and support(q.denominator) <= support(n))


@dataclass(frozen=True)
class Summand:
    kind: str
    n: int = 0
    tag: int = 1

    def __post_init__(self) -> None:
        if self.kind not in (LOC, FREE, TORSION):
            raise InputError(f"unknown summand kind '{self.kind}'")
        if self.kind in (LOC, TORSION) and self.n < 2:
            raise InputError(f"{self.kind} summand needs n >= 2, got {self.n}")
        if self.kind == FREE:
            object.__setattr__(self, "n", 0)
        if self.kind != LOC:
            object.__setattr__(self, "tag", 1)
        if self.tag < 1:
            raise InputError("extension tag must be positive")

    @classmethod
    def loc(cls, n: int, tag: int = 1) -> "Summand":
        return cls(LOC, n, tag)

    @classmethod
    def free(cls) -> "Summand":
        return cls(FREE)

    @classmethod
    def torsion(cls, t: int) -> "Summand":
        return cls(TORSION, t)

    @property
    def is_loc(self) -> bool:
        return self.kind == LOC

    @property
    def is_free(self) -> bool:
        return self.kind == FREE

    @property
    def is_torsion(self) -> bool:
        return self.kind == TORSION

    @property
    def support(self) -> frozenset[int]:
        return support(self.n) if self.is_loc else frozenset()

    def contains(self, q: Fraction) -> bool:
        """Whether q is a legal coordinate for this summand."""
        if self.is_loc:
            return in_localization(q, self.n)
        return q.denominator == 1

    def sort_key(self) -> tuple:
        if self.is_torsion:
            return (0, self.n, 0)
        if self.is_loc:
            return (1, -self.n, self.tag)
        return (2, 0, 0)

    def render(self, track_extensions: bool = False) -> str:
        if self.is_torsion:
            return f"Z_{self.n}"
        if self.is_free:
            return "Z"
        prefix = f"(1/{self.tag})" if track_extensions and self.tag > 1 else ""
        return f"{prefix}Z[1/{self.n}]"

    def to_json(self) -> dict:
        payload = {"kind": self.kind}
        if not self.is_free:
            payload["n"] = self.n
        if self.tag > 1:
            payload["tag"] = self.tag
        return payload

    @classmethod
    def from_json(cls, payload: dict) -> "Summand":
        try:
            return cls(str(payload["kind"]), int(payload.get("n", 0)), int(payload.get("tag", 1)))
        except (KeyError, TypeError, ValueError) as exc:
            raise InputError(f"bad summand {payload!r}: {exc}") from exc


def _fractions(v: Iterable) -> RationalVector:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class LimitGroup:
    summands: tuple[Summand, ...] = ()
    relations: tuple[RationalVector, ...] = field(default=())

    def __post_init__(self) -> None:
        rels = tuple(_fractions(r) for r in self.relations)
        for r in rels:
            if len(r) != len(self.summands):
                raise InputError(f"relation of length {len(r)} for {len(self.summands)} summands")
            for q, s in zip(r, self.summands):
                if not s.contains(q):
                    raise InadmissibleHom(f"relation entry {q} is not an element of {s.render()}")
        object.__setattr__(self, "relations", tuple(r for r in rels if any(r)))

    # ---------- construction ----------

    @classmethod
    def zero(cls) -> "LimitGroup":
        return cls()

    @classmethod
    def of(cls, *summands: Summand) -> "LimitGroup":
        return cls(tuple(summands))

    @classmethod
    def free_group(cls, rank: int) -> "LimitGroup":
        return cls(tuple(Summand.free() for _ in range(rank)))

    @classmethod
    def from_fg(cls, group: FgAbGroup) -> "LimitGroup":
        return cls(tuple(Summand.torsion(t) for t in group.torsion) + (Summand.free(),) * group.rank)

    def direct_sum(self, *others: "LimitGroup") -> "LimitGroup":
        summands = list(self.summands)
        relations = [r + (Fraction(0),) * sum(len(o.summands) for o in others) for r in self.relations]
        offset = len(self.summands)
        for i, o in enumerate(others):
            after = sum(len(x.summands) for x in others[i + 1:])
            relations += [(Fraction(0),) * offset + r + (Fraction(0),) * after for r in o.relations]
            summands += o.summands
            offset += len(o.summands)
        return LimitGroup(tuple(summands), tuple(relations))

    def with_relations(self, extra: Iterable[Sequence]) -> "LimitGroup":
        return LimitGroup(self.summands, self.relations + tuple(_fractions(r) for r in extra))

    # ---------- structure ----------

    def __len__(self) -> int:
        return len(self.summands)

    @property
    def is_presented(self) -> bool:
        return bool(self.relations)

    @cached_property
    def classified(self) -> "LimitGroup":
        """Canonical relation-free form: torsion (invariant factors), localized by hint, then Z."""
        if self.relations:
            from .kernels import classify_presented

            return classify_presented(self)
        return _canonical(self.summands)

    def classify(self) -> "LimitGroup":
        return self.classified

    @property
    def localized_summands(self) -> tuple[int, ...]:
        return tuple(s.n for s in self.classified.summands if s.is_loc)

    @property
    def free_rank(self) -> int:
        return sum(1 for s in self.classified.summands if s.is_free)

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(s.n for s in self.classified.summands if s.is_torsion)

    @property
    def extension_tags(self) -> tuple[int, ...]:
        return tuple(s.tag for s in self.classified.summands if s.is_loc)

    @property
    def rational_rank(self) -> int:
        return sum(1 for s in self.classified.summands if not s.is_torsion)

    def prime_supports(self) -> tuple[tuple[int, ...], ...]:
        return tuple(sorted(tuple(sorted(s.support)) for s in self.classified.summands if s.is_loc))

    def is_trivial(self) -> bool:
        return not self.classified.summands

    def isomorphic(self, other: "LimitGroup") -> bool:
        a, b = self.classified, other.classified
        return (a.torsion, a.prime_supports(), a.free_rank) == (b.torsion, b.prime_supports(), b.free_rank)

    def is_divisible_by(self, t: int) -> bool:
        primes = support(t)
        for s in self.classified.summands:
            if s.is_free and t > 1:
                return False
            if s.is_loc and not primes <= s.support:
                return False
            if s.is_torsion and primes & support(s.n):
                return False
        return True

    # ---------- rendering ----------

    def render(self, track_extensions: bool | None = None) -> str:
        track = get_render_params().track_extensions if track_extensions is None else track_extensions
        parts = []
        for label, run in groupby(s.render(track) for s in self.classified.summands):
            count = len(list(run))
            parts.append(label if count == 1 else f"{label}^{count}")
        return " + ".join(parts) or "0"

    def __str__(self) -> str:
        return self.render()

    def to_json(self) -> dict:
        payload = {"summands": [s.to_json() for s in self.summands]}
        if self.relations:
            payload["relations"] = [[[q.numerator, q.denominator] for q in r] for r in self.relations]
        return payload

    @classmethod
    def from_json(cls, payload: dict, where: str = "group") -> "LimitGroup":
        try:
            summands = tuple(Summand.from_json(s) for s in payload["summands"])
            rels = tuple(
                tuple(Fraction(int(p[0]), int(p[1])) for p in r) for r in payload.get("relations", [])
            )
        except (KeyError, TypeError, ValueError, ZeroDivisionError) as exc:
            raise InputError(f"{where}: {exc}") from exc
        return cls(summands, rels)


def _canonical(summands: Sequence[Summand]) -> LimitGroup:
    orders = [s.n for s in summands if s.is_torsion]
    if orders:
        factors = cokernel(IntMatrix.diagonal(orders)).torsion
    else:
        factors = ()
    rest = sorted((s for s in summands if not s.is_torsion), key=Summand.sort_key)
    return LimitGroup(tuple(Summand.torsion(t) for t in factors) + tuple(rest))


# ---------- text form ----------

_TERM = re.compile(r"^(?:\(1/(?P<tag>\d+)\))?Z(?:\[1/(?P<loc>\d+)\]|_(?P<tor>\d+))?(?:\^(?P<pow>\d+))?$")


def parse_limit_group(text: str) -> LimitGroup:
    """Reads the rendered form, e.g. ``Z_3 + (1/3)Z[1/4] + Z[1/2]^4 + Z``; ``⊕`` also separates."""
    text = text.strip()
    if text in ("", "0"):
        return LimitGroup.zero()
    summands: list[Summand] = []
    for raw in re.split(r"\s*[+⊕]\s*", text):
        m = _TERM.match(raw.replace(" ", ""))
        if m is None:
            raise InputError(f"cannot read summand '{raw}'")
        count = int(m["pow"] or 1)
        if m["loc"]:
            s = Summand.loc(int(m["loc"]), int(m["tag"] or 1))
        elif m["tag"]:
            raise InputError(f"extension tag on a non-localized summand '{raw}'")
        elif m["tor"]:
            s = Summand.torsion(int(m["tor"]))
        else:
            s = Summand.free()
        summands += [s] * count
    return LimitGroup(tuple(summands))
