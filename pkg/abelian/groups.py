# abelian/groups.py
"""
Finitely generated abelian groups, presentations and homomorphisms.

Conventions:
- ``Presentation(ngens, relations)`` stores relations as the COLUMNS of an
  ngens × k matrix; the group is Z^ngens / colspan(relations).
- ``AbHom.matrix`` acts on column vectors: target.ngens × source.ngens.
- ``cokernel(M)`` follows the relation-matrix convention instead: rows of M are
  relations, columns are generators.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, reduce
from typing import Sequence

from common.errors import IllDefinedHom, InputError, NotComposable
from common.schema import K_RANK, K_TORSION, as_int, require

from .matrix import IntMatrix, Vector, hstack
from .snf import column_lattice_basis, in_column_span, kernel_basis, smith_normal_form, solve_integer


# ---------- FgAbGroup ----------

@dataclass(frozen=True)
class FgAbGroup:
    rank: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        object.__setattr__(self, "torsion", tuple(self.torsion))
        if self.rank < 0:
            raise ValueError("negative rank")
        for t in self.torsion:
            if t < 2:
                raise ValueError(f"torsion order {t} < 2")
        for a, b in zip(self.torsion, self.torsion[1:]):
            if b % a:
                raise ValueError(f"torsion chain broken: {a} does not divide {b}")

    @classmethod
    def free(cls, rank: int) -> "FgAbGroup":
        return cls(rank, ())

    @classmethod
    def trivial(cls) -> "FgAbGroup":
        return cls(0, ())

    def is_trivial(self) -> bool:
        return self.rank == 0 and not self.torsion

    def order(self) -> int | None:
        """Group order, or None when infinite."""
        if self.rank:
            return None
        return reduce(lambda a, b: a * b, self.torsion, 1)

    def __str__(self) -> str:
        parts = [f"Z_{t}" for t in self.torsion]
        if self.rank == 1:
            parts.append("Z")
        elif self.rank > 1:
            parts.append(f"Z^{self.rank}")
        return " + ".join(parts) if parts else "0"

    def to_json(self) -> dict:
        return {K_RANK: self.rank, K_TORSION: list(self.torsion)}

    @classmethod
    def from_json(cls, payload: dict, where: str = "group") -> "FgAbGroup":
        rank = as_int(require(payload, K_RANK, int, where), f"{where}.{K_RANK}")
        torsion = [as_int(t, f"{where}.{K_TORSION}") for t in require(payload, K_TORSION, list, where)]
        try:
            return cls(rank, tuple(torsion))
        except ValueError as exc:
            raise InputError(f"{where}: {exc}") from exc


def cokernel(M: IntMatrix) -> FgAbGroup:
    """Group generated by the columns of M subject to its rows as relations."""
    d = smith_normal_form(M).invariant_factors
    return FgAbGroup(M.cols - len(d), tuple(x for x in d if x > 1))


# ---------- Presentation ----------

@dataclass(frozen=True)
class CanonicalForm:
    """
    Canonical coordinates of a presented group.

    ``to_canon`` (g × n) sends a generator vector to canonical coordinates;
    ``from_canon`` (n × g) sends canonical generators back. The first
    ``len(group.torsion)`` canonical coordinates are read modulo the torsion
    orders, the remaining ones are free.
    """
    group: FgAbGroup
    to_canon: IntMatrix
    from_canon: IntMatrix

    @property
    def moduli(self) -> tuple[int, ...]:
        return self.group.torsion + (0,) * self.group.rank

    def reduce(self, canonical: Sequence[int]) -> Vector:
        return tuple(x % m if m else x for x, m in zip(canonical, self.moduli))

    def coordinates(self, v: Sequence[int]) -> Vector:
        return self.reduce(self.to_canon.apply(v))


@dataclass(frozen=True)
class Presentation:
    ngens: int
    relations: IntMatrix = field(default=None)  # type: ignore[assignment]

    def __post_init__(self) -> None:
        if self.relations is None:
            object.__setattr__(self, "relations", IntMatrix.zeros(self.ngens, 0))
        if self.relations.rows != self.ngens:
            raise ValueError(f"relations have {self.relations.rows} rows for {self.ngens} generators")

    @classmethod
    def free(cls, n: int) -> "Presentation":
        return cls(n, IntMatrix.zeros(n, 0))

    @classmethod
    def cyclic(cls, *orders: int) -> "Presentation":
        """Z_{o1} ⊕ Z_{o2} ⊕ ...; an order of 0 gives a free summand."""
        n = len(orders)
        cols = [tuple(o if i == j else 0 for i in range(n)) for j, o in enumerate(orders) if o != 0]
        return cls(n, IntMatrix.from_columns(cols, n))

    @cached_property
    def canonical(self) -> CanonicalForm:
        dec = smith_normal_form(self.relations)
        diag = list(dec.diagonal) + [0] * (self.ngens - len(dec.diagonal))
        keep = [i for i, d in enumerate(diag) if d != 1]
        torsion = tuple(diag[i] for i in keep if diag[i] > 1)
        group = FgAbGroup(len(keep) - len(torsion), torsion)
        return CanonicalForm(group, dec.U.select_rows(keep), dec.U_inv.select_cols(keep))

    @property
    def group(self) -> FgAbGroup:
        return self.canonical.group

    def contains_relation(self, v: Sequence[int]) -> bool:
        """True when v is zero in the group."""
        return in_column_span(self.relations, v)

    def equal_elements(self, a: Sequence[int], b: Sequence[int]) -> bool:
        return self.contains_relation(tuple(x - y for x, y in zip(a, b)))


# ---------- AbHom ----------

@dataclass(frozen=True)
class AbHom:
    source: Presentation
    target: Presentation
    matrix: IntMatrix

    def __post_init__(self) -> None:
        if self.matrix.shape != (self.target.ngens, self.source.ngens):
            raise IllDefinedHom(
                f"matrix shape {self.matrix.shape} does not fit "
                f"{self.source.ngens} -> {self.target.ngens} generators"
            )
        images = self.matrix @ self.source.relations
        for j, col in enumerate(images.columns()):
            if not self.target.contains_relation(col):
                raise IllDefinedHom(f"source relation {j} maps outside the target relations")

    @classmethod
    def zero(cls, source: Presentation, target: Presentation) -> "AbHom":
        return cls(source, target, IntMatrix.zeros(target.ngens, source.ngens))

    @classmethod
    def identity(cls, p: Presentation) -> "AbHom":
        return cls(p, p, IntMatrix.identity(p.ngens))

    def __call__(self, v: Sequence[int]) -> Vector:
        return self.matrix.apply(v)

    def compose(self, inner: "AbHom") -> "AbHom":
        """self ∘ inner."""
        if inner.target != self.source:
            raise NotComposable("inner target presentation differs from outer source")
        return AbHom(inner.source, self.target, self.matrix @ inner.matrix)

    def is_zero(self) -> bool:
        return all(self.target.contains_relation(c) for c in self.matrix.columns())

    def equals(self, other: "AbHom") -> bool:
        if (self.source, self.target) != (other.source, other.target):
            return False
        diff = self.matrix - other.matrix
        return all(self.target.contains_relation(c) for c in diff.columns())

    # ---------- subgroup lattices ----------

    @cached_property
    def preimage_lattice(self) -> IntMatrix:
        """Basis (columns) of {x : h(x) = 0 in the target}; contains the source relations."""
        n = self.source.ngens
        if n == 0:
            return IntMatrix.zeros(0, 0)
        joint = hstack(self.matrix, self.target.relations)
        ker = kernel_basis(joint)
        gens = ker.select_rows(range(n))
        return column_lattice_basis(gens)

    def kernel_presentation(self) -> Presentation:
        """ker h presented in the basis of ``preimage_lattice``."""
        L = self.preimage_lattice
        cols = []
        for rel in self.source.relations.columns():
            c = solve_integer(L, rel)
            if c is None:  # pragma: no cover - relations always lie in the preimage
                raise IllDefinedHom("source relation outside kernel lattice")
            cols.append(c)
        return Presentation(L.cols, IntMatrix.from_columns(cols, L.cols))

    def kernel(self) -> FgAbGroup:
        return self.kernel_presentation().group

    def image(self) -> FgAbGroup:
        return Presentation(self.source.ngens, self.preimage_lattice).group

    def cokernel(self) -> FgAbGroup:
        return Presentation(self.target.ngens, hstack(self.target.relations, self.matrix)).group


def hom_kernel(h: AbHom) -> FgAbGroup:
    return h.kernel()


def hom_image(h: AbHom) -> FgAbGroup:
    return h.image()


def hom_cokernel(h: AbHom) -> FgAbGroup:
    return h.cokernel()
