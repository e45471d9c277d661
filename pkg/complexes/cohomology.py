# complexes/cohomology.py
"""
Cohomology with tracked bases.

For degree k the cocycle lattice is L = {x : d_k x ∈ colspan R_{k+1}} with a
fixed basis K. Coboundaries and relations [d_{k-1} | R_k] are rewritten in K
coordinates and reduced by SNF; canonical generators (torsion first, then free)
are the columns of K·from_canon. Everything is deterministic, so induced maps
computed twice agree entry for entry.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from abelian import (
    AbHom,
    CanonicalForm,
    FgAbGroup,
    IntMatrix,
    Presentation,
    column_lattice_basis,
    hstack,
    kernel_basis,
    solve_integer,
)
from abelian.matrix import Vector
from common.errors import DegreeOutOfRange, IncompatibleMap
from common.logger import get_logger

from .cochain import CochainComplex, CochainMap

log = get_logger(__name__)


@dataclass(frozen=True)
class CohomologyResult:
    degree: int
    group: FgAbGroup
    cocycles: IntMatrix
    canonical: CanonicalForm
    basis: tuple[Vector, ...]

    @property
    def presentation(self) -> Presentation:
        """Canonical presentation: one generator per basis element."""
        return Presentation.cyclic(*self.group.torsion, *([0] * self.group.rank))

    def coordinates(self, cocycle: Sequence[int]) -> Vector:
        """Class of a cocycle in the canonical basis (torsion entries reduced)."""
        if self.cocycles.rows == 0:
            return ()
        c = solve_integer(self.cocycles, cocycle)
        if c is None:
            raise IncompatibleMap(f"vector is not a cocycle in degree {self.degree}")
        return self.canonical.coordinates(c)


def _cocycle_lattice(C: CochainComplex, k: int) -> IntMatrix:
    n = C.rank(k)
    joint = hstack(C.differential(k), C.relation(k + 1))
    gens = kernel_basis(joint).select_rows(range(n))
    return column_lattice_basis(gens)


def compute_cohomology(C: CochainComplex, k: int) -> CohomologyResult:
    """Cohomology in any degree; degrees outside the complex give the zero group."""
    K = _cocycle_lattice(C, k)
    boundaries = hstack(C.differential(k - 1), C.relation(k))
    coords = []
    for b in boundaries.columns():
        c = solve_integer(K, b)
        if c is None:  # pragma: no cover - guarded by complex validation
            raise IncompatibleMap(f"coboundary in degree {k} is not a cocycle")
        coords.append(c)
    pres = Presentation(K.cols, IntMatrix.from_columns(coords, K.cols))
    canon = pres.canonical
    basis = tuple((K @ canon.from_canon).columns())
    log.debug("H^%d: rank(C)=%d cocycles=%d -> %s", k, C.rank(k), K.cols, canon.group)
    return CohomologyResult(k, canon.group, K, canon, basis)


def cohomology(C: CochainComplex, k: int) -> CohomologyResult:
    if k not in C.degrees:
        raise DegreeOutOfRange(f"degree {k} outside [{C.kmin}, {C.kmax}]")
    return compute_cohomology(C, k)


def induced_from_results(
    f: CochainMap, k: int, src: CohomologyResult, tgt: CohomologyResult
) -> AbHom:
    fk = f.matrix(k)
    cols = [tgt.coordinates(fk.apply(b)) for b in src.basis]
    matrix = IntMatrix.from_columns(cols, len(tgt.basis))
    return AbHom(src.presentation, tgt.presentation, matrix)


def induced_map(f: CochainMap, k: int) -> AbHom:
    if k not in f.degrees:
        raise DegreeOutOfRange(f"degree {k} outside [{f.degrees.start}, {f.degrees.stop - 1}]")
    return induced_from_results(f, k, compute_cohomology(f.source, k), compute_cohomology(f.target, k))
