# limits/classify.py
"""
Classification of direct limits of stationary systems.

After the eventual kernel is removed φ is injective, so the torsion subgroup
survives unchanged and the free quotient carries an invertible-over-Q block
F. When F is diagonalizable over Q with integer eigenvalues the limit is
⊕ Z[1/|λ|] over |λ| >= 2 plus one Z per unit eigenvalue; each summand keeps a
saturated integer eigenvector as its stage-0 generator.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from math import gcd
from typing import Sequence

import sympy

from abelian import AbHom, IntMatrix, kernel_basis
from common.errors import Unclassifiable
from common.logger import get_logger
from locgroups import LimitGroup, LocHom, Summand

from .stationary import StationarySystem, eventual_kernel

log = get_logger(__name__)


def _fraction(q: sympy.Rational) -> Fraction:
    q = sympy.Rational(q)
    return Fraction(int(q.p), int(q.q))


def _apply(M: IntMatrix, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
    return tuple(sum((M[i, j] * v[j] for j in range(M.cols)), Fraction(0)) for i in range(M.rows))


@dataclass(frozen=True)
class LimitAnalysis:
    """
    ``free_projection`` (r × n) maps generator coordinates of G onto the free
    quotient of the reduced group, ``free_lift`` (n × r) splits it, and
    ``generators`` holds one free-coordinate vector per non-torsion summand of
    ``group`` in order.
    """
    system: StationarySystem
    group: LimitGroup
    free_projection: IntMatrix
    free_lift: IntMatrix
    free_block: IntMatrix
    generators: tuple[tuple[Fraction, ...], ...]
    eigenvalues: tuple[int, ...]
    kernel_depth: int

    @cached_property
    def _inverse(self) -> sympy.Matrix:
        cols = [[sympy.Rational(q.numerator, q.denominator) for q in g] for g in self.generators]
        return sympy.Matrix(cols).T.inv()

    def coordinates(self, v: Sequence[Fraction]) -> tuple[Fraction, ...]:
        """Coefficients of a free-coordinate vector in the summand generators."""
        if not self.generators:
            return ()
        b = sympy.Matrix([sympy.Rational(Fraction(x).numerator, Fraction(x).denominator) for x in v])
        return tuple(_fraction(q) for q in self._inverse * b)


def _eigen_summands(F: IntMatrix, S: StationarySystem) -> list[tuple[Summand, int, tuple[Fraction, ...]]]:
    r = F.rows
    if r == 0:
        return []
    spectrum = sympy.Matrix(F.to_rows()).eigenvals()
    pieces = []
    for lam, mult in spectrum.items():
        if lam.is_integer is not True:
            raise Unclassifiable(
                "free part has a non-integer eigenvalue",
                data={"free_block": F.to_rows(), "eigenvalues": {str(k): int(m) for k, m in spectrum.items()},
                      "system": S.to_json()},
            )
        lam = int(lam)
        space = kernel_basis(F - IntMatrix.identity(r).scale(lam))
        if space.cols != mult:
            raise Unclassifiable(
                f"eigenvalue {lam} has algebraic multiplicity {mult} but only {space.cols} eigenvectors",
                data={"free_block": F.to_rows(), "system": S.to_json()},
            )
        summand = Summand.loc(abs(lam)) if abs(lam) >= 2 else Summand.free()
        pieces += [(summand, lam, tuple(Fraction(x) for x in col)) for col in space.columns()]
    pieces.sort(key=lambda p: (p[0].sort_key(), -p[1]))
    return pieces


def analyse_limit(S: StationarySystem) -> LimitAnalysis:
    ek = eventual_kernel(S)
    canon = ek.reduced(S).group.canonical
    t, r = len(canon.group.torsion), canon.group.rank
    free = range(t, t + r)
    proj = canon.to_canon.select_rows(free)
    lift = canon.from_canon.select_cols(free)
    F = proj @ S.endo.matrix @ lift
    pieces = _eigen_summands(F, S)
    group = LimitGroup.of(*(Summand.torsion(x) for x in canon.group.torsion), *(p[0] for p in pieces))
    log.debug("limit of %s: free block %s, eigenvalues %s", S.name or "system", F.to_rows(), [p[1] for p in pieces])
    return LimitAnalysis(
        S, group, proj, lift, F,
        tuple(p[2] for p in pieces), tuple(p[1] for p in pieces), ek.depth,
    )


def classify_limit(S: StationarySystem) -> LimitGroup:
    G = analyse_limit(S).group
    log.info("lim %s = %s", S.name or "system", G)
    return G


def _prime_to(q: Fraction, n: int) -> bool:
    return gcd(q.denominator, n) == 1


def _restage(column: Sequence[Fraction], n: int) -> tuple[Fraction, ...]:
    """
    Rescale the image of a Z[1/n] generator by the power of n that moves it to
    the stage where the column is n-integral and not all divisible by n.
    """
    col = tuple(column)
    if not any(col):
        return col
    while not all(_prime_to(q, n) for q in col):
        col = tuple(q * n for q in col)
    while all(_prime_to(q / n, n) for q in col):
        col = tuple(q / n for q in col)
    return col


def induced_lochom(h: AbHom, source: LimitAnalysis, target: LimitAnalysis) -> LocHom:
    """
    The map of limits induced by an intertwining h: G_source -> G_target,
    torsion-free groups only. Z[1/n] generators of the source are taken at
    the stage that makes their image primitive, so a map that is an
    isomorphism on a Z[1/n] summand shows up as a unit entry.
    """
    if source.group.torsion or target.group.torsion:
        raise Unclassifiable("induced maps are tracked only between torsion-free limits")
    A = target.free_projection @ h.matrix @ source.free_lift
    columns = []
    for s, g in zip(source.group.summands, source.generators):
        col = target.coordinates(_apply(A, g))
        columns.append(_restage(col, s.n) if s.is_loc else col)
    rows = [[col[i] for col in columns] for i in range(len(target.generators))]
    return LocHom.build(source.group, target.group, rows)
