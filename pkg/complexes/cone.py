# complexes/cone.py
"""
Mapping cone and quotient complex of a cochain map f^*: C(Y) -> C(X).

Cone^k = C^k(X) ⊕ C^{k+1}(Y) with d(a, b) = (d_X a + f^* b, -d_Y b), so that
H^k(cone) ≅ H^k_Q(X, Y) in the same degree k. The cone needs no injectivity;
the quotient complex does.
"""
from __future__ import annotations

from dataclasses import dataclass

from abelian import IntMatrix, hstack, matrix_rank, vstack
from common.errors import InvalidComplex, NotInjectiveOnCochains
from common.logger import get_logger

from .cochain import CochainComplex, CochainMap

log = get_logger(__name__)


def _require_free(f: CochainMap) -> None:
    if not (f.source.is_free() and f.target.is_free()):
        raise InvalidComplex("cone and quotient constructions expect free cochain complexes")


def mapping_cone(f: CochainMap) -> CochainComplex:
    _require_free(f)
    X, Y = f.target, f.source
    lo = min(X.kmin, Y.kmin - 1)
    hi = max(X.kmax, Y.kmax - 1)
    ranks = {k: X.rank(k) + Y.rank(k + 1) for k in range(lo, hi + 1)}
    d = {}
    for k in range(lo, hi + 1):
        top = hstack(X.differential(k), f.matrix(k + 1))
        bottom = hstack(IntMatrix.zeros(Y.rank(k + 2), X.rank(k)), -Y.differential(k + 1))
        d[k] = vstack(top, bottom)
    return CochainComplex.build(ranks, d)


def is_injective_on_cochains(f: CochainMap) -> bool:
    return all(matrix_rank(f.matrix(k)) == f.source.rank(k) for k in f.degrees)


@dataclass(frozen=True)
class QuotientComplex:
    """Presented complex C(X)/f^*C(Y) and the projection C(X) -> Q."""
    complex: CochainComplex
    projection: CochainMap
    pullback: CochainMap


def quotient_complex(f: CochainMap) -> QuotientComplex:
    _require_free(f)
    for k in f.degrees:
        r = matrix_rank(f.matrix(k))
        if r != f.source.rank(k):
            raise NotInjectiveOnCochains(
                f"pullback has rank {r} on {f.source.rank(k)} cochains in degree {k}"
            )
    X = f.target
    Q = CochainComplex(
        X.kmin,
        X.kmax,
        X.ranks,
        X.d,
        tuple(f.matrix(k) for k in X.degrees),
    )
    proj = CochainMap.build(X, Q, {k: IntMatrix.identity(X.rank(k)) for k in X.degrees})
    log.debug("quotient complex over degrees %s", list(X.degrees))
    return QuotientComplex(Q, proj, f)
