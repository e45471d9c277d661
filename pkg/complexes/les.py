# complexes/les.py
"""Long exact sequence of a pair with injective pullback."""
from __future__ import annotations

from dataclasses import dataclass

from abelian import AbHom, ExactnessCheck, IntMatrix, Presentation, is_exact, solve_integer
from common.errors import NotInjectiveOnCochains
from common.logger import get_logger

from .cochain import CochainMap
from .cohomology import CohomologyResult, compute_cohomology, induced_from_results
from .cone import QuotientComplex, quotient_complex

log = get_logger(__name__)

_ZERO = Presentation.free(0)


@dataclass(frozen=True)
class ExactSequence:
    """0 -> G_1 -> ... -> G_n -> 0 with a label per object (including the two zeros)."""
    maps: tuple[AbHom, ...]
    labels: tuple[str, ...]

    @property
    def objects(self) -> tuple[Presentation, ...]:
        return (self.maps[0].source,) + tuple(h.target for h in self.maps)

    def check(self) -> ExactnessCheck:
        return is_exact(self.maps)

    def render(self) -> str:
        parts = []
        for label, obj in zip(self.labels, self.objects):
            parts.append(label if label == "0" else f"{label}={obj.group}")
        return " -> ".join(parts)


def _connecting(
    q: QuotientComplex, k: int, hq: CohomologyResult, hy_next: CohomologyResult
) -> AbHom:
    """Snake construction: x with d_X x = f^* y gives δ[x] = [y]."""
    f = q.pullback
    X = f.target
    cols = []
    for x in hq.basis:
        dx = X.differential(k).apply(x)
        y = solve_integer(f.matrix(k + 1), dx)
        if y is None:  # pragma: no cover - x is a relative cocycle
            raise NotInjectiveOnCochains(f"no preimage for d x in degree {k + 1}")
        cols.append(hy_next.coordinates(y))
    return AbHom(hq.presentation, hy_next.presentation, IntMatrix.from_columns(cols, len(hy_next.basis)))


def connecting_map(f: CochainMap, k: int) -> AbHom:
    q = quotient_complex(f)
    return _connecting(q, k, compute_cohomology(q.complex, k), compute_cohomology(f.source, k + 1))


def long_exact_sequence(f: CochainMap) -> ExactSequence:
    q = quotient_complex(f)
    lo, hi = f.degrees.start, f.degrees.stop - 1
    hy = {k: compute_cohomology(f.source, k) for k in range(lo, hi + 2)}
    hx = {k: compute_cohomology(f.target, k) for k in range(lo, hi + 1)}
    hq = {k: compute_cohomology(q.complex, k) for k in range(lo, hi + 1)}

    maps: list[AbHom] = [AbHom.zero(_ZERO, hy[lo].presentation)]
    labels = ["0"]
    for k in range(lo, hi + 1):
        maps.append(induced_from_results(f, k, hy[k], hx[k]))
        maps.append(induced_from_results(q.projection, k, hx[k], hq[k]))
        maps.append(_connecting(q, k, hq[k], hy[k + 1]))
        labels += [f"H^{k}(Y)", f"H^{k}(X)", f"H^{k}_Q"]
    # H^{hi+1}(Y) is zero: the last connecting map lands in the zero group
    maps[-1] = AbHom.zero(hq[hi].presentation, _ZERO)
    labels.append("0")
    seq = ExactSequence(tuple(maps), tuple(labels))
    log.debug("assembled LES: %s", seq.render())
    return seq
