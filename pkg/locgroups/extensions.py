# locgroups/extensions.py
"""
Extensions and long exact sequences of limit groups.

``splice`` solves the six-term sequence

    0 -> A1 -> H1 -> E1 --δ--> A2 -> H2 -> E2 -> 0

for the unknown middle groups H1, H2 given the flanking groups and δ, and
returns the assembled sequence so callers can check it. ``triple_sequence``
is the same splice applied to quotient groups with δ' = P ∘ δ.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from abelian import ExactnessCheck
from common.errors import Unclassifiable, UnresolvedExtension
from common.logger import get_logger

from .kernels import loc_cokernel, loc_is_exact, loc_kernel
from .limitgroup import LimitGroup
from .lochom import LocHom

log = get_logger(__name__)


def resolve_extension(A: LimitGroup, B: LimitGroup, evidence: Iterable[int] = ()) -> LimitGroup:
    """
    Middle term of 0 -> A -> H -> B -> 0 when the extension is forced to split.

    Free summands of B always split off. Z[1/n] splits when A is uniquely
    divisible by the primes of n, or when the caller holds ``evidence`` that
    preimages are infinitely divisible by those primes. Z_t splits when A is
    t-divisible. Anything else is refused.
    """
    evidence = frozenset(evidence)
    a = A.classified
    for s in B.classified.summands:
        if s.is_free:
            continue
        if s.is_torsion:
            if not a.is_divisible_by(s.n):
                raise UnresolvedExtension(f"extension of {s.render()} by {a} is not forced to split")
            continue
        if s.support <= evidence:
            log.debug("%s splits by supplied divisibility evidence %s", s.render(), sorted(evidence))
            continue
        if not a.is_divisible_by(s.n):
            raise UnresolvedExtension(f"extension of {s.render()} by {a} is not forced to split")
    return a.direct_sum(B.classified).classified


@dataclass(frozen=True)
class LocSequence:
    maps: tuple[LocHom, ...]
    labels: tuple[str, ...] = ()

    @property
    def objects(self) -> tuple[LimitGroup, ...]:
        if not self.maps:
            return ()
        return (self.maps[0].source,) + tuple(h.target for h in self.maps)

    def check(self) -> ExactnessCheck:
        return loc_is_exact(self.maps)

    def render(self) -> str:
        parts = []
        for i, G in enumerate(self.objects):
            label = self.labels[i] if i < len(self.labels) else ""
            parts.append(f"{label} = {G}" if label else str(G))
        return " -> ".join(parts)


@dataclass(frozen=True)
class Splice:
    h1: LimitGroup
    h2: LimitGroup
    kernel: LimitGroup
    sequence: LocSequence

    @property
    def cancelled(self) -> bool:
        """True when δ is nonzero, i.e. part of E1 cancels against A2."""
        return not self.sequence.maps[3].is_zero()


def _block(rows: int, cols: int, placements: Sequence[tuple[int, int, Sequence[Sequence]]]) -> list[list]:
    out = [[Fraction(0)] * cols for _ in range(rows)]
    for r0, c0, block in placements:
        for i, row in enumerate(block):
            for j, q in enumerate(row):
                out[r0 + i][c0 + j] = Fraction(q)
    return out


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _kernel_inclusion(delta: LocHom) -> tuple[LimitGroup, list[list]]:
    """ker δ with its inclusion into E1 when δ is zero or injective."""
    e1 = delta.source
    if delta.is_zero():
        return e1, _identity(len(e1))
    if loc_kernel(delta).is_trivial():
        return LimitGroup.zero(), [[] for _ in e1.summands]
    raise Unclassifiable(
        "connecting map is neither zero nor injective",
        data={"delta": delta.to_json()},
    )


def splice(a1: LimitGroup, a2: LimitGroup, delta: LocHom, e2: LimitGroup,
           evidence: Iterable[int] = (), labels: Sequence[str] = ()) -> Splice:
    """
    ``delta`` maps E1 into A2. H1 = A1 ⊕ ker δ and H2 = (A2 ⊕ E2) / δ(E1);
    the second extension must be forced to split by ``resolve_extension``.
    """
    if delta.target != a2:
        raise Unclassifiable("connecting map does not land in the given group", data={"delta": delta.to_json()})
    e1 = delta.source
    kernel, inclusion = _kernel_inclusion(delta)
    h1 = a1.direct_sum(kernel)
    pad = (Fraction(0),) * len(e2)
    h2 = a2.direct_sum(e2).with_relations(delta.column(j) + pad for j in range(len(e1)))

    resolve_extension(loc_cokernel(delta), e2, evidence)

    n1, k, n2, m = len(a1), len(kernel), len(a2), len(e2)
    zero = LimitGroup.zero()
    maps = (
        LocHom.zero(zero, a1),
        LocHom.build(a1, h1, _block(n1 + k, n1, [(0, 0, _identity(n1))])),
        LocHom.build(h1, e1, _block(len(e1), n1 + k, [(0, n1, inclusion)])),
        delta,
        LocHom.build(a2, h2, _block(n2 + m, n2, [(0, 0, _identity(n2))])),
        LocHom.build(h2, e2, _block(m, n2 + m, [(0, n2, _identity(m))])),
        LocHom.zero(e2, zero),
    )
    names = tuple(labels) or ("0", "A1", "H1", "E1", "A2", "H2", "E2", "0")
    log.debug("spliced H1 = %s, H2 = %s", h1, h2)
    return Splice(h1, h2, kernel, LocSequence(maps, names))


def triple_sequence(q1: LimitGroup, q2: LimitGroup, projection: LocHom, delta: LocHom,
                    e2: LimitGroup, evidence: Iterable[int] = ()) -> Splice:
    """
    Quotient groups of X over Z from those of Y over Z and of X over Y,
    for X -> Y -> Z. ``projection`` is H^2(Y) -> H^2_Q(Y, Z) and ``delta`` the
    connecting map of the pair (X, Y).
    """
    return splice(
        q1, q2, projection.compose(delta), e2, evidence,
        labels=("0", "Q1(Y,Z)", "Q1(X,Z)", "Q1(X,Y)", "Q2(Y,Z)", "Q2(X,Z)", "Q2(X,Y)", "0"),
    )


