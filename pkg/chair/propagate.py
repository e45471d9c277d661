# chair/propagate.py
"""
Propagation of cohomology through the ledger.

Each edge X -> Y contributes the one-step quotient groups E1, E2 of the pair
(X, Y); the long exact sequence of the pair then gives H^*(X) from H^*(Y)
and the connecting map δ: E1 -> H^2(Y), and the sequence of the triple
X -> Y -> solenoid gives the quotient groups of X from those of Y with
δ' = P_Y ∘ δ. Every assembled sequence is checked for exactness.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from common.errors import InconsistentState
from common.logger import get_logger
from cw import torus, torus_doubling
from limits import StationarySystem, classify_limit, degeneration, suspension_shift
from locgroups import LimitGroup, LocHom, LocSequence, Splice, splice, triple_sequence

from .ledger import Ledger, LedgerEdge, ModelId

log = get_logger(__name__)


def one_step_quotient(e: LedgerEdge) -> dict[int, LimitGroup]:
    """H^*_Q of the pair (source, target): the degeneration suspended once in the plane."""
    h0, h1 = degeneration(e.degeneration)
    return suspension_shift({0: h0, 1: h1}, n=2, k=1)


def solenoid_base() -> dict[int, LimitGroup]:
    """H^0, H^1, H^2 of S2 x S2 as limits of the torus under doubling."""
    phi = torus_doubling(torus()).pullback
    return {k: classify_limit(StationarySystem.from_cochain_map(phi, k, name=f"H^{k}(T2)")) for k in (0, 1, 2)}


@dataclass(frozen=True)
class NodeState:
    """Presented groups of one model; ``projection`` is H^2 -> H^2_Q over the solenoid."""
    model: ModelId
    h1: LimitGroup
    h2: LimitGroup
    q1: LimitGroup
    q2: LimitGroup
    projection: LocHom

    def classified(self) -> tuple[LimitGroup, ...]:
        return self.h1.classified, self.h2.classified, self.q1.classified, self.q2.classified

    def to_json(self) -> dict:
        return {
            "model": self.model.code,
            "h1": str(self.h1), "h2": str(self.h2),
            "q1": str(self.q1), "q2": str(self.q2),
        }


@dataclass
class LedgerState:
    nodes: dict[ModelId, NodeState] = field(default_factory=dict)
    cancellations: dict[LedgerEdge, bool] = field(default_factory=dict)
    sequences: list[tuple[LedgerEdge, str, LocSequence]] = field(default_factory=list)
    steps: dict[tuple[LedgerEdge, NodeState], tuple[NodeState, bool]] = field(default_factory=dict, repr=False)

    def cancellation_count(self, path: Iterable[LedgerEdge]) -> int:
        return sum(1 for e in path if self.cancellations.get(e))


def base_state(ledger: Ledger) -> NodeState:
    groups = solenoid_base()
    h2 = groups[2]
    return NodeState(ledger.base, groups[1], h2, LimitGroup.zero(), LimitGroup.zero(),
                     LocHom.zero(h2, LimitGroup.zero()))


def _presented_column(values: Sequence[int], G: LimitGroup) -> list[Fraction]:
    """Classified coordinates to the presented coordinates of a relation-free group."""
    if G.is_presented:
        raise InconsistentState("a nonzero connecting map needs a relation-free target")
    order = sorted(range(len(G)), key=lambda i: G.summands[i].sort_key())
    if tuple(G.summands[i] for i in order) != G.classified.summands:
        raise InconsistentState(f"cannot match classified coordinates of {G} to its summands")
    column = [Fraction(0)] * len(G)
    for position, i in enumerate(order):
        column[i] = Fraction(values[position])
    return column


def connecting_map(ledger: Ledger, e: LedgerEdge, e1: LimitGroup, h2: LimitGroup) -> LocHom:
    entry = ledger.delta(e)
    if not len(e1):
        return LocHom.zero(e1, h2)
    if entry is None:
        raise InconsistentState(f"no connecting map recorded for {e}; refusing to choose one")
    if len(entry.values) != len(h2.classified):
        raise InconsistentState(
            f"δ on {e} has {len(entry.values)} entries but H^2{e.target} = {h2} has {len(h2.classified)} summands"
        )
    if entry.source == "no-target" and h2.free_rank:
        raise InconsistentState(f"δ on {e} is marked no-target but H^2{e.target} = {h2} has a Z summand")
    if entry.is_zero:
        return LocHom.zero(e1, h2)
    if len(e1) != 1:
        raise InconsistentState(f"δ on {e} expects a cyclic source, got {e1}")
    return LocHom.from_column(e1, h2, _presented_column(entry.values, h2))


def _checked(e: LedgerEdge, kind: str, s: Splice, state: LedgerState | None) -> Splice:
    result = s.sequence.check()
    if not result:
        raise InconsistentState(
            f"{kind} sequence for {e} is not exact at object {result.index}: {result.reason}\n  {s.sequence.render()}"
        )
    if state is not None:
        state.sequences.append((e, kind, s.sequence))
    return s


def _block_projection(projection: LocHom, source: LimitGroup, target: LimitGroup, extra: int) -> LocHom:
    """block_diag(projection, identity on the ``extra`` trailing summands)."""
    n_src, n_tgt = len(projection.source), len(projection.target)
    rows = [list(row) + [Fraction(0)] * extra for row in projection.matrix]
    rows += [[Fraction(0)] * n_src + [Fraction(int(i == j)) for j in range(extra)] for i in range(extra)]
    if len(rows) != n_tgt + extra:  # pragma: no cover - shapes come from the same splice
        raise InconsistentState("projection shape mismatch")
    return LocHom.build(source, target, rows)


def step(ledger: Ledger, e: LedgerEdge, y: NodeState, state: LedgerState | None = None) -> tuple[NodeState, bool]:
    """State of ``e.source`` from the state of ``e.target``; the flag is True when δ cancels."""
    if y.model != e.target:
        raise InconsistentState(f"step along {e} started from {y.model}")
    quotients = one_step_quotient(e)
    e1, e2 = quotients[1], quotients[2]
    for k, G in quotients.items():
        if k not in (1, 2) and not G.is_trivial():
            raise InconsistentState(f"one-step quotient of {e} is nonzero in degree {k}")
    delta = connecting_map(ledger, e, e1, y.h2)
    pair = _checked(e, "pair", splice(
        y.h1, y.h2, delta, e2, ledger.evidence,
        labels=("0", "H1(Y)", "H1(X)", "H1_Q(X,Y)", "H2(Y)", "H2(X)", "H2_Q(X,Y)", "0"),
    ), state)
    triple = _checked(e, "triple", triple_sequence(y.q1, y.q2, y.projection, delta, e2, ledger.evidence), state)
    projection = _block_projection(y.projection, pair.h2, triple.h2, len(e2))
    x = NodeState(e.source, pair.h1, pair.h2, triple.h1, triple.h2, projection)
    log.info("%s: H1 = %s, H2 = %s, Q1 = %s, Q2 = %s", e.source, x.h1, x.h2, x.q1, x.q2)
    return x, pair.cancelled


def propagate(ledger: Ledger, path: Sequence[LedgerEdge], state: LedgerState | None = None) -> LedgerState:
    """
    Walk ``path`` (edges listed from the top model down) upwards from the base.
    Models already present in ``state`` must agree with what this path gives.
    """
    if not path or path[-1].target != ledger.base:
        raise InconsistentState("propagation paths must end at the base model")
    state = state or LedgerState()
    current = state.nodes.get(ledger.base) or base_state(ledger)
    state.nodes.setdefault(ledger.base, current)
    for e in reversed(path):
        key = (e, current)
        if key not in state.steps:
            state.steps[key] = step(ledger, e, current, state)
        x, cancelled = state.steps[key]
        known = state.nodes.get(e.source)
        if known is not None and known.classified() != x.classified():
            raise InconsistentState(
                f"{e.source} differs between propagation orders: "
                f"{[str(g) for g in known.classified()]} vs {[str(g) for g in x.classified()]}"
            )
        state.nodes.setdefault(e.source, x)
        state.cancellations[e] = cancelled
        current = x
    return state
