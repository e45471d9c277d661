# chair/tables.py
"""The four 3×3 tables of the chair family: absolute and quotient H^1, H^2."""
from __future__ import annotations

from dataclasses import dataclass

from common.errors import InconsistentState
from common.logger import get_logger
from locgroups import LimitGroup

from .ledger import ARROWS, DECORATIONS, Ledger, LedgerEdge, ModelId, load_ledger
from .propagate import LedgerState, propagate

log = get_logger(__name__)

TABLES = ("h1", "h2", "q1", "q2")
TITLES = {
    "h1": "H^1(Ω)",
    "h2": "H^2(Ω)",
    "q1": "H^1_Q(Ω, S2 x S2)",
    "q2": "H^2_Q(Ω, S2 x S2)",
}


@dataclass(frozen=True)
class ChairTables:
    cells: tuple[tuple[str, tuple[tuple[ModelId, LimitGroup], ...]], ...]
    paths: tuple[tuple[LedgerEdge, ...], ...]
    cancellations: tuple[int, ...]

    def table(self, name: str) -> dict[ModelId, LimitGroup]:
        return dict(dict(self.cells)[name])

    def group(self, name: str, model: ModelId | str) -> LimitGroup:
        if isinstance(model, str):
            model = ModelId.parse(model)
        return self.table(name)[model]

    def render(self, track_extensions: bool | None = None) -> str:
        blocks = []
        for name in TABLES:
            grid = self.table(name)
            rows = [[grid[ModelId(a, d)].render(track_extensions) for a in ARROWS] for d in DECORATIONS]
            width = max(len(c) for r in rows for c in r)
            lines = [TITLES[name], "      " + " | ".join(f"{a:<{width}}" for a in ARROWS)]
            for d, r in zip(DECORATIONS, rows):
                lines.append(f"  {d:<3} " + " | ".join(f"{c:<{width}}" for c in r))
            blocks.append("\n".join(lines))
        return "\n\n".join(blocks)

    def to_json(self, track_extensions: bool | None = None) -> dict:
        return {
            "tables": {
                name: {m.code: G.render(track_extensions) for m, G in self.table(name).items()}
                for name in TABLES
            },
            "paths": [[f"{e.source.code}->{e.target.code}" for e in p] for p in self.paths],
            "cancellations_per_path": list(self.cancellations),
        }


def full_tables(ledger: Ledger | None = None) -> ChairTables:
    """
    Propagates along every maximal chain from the top model to the solenoid.
    Any disagreement between chains, or a chain without exactly one
    cancellation, is an inconsistency.
    """
    ledger = ledger or load_ledger()
    state = LedgerState()
    paths = tuple(ledger.maximal_paths())
    for path in paths:
        propagate(ledger, path, state)
    counts = tuple(state.cancellation_count(p) for p in paths)
    for path, n in zip(paths, counts):
        if n != 1:
            chain = " ".join(str(e) for e in path)
            raise InconsistentState(f"chain {chain} has {n} cancellations, expected exactly one")
    missing = [m for m in ledger.nodes if m not in state.nodes]
    if missing:
        raise InconsistentState(f"models never reached: {[str(m) for m in missing]}")

    cells = []
    for name in TABLES:
        grid = tuple((m, getattr(state.nodes[m], name).classified) for m in ledger.nodes)
        cells.append((name, grid))
    log.info("chair tables complete over %d chains", len(paths))
    return ChairTables(tuple(cells), paths, counts)
