# chair/ledger.py
"""
The chair-family ledger: nine models joined by twelve degeneration edges,
the connecting-map data for each edge and the splitting evidence.

Models are coded by two characters, the arrow decoration (X, / or 0) and
the edge decoration (+, - or 0); ``00`` is the solenoid and ``X0`` the chair.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Any, Iterator

import networkx as nx

from common.errors import InconsistentState, InputError
from common.logger import get_logger
from common.models import get_model_loader
from common.schema import require

log = get_logger(__name__)

ARROWS = ("X", "/", "0")
DECORATIONS = ("+", "-", "0")
LABELS = ("A", "B", "C")
SOURCES = ("quoted", "quoted-form", "no-target")


@dataclass(frozen=True, order=True)
class ModelId:
    arrow: str
    edge: str

    def __post_init__(self) -> None:
        if self.arrow not in ARROWS or self.edge not in DECORATIONS:
            raise InputError(f"no chair-family model ({self.arrow},{self.edge})")

    @classmethod
    def parse(cls, text: str) -> "ModelId":
        code = text.strip().replace("−", "-").replace(",", "").replace("(", "").replace(")", "")
        if len(code) != 2:
            raise InputError(f"cannot read model code '{text}'")
        return cls(code[0], code[1])

    @property
    def code(self) -> str:
        return self.arrow + self.edge

    def __str__(self) -> str:
        return f"({self.arrow},{self.edge})"


@dataclass(frozen=True)
class LedgerEdge:
    source: ModelId
    target: ModelId
    degeneration: str

    def __post_init__(self) -> None:
        if self.degeneration not in LABELS:
            raise InputError(f"unknown degeneration label '{self.degeneration}'")

    def __str__(self) -> str:
        return f"{self.source} -{self.degeneration}-> {self.target}"


@dataclass(frozen=True)
class DeltaEntry:
    """Connecting map of one edge in the classified coordinates of H^2(target)."""
    edge: tuple[ModelId, ModelId]
    values: tuple[int, ...]
    source: str
    citation: str

    @property
    def is_zero(self) -> bool:
        return not any(self.values)


@dataclass(frozen=True)
class Ledger:
    nodes: tuple[ModelId, ...]
    edges: tuple[LedgerEdge, ...]
    deltas: tuple[DeltaEntry, ...]
    base: ModelId
    top: ModelId
    evidence: frozenset[int] = frozenset()
    identifications: tuple[tuple[ModelId, tuple[str, ...]], ...] = ()
    expected: tuple[tuple[str, tuple[tuple[ModelId, str], ...]], ...] = ()

    def __post_init__(self) -> None:
        if len(set(self.nodes)) != 9:
            raise InconsistentState(f"ledger needs nine distinct models, got {len(set(self.nodes))}")
        if len(set((e.source, e.target) for e in self.edges)) != 12:
            raise InconsistentState("ledger needs twelve distinct edges")
        known = set(self.nodes)
        for e in self.edges:
            if e.source not in known or e.target not in known:
                raise InconsistentState(f"edge {e} leaves the ledger")
        pairs = {(e.source, e.target) for e in self.edges}
        for d in self.deltas:
            if d.edge not in pairs:
                raise InconsistentState(f"δ recorded for {d.edge[0]} -> {d.edge[1]}, which is not an edge")
            if d.source not in SOURCES:
                raise InconsistentState(f"δ source '{d.source}' is not one of {SOURCES}")
            if d.source == "no-target" and not d.is_zero:
                raise InconsistentState(f"δ on {d.edge[0]} -> {d.edge[1]} is marked no-target but is nonzero")
        if not nx.is_directed_acyclic_graph(self.graph):
            raise InconsistentState("degeneration diagram has a cycle")

    # ---------- lookup ----------

    @cached_property
    def graph(self) -> nx.DiGraph:
        G = nx.DiGraph()
        G.add_nodes_from(self.nodes)
        for e in self.edges:
            G.add_edge(e.source, e.target, edge=e, label=e.degeneration)
        return G

    def edge(self, source: ModelId, target: ModelId) -> LedgerEdge:
        try:
            return self.graph.edges[source, target]["edge"]
        except KeyError as exc:
            raise InputError(f"no edge {source} -> {target}") from exc

    def delta(self, e: LedgerEdge) -> DeltaEntry | None:
        for d in self.deltas:
            if d.edge == (e.source, e.target):
                return d
        return None

    def maximal_paths(self) -> Iterator[tuple[LedgerEdge, ...]]:
        """Every degeneration chain from the top model down to the base, in a fixed order."""
        paths = sorted(nx.all_simple_paths(self.graph, self.top, self.base), key=lambda p: [m.code for m in p])
        for nodes in paths:
            yield tuple(self.edge(a, b) for a, b in zip(nodes, nodes[1:]))

    def identified_patches(self, model: ModelId) -> tuple[str, ...]:
        return dict(self.identifications).get(model, ())

    def expected_table(self, name: str) -> dict[ModelId, str]:
        return dict(dict(self.expected).get(name, ()))

    # ---------- JSON ----------

    @classmethod
    def from_json(cls, payload: Any, where: str = "ledger") -> "Ledger":
        nodes = tuple(ModelId.parse(n) for n in require(payload, "nodes", list, where))
        edges = []
        for i, raw in enumerate(require(payload, "edges", list, where)):
            here = f"{where}.edges[{i}]"
            edges.append(LedgerEdge(
                ModelId.parse(require(raw, "source", str, here)),
                ModelId.parse(require(raw, "target", str, here)),
                require(raw, "degeneration", str, here),
            ))
        deltas = []
        for i, raw in enumerate(payload.get("deltas", [])):
            here = f"{where}.deltas[{i}]"
            a, b = require(raw, "edge", list, here)
            deltas.append(DeltaEntry(
                (ModelId.parse(a), ModelId.parse(b)),
                tuple(int(x) for x in require(raw, "values", list, here)),
                require(raw, "source", str, here),
                str(raw.get("citation", "")),
            ))
        evidence = frozenset(int(p) for p in payload.get("split_evidence", {}).get("primes", []))
        idents = tuple(
            (ModelId.parse(k), tuple(v)) for k, v in payload.get("identifications", {}).items()
        )
        expected = tuple(
            (name, tuple((ModelId.parse(k), str(v)) for k, v in table.items()))
            for name, table in payload.get("expected", {}).items()
        )
        return cls(
            nodes, tuple(edges), tuple(deltas),
            ModelId.parse(payload.get("base", "00")), ModelId.parse(payload.get("top", "X+")),
            evidence, idents, expected,
        )


def load_ledger(name_or_path: str = "chair_ledger") -> Ledger:
    ledger = Ledger.from_json(get_model_loader().load(name_or_path), name_or_path)
    log.debug("ledger %s: %d models, %d edges, %d δ entries", name_or_path,
              len(ledger.nodes), len(ledger.edges), len(ledger.deltas))
    return ledger
