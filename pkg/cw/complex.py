# cw/complex.py
"""
CW complexes of dimension ≤ 2 and cellular maps between them.

Edges are oriented src -> tgt with ∂e = tgt - src. A face is a closed walk of
signed edges. Cellular maps send vertices to vertices, edges to signed edge
paths (possibly empty when the edge collapses to a vertex) and faces to formal
sums of faces; the pullback is checked to commute with d.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Mapping, Sequence

import networkx as nx

from abelian import IntMatrix
from common.errors import IncompatibleMap, InputError, InvalidBoundary
from common.schema import require
from complexes import CochainComplex, CochainMap

Step = tuple[str, int]  # (edge name, ±1)


@dataclass(frozen=True)
class Edge:
    name: str
    src: str
    tgt: str


@dataclass(frozen=True)
class Face:
    name: str
    boundary: tuple[Step, ...]


def _unique(names: Iterable[str], what: str) -> None:
    seen = set()
    for n in names:
        if n in seen:
            raise InvalidBoundary(f"duplicate {what} name '{n}'")
        seen.add(n)


@dataclass(frozen=True)
class CWComplex:
    name: str
    vertices: tuple[str, ...]
    edges: tuple[Edge, ...]
    faces: tuple[Face, ...] = ()

    def __post_init__(self) -> None:
        _unique(self.vertices, "vertex")
        _unique((e.name for e in self.edges), "edge")
        _unique((f.name for f in self.faces), "face")
        verts = set(self.vertices)
        for e in self.edges:
            if e.src not in verts or e.tgt not in verts:
                raise InvalidBoundary(f"edge '{e.name}' has an endpoint outside the vertex set")
        for f in self.faces:
            if not f.boundary:
                raise InvalidBoundary(f"face '{f.name}' has an empty boundary")
            start, end = self.walk_endpoints(f.boundary, f"face '{f.name}'")
            if start != end:
                raise InvalidBoundary(f"boundary of face '{f.name}' is not closed")

    # ---------- lookups ----------

    @cached_property
    def edge_index(self) -> dict[str, int]:
        return {e.name: i for i, e in enumerate(self.edges)}

    @cached_property
    def vertex_index(self) -> dict[str, int]:
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def face_index(self) -> dict[str, int]:
        return {f.name: i for i, f in enumerate(self.faces)}

    def edge(self, name: str) -> Edge:
        try:
            return self.edges[self.edge_index[name]]
        except KeyError as exc:
            raise InvalidBoundary(f"unknown edge '{name}' in {self.name}") from exc

    def step_endpoints(self, step: Step) -> tuple[str, str]:
        e = self.edge(step[0])
        return (e.src, e.tgt) if step[1] > 0 else (e.tgt, e.src)

    def walk_endpoints(self, path: Sequence[Step], what: str) -> tuple[str, str]:
        """(start, end) of a nonempty walk; raises when consecutive steps do not meet."""
        start, end = self.step_endpoints(path[0])
        for step in path[1:]:
            a, b = self.step_endpoints(step)
            if a != end:
                raise InvalidBoundary(f"{what}: step {step[0]} starts at {a}, expected {end}")
            end = b
        return start, end

    @property
    def dimension(self) -> int:
        return 2 if self.faces else (1 if self.edges else 0)

    # ---------- topology ----------

    def graph(self) -> nx.MultiDiGraph:
        g = nx.MultiDiGraph(name=self.name)
        g.add_nodes_from(self.vertices)
        for e in self.edges:
            g.add_edge(e.src, e.tgt, key=e.name, label=e.name)
        return g

    def is_connected(self) -> bool:
        return bool(self.vertices) and nx.is_weakly_connected(self.graph())

    def euler_characteristic(self) -> int:
        return len(self.vertices) - len(self.edges) + len(self.faces)

    @cached_property
    def cochain_complex(self) -> CochainComplex:
        nv, ne, nf = len(self.vertices), len(self.edges), len(self.faces)
        d0 = [[0] * nv for _ in range(ne)]
        for i, e in enumerate(self.edges):
            d0[i][self.vertex_index[e.tgt]] += 1
            d0[i][self.vertex_index[e.src]] -= 1
        d1 = [[0] * ne for _ in range(nf)]
        for i, f in enumerate(self.faces):
            for name, sign in f.boundary:
                d1[i][self.edge_index[name]] += sign
        ranks = {0: nv, 1: ne}
        d = {0: IntMatrix.from_rows(d0, nv)}
        if nf:
            ranks[2] = nf
            d[1] = IntMatrix.from_rows(d1, ne)
        return CochainComplex.build(ranks, d)

    # ---------- JSON ----------

    def to_json(self) -> dict:
        payload = {
            "name": self.name,
            "vertices": list(self.vertices),
            "edges": [{"name": e.name, "source": e.src, "target": e.tgt} for e in self.edges],
        }
        if self.faces:
            payload["faces"] = [
                {"name": f.name, "boundary": [[n, s] for n, s in f.boundary]} for f in self.faces
            ]
        return payload

    @classmethod
    def from_json(cls, payload: dict, where: str = "cw") -> "CWComplex":
        vertices = tuple(str(v) for v in require(payload, "vertices", list, where))
        edges = tuple(
            Edge(str(require(e, "name", str, f"{where}.edges")),
                 str(require(e, "source", str, f"{where}.edges")),
                 str(require(e, "target", str, f"{where}.edges")))
            for e in require(payload, "edges", list, where)
        )
        faces = []
        for f in payload.get("faces", []):
            steps = tuple((str(n), 1 if int(s) > 0 else -1) for n, s in require(f, "boundary", list, f"{where}.faces"))
            faces.append(Face(str(require(f, "name", str, f"{where}.faces")), steps))
        try:
            return cls(str(payload.get("name", where)), vertices, edges, tuple(faces))
        except InvalidBoundary:
            raise
        except (TypeError, ValueError) as exc:
            raise InputError(f"{where}: {exc}") from exc


def cochain_complex(K: CWComplex) -> CochainComplex:
    return K.cochain_complex


# ---------- cellular maps ----------

@dataclass(frozen=True)
class CellularMap:
    source: CWComplex
    target: CWComplex
    vertex_map: tuple[tuple[str, str], ...]
    edge_map: tuple[tuple[str, tuple[Step, ...]], ...]
    face_map: tuple[tuple[str, tuple[tuple[str, int], ...]], ...] = field(default=())

    def __post_init__(self) -> None:
        vmap = dict(self.vertex_map)
        if set(vmap) != set(self.source.vertices):
            raise IncompatibleMap("vertex assignment must cover every source vertex")
        for v, w in vmap.items():
            if w not in self.target.vertex_index:
                raise IncompatibleMap(f"vertex {v} maps to unknown vertex {w}")
        emap = dict(self.edge_map)
        if set(emap) != {e.name for e in self.source.edges}:
            raise IncompatibleMap("edge assignment must cover every source edge")
        for e in self.source.edges:
            path = emap[e.name]
            want = (vmap[e.src], vmap[e.tgt])
            if not path:
                if want[0] != want[1]:
                    raise IncompatibleMap(f"edge {e.name} collapses but its endpoints do not")
                continue
            try:
                got = self.target.walk_endpoints(path, f"image of edge {e.name}")
            except InvalidBoundary as exc:
                raise IncompatibleMap(str(exc)) from exc
            if got != want:
                raise IncompatibleMap(f"image of edge {e.name} runs {got}, expected {want}")
        fmap = dict(self.face_map)
        if set(fmap) != {f.name for f in self.source.faces}:
            raise IncompatibleMap("face assignment must cover every source face")

    @classmethod
    def build(
        cls,
        source: CWComplex,
        target: CWComplex,
        vertices: Mapping[str, str],
        edges: Mapping[str, Sequence[Step]],
        faces: Mapping[str, Mapping[str, int]] | None = None,
    ) -> "CellularMap":
        return cls(
            source,
            target,
            tuple(vertices.items()),
            tuple((k, tuple(v)) for k, v in edges.items()),
            tuple((k, tuple(v.items())) for k, v in (faces or {}).items()),
        )

    @classmethod
    def identity(cls, K: CWComplex) -> "CellularMap":
        return cls.build(
            K, K,
            {v: v for v in K.vertices},
            {e.name: ((e.name, 1),) for e in K.edges},
            {f.name: {f.name: 1} for f in K.faces},
        )

    def image_of_edge(self, name: str) -> tuple[Step, ...]:
        return dict(self.edge_map)[name]

    @cached_property
    def pullback(self) -> CochainMap:
        S, T = self.source, self.target
        f0 = [[0] * len(T.vertices) for _ in S.vertices]
        for v, w in self.vertex_map:
            f0[S.vertex_index[v]][T.vertex_index[w]] = 1
        f1 = [[0] * len(T.edges) for _ in S.edges]
        for e, path in self.edge_map:
            for name, sign in path:
                f1[S.edge_index[e]][T.edge_index[name]] += sign
        mats = {
            0: IntMatrix.from_rows(f0, len(T.vertices)),
            1: IntMatrix.from_rows(f1, len(T.edges)),
        }
        if S.faces or T.faces:
            f2 = [[0] * len(T.faces) for _ in S.faces]
            for face, terms in self.face_map:
                for name, coeff in terms:
                    f2[S.face_index[face]][T.face_index[name]] += coeff
            mats[2] = IntMatrix.from_rows(f2, len(T.faces))
        return CochainMap.build(T.cochain_complex, S.cochain_complex, mats)

    def to_json(self) -> dict:
        payload = {
            "vertices": dict(self.vertex_map),
            "edges": {e: [[n, s] for n, s in path] for e, path in self.edge_map},
        }
        if self.face_map:
            payload["faces"] = {f: dict(terms) for f, terms in self.face_map}
        return payload

    @classmethod
    def from_json(cls, payload: dict, source: CWComplex, target: CWComplex, where: str = "cellular") -> "CellularMap":
        verts = require(payload, "vertices", dict, where)
        edges = {
            k: [(str(n), 1 if int(s) > 0 else -1) for n, s in v]
            for k, v in require(payload, "edges", dict, where).items()
        }
        faces = {k: {str(n): int(c) for n, c in v.items()} for k, v in payload.get("faces", {}).items()}
        return cls.build(source, target, verts, edges, faces)


def induced_cochain_map(phi: CellularMap) -> CochainMap:
    return phi.pullback


# ---------- disjoint unions ----------

def _tagged(name: str, tag: str) -> str:
    return f"{name}.{tag}"


def disjoint_union(parts: Sequence[CWComplex], name: str | None = None) -> CWComplex:
    """Copies tagged .1, .2, ... in order."""
    vertices, edges, faces = [], [], []
    for i, K in enumerate(parts, start=1):
        tag = str(i)
        vertices += [_tagged(v, tag) for v in K.vertices]
        edges += [Edge(_tagged(e.name, tag), _tagged(e.src, tag), _tagged(e.tgt, tag)) for e in K.edges]
        faces += [
            Face(_tagged(f.name, tag), tuple((_tagged(n, tag), s) for n, s in f.boundary))
            for f in K.faces
        ]
    label = name or " + ".join(K.name for K in parts)
    return CWComplex(label, tuple(vertices), tuple(edges), tuple(faces))


def union_of_maps(maps: Sequence[CellularMap], source: CWComplex, target: CWComplex) -> CellularMap:
    """Self-maps of the parts assembled on ``disjoint_union`` of their sources/targets."""
    vmap, emap, fmap = {}, {}, {}
    for i, phi in enumerate(maps, start=1):
        tag = str(i)
        for v, w in phi.vertex_map:
            vmap[_tagged(v, tag)] = _tagged(w, tag)
        for e, path in phi.edge_map:
            emap[_tagged(e, tag)] = [(_tagged(n, tag), s) for n, s in path]
        for f, terms in phi.face_map:
            fmap[_tagged(f, tag)] = {_tagged(n, tag): c for n, c in terms}
    return CellularMap.build(source, target, vmap, emap, fmap)


def fold_map(union: CWComplex, K: CWComplex, copies: int) -> CellularMap:
    """Sends every tagged copy of K in ``union`` identically onto K."""
    vmap = {_tagged(v, str(i)): v for i in range(1, copies + 1) for v in K.vertices}
    emap = {
        _tagged(e.name, str(i)): [(e.name, 1)] for i in range(1, copies + 1) for e in K.edges
    }
    fmap = {
        _tagged(f.name, str(i)): {f.name: 1} for i in range(1, copies + 1) for f in K.faces
    }
    return CellularMap.build(union, K, vmap, emap, fmap)


@dataclass(frozen=True)
class CWPair:
    """A space over a base: factor X -> Y with optional substitution self-maps."""
    space: CWComplex
    base: CWComplex
    factor: CellularMap
    space_map: CellularMap | None = None
    base_map: CellularMap | None = None

    def __post_init__(self) -> None:
        if self.factor.source != self.space or self.factor.target != self.base:
            raise IncompatibleMap("factor map must run from the space to the base")
        for phi, K, what in ((self.space_map, self.space, "space"), (self.base_map, self.base, "base")):
            if phi is not None and (phi.source != K or phi.target != K):
                raise IncompatibleMap(f"{what} self-map must be an endomorphism of the {what}")

    @property
    def pullback(self) -> CochainMap:
        return self.factor.pullback

    @property
    def has_self_maps(self) -> bool:
        return self.space_map is not None and self.base_map is not None
