# tiling1d/bd.py
"""
Barge-Diamond approximant of a primitive substitution.

Tile edge ``a`` runs a- -> a+; the transition edge ``a|b`` of an allowed
two-letter word runs a+ -> b-. The substitution maps a tile edge onto the
tiles of its image joined by their transitions and a transition ab onto the
transition between the last letter of σ(a) and the first of σ(b), so the
self-map is cellular without subdivision.
"""
from __future__ import annotations

from dataclasses import dataclass

from common.errors import InvalidBoundary
from common.logger import get_logger
from cw import CellularMap, CWComplex, Edge

from .substitution import Substitution1D

log = get_logger(__name__)


def start_vertex(a: str) -> str:
    return f"{a}-"


def end_vertex(a: str) -> str:
    return f"{a}+"


def transition_edge(a: str, b: str) -> str:
    return f"{a}|{b}"


@dataclass(frozen=True)
class BDComplex:
    substitution: Substitution1D
    complex: CWComplex
    self_map: CellularMap
    transitions: tuple[tuple[str, str], ...]

    @property
    def tile_edges(self) -> tuple[str, ...]:
        return self.substitution.alphabet


def bd_complex(s: Substitution1D) -> BDComplex:
    s.require_primitive()
    words = sorted(s.allowed_words(2), key=lambda w: (s.alphabet.index(w[0]), s.alphabet.index(w[1])))
    vertices = tuple(v for a in s.alphabet for v in (start_vertex(a), end_vertex(a)))
    edges = [Edge(a, start_vertex(a), end_vertex(a)) for a in s.alphabet]
    edges += [Edge(transition_edge(a, b), end_vertex(a), start_vertex(b)) for a, b in words]
    K = CWComplex(f"BD({s.name or s})", vertices, tuple(edges))
    if not K.is_connected():
        raise InvalidBoundary(f"{K.name} is not connected")

    vmap = {}
    emap = {}
    for a in s.alphabet:
        img = s.image(a)
        vmap[start_vertex(a)] = start_vertex(img[0])
        vmap[end_vertex(a)] = end_vertex(img[-1])
        path = [(img[0], 1)]
        for x, y in zip(img, img[1:]):
            path += [(transition_edge(x, y), 1), (y, 1)]
        emap[a] = path
    for a, b in words:
        emap[transition_edge(a, b)] = [(transition_edge(s.image(a)[-1], s.image(b)[0]), 1)]
    phi = CellularMap.build(K, K, vmap, emap)
    _ = phi.pullback  # validates d∘d and commutation
    log.debug("%s: %d vertices, %d edges", K.name, len(vertices), len(edges))
    return BDComplex(s, K, phi, tuple(words))
