# cw/dot.py
"""Graphviz DOT export of CW 1-skeleta (faces listed in the graph label)."""
from __future__ import annotations

import re
from pathlib import Path

import networkx as nx

from common.logger import get_logger

from .complex import CWComplex

log = get_logger(__name__)


def _identifier(name: str) -> str:
    return re.sub(r"\W", "_", name, flags=re.ASCII) or "cw"


def to_dot(K: CWComplex) -> str:
    g = K.graph()
    g.graph["name"] = _identifier(K.name)
    if K.faces:
        faces = "; ".join(
            f"{f.name}: " + " ".join(n if s > 0 else f"{n}^-1" for n, s in f.boundary) for f in K.faces
        )
        g.graph["graph"] = {"label": f'"{faces}"'}
    return nx.nx_pydot.to_pydot(g).to_string()


def write_dot(K: CWComplex, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(to_dot(K), encoding="utf-8")
    log.info("wrote %s (%d vertices, %d edges)", path, len(K.vertices), len(K.edges))
    return path
