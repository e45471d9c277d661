# abelian/exact.py
"""Exactness of finite sequences of presented homomorphisms."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from common.errors import NotComposable
from common.logger import get_logger

from .groups import AbHom
from .matrix import hstack
from .snf import in_column_span

log = get_logger(__name__)


@dataclass(frozen=True)
class ExactnessCheck:
    """
    ``index`` is the zero-based position of the first object (not map) where
    exactness fails; objects are numbered G_0 --h_0--> G_1 --h_1--> ...
    """
    ok: bool
    index: Optional[int] = None
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


def check_composable(sequence: Sequence[AbHom]) -> None:
    for i, (h, g) in enumerate(zip(sequence, sequence[1:])):
        if h.target != g.source:
            raise NotComposable(f"map {i} target does not match map {i + 1} source")


def exact_at(incoming: AbHom, outgoing: AbHom) -> tuple[bool, str]:
    """im(incoming) == ker(outgoing) inside the shared middle group."""
    if not outgoing.compose(incoming).is_zero():
        return False, "composition is not zero"
    image = hstack(incoming.matrix, incoming.target.relations)
    for v in outgoing.preimage_lattice.columns():
        if not in_column_span(image, v):
            return False, "kernel is larger than image"
    return True, ""


def is_exact(sequence: Sequence[AbHom]) -> ExactnessCheck:
    check_composable(sequence)
    for i in range(1, len(sequence)):
        ok, reason = exact_at(sequence[i - 1], sequence[i])
        if not ok:
            log.debug("sequence not exact at object %d: %s", i, reason)
            return ExactnessCheck(False, i, reason)
    return ExactnessCheck(True)
