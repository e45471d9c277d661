# abelian/snf.py
"""
Smith normal form over the integers and the lattice helpers built on it.

- Pivot is always the smallest nonzero entry (by absolute value) still in play,
  which keeps intermediate entries small on the matrices this project sees.
- Row and column operations are mirrored into U/V and their inverses, so
  callers get U·M·V = D together with U⁻¹ and V⁻¹ without a second pass.
- Output is deterministic for a given input.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence

from common.logger import get_logger

from .matrix import IntMatrix, Vector

log = get_logger(__name__)


@dataclass(frozen=True)
class SnfDecomposition:
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix
    V_inv: IntMatrix

    @property
    def diagonal(self) -> tuple[int, ...]:
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))

    @property
    def rank(self) -> int:
        return sum(1 for d in self.diagonal if d != 0)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d != 0)


class _Work:
    """Mutable working copy; every operation is mirrored into U, U⁻¹, V, V⁻¹."""

    def __init__(self, m: IntMatrix):
        self.m, self.n = m.rows, m.cols
        self.a = m.to_rows()
        self.u = IntMatrix.identity(self.m).to_rows()
        self.ui = IntMatrix.identity(self.m).to_rows()
        self.v = IntMatrix.identity(self.n).to_rows()
        self.vi = IntMatrix.identity(self.n).to_rows()

    # row_i += c * row_t
    def add_row(self, i: int, t: int, c: int) -> None:
        if c == 0:
            return
        for mat, width in ((self.a, self.n), (self.u, self.m)):
            ri, rt = mat[i], mat[t]
            for j in range(width):
                ri[j] += c * rt[j]
        for r in self.ui:
            r[t] -= c * r[i]

    # col_j += c * col_t
    def add_col(self, j: int, t: int, c: int) -> None:
        if c == 0:
            return
        for mat in (self.a, self.v):
            for r in mat:
                r[j] += c * r[t]
        rt, rj = self.vi[t], self.vi[j]
        for k in range(self.n):
            rt[k] -= c * rj[k]

    def swap_rows(self, i: int, t: int) -> None:
        if i == t:
            return
        for mat in (self.a, self.u):
            mat[i], mat[t] = mat[t], mat[i]
        for r in self.ui:
            r[i], r[t] = r[t], r[i]

    def swap_cols(self, j: int, t: int) -> None:
        if j == t:
            return
        for mat in (self.a, self.v):
            for r in mat:
                r[j], r[t] = r[t], r[j]
        self.vi[j], self.vi[t] = self.vi[t], self.vi[j]

    def negate_row(self, i: int) -> None:
        for mat in (self.a, self.u):
            mat[i] = [-x for x in mat[i]]
        for r in self.ui:
            r[i] = -r[i]


def _smallest(work: _Work, t: int, cells) -> Optional[tuple[int, int]]:
    best, where = None, None
    for i, j in cells:
        x = work.a[i][j]
        if x != 0 and (best is None or abs(x) < best):
            best, where = abs(x), (i, j)
    return where


def smith_normal_form(M: IntMatrix) -> SnfDecomposition:
    w = _Work(M)
    m, n = w.m, w.n
    for t in range(min(m, n)):
        pos = _smallest(w, t, ((i, j) for i in range(t, m) for j in range(t, n)))
        if pos is None:
            break
        w.swap_rows(t, pos[0])
        w.swap_cols(t, pos[1])
        while True:
            p = w.a[t][t]
            for i in range(t + 1, m):
                w.add_row(i, t, -(w.a[i][t] // p))
            for j in range(t + 1, n):
                w.add_col(j, t, -(w.a[t][j] // p))
            line = [(i, t) for i in range(t + 1, m)] + [(t, j) for j in range(t + 1, n)]
            pos = _smallest(w, t, line)
            if pos is not None:
                # a remainder survived; it is smaller than the pivot
                w.swap_rows(t, pos[0])
                w.swap_cols(t, pos[1])
                continue
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if w.a[i][j] % p != 0),
                None,
            )
            if bad is None:
                break
            w.add_row(t, bad[0], 1)
        if w.a[t][t] < 0:
            w.negate_row(t)

    def freeze(rows: list[list[int]], cols: int) -> IntMatrix:
        return IntMatrix.from_rows(rows, cols)

    dec = SnfDecomposition(
        U=freeze(w.u, m), D=freeze(w.a, n), V=freeze(w.v, n),
        U_inv=freeze(w.ui, m), V_inv=freeze(w.vi, n),
    )
    log.debug("snf %dx%d -> invariant factors %s", m, n, dec.invariant_factors)
    return dec


# ---------- lattice helpers ----------

def matrix_rank(M: IntMatrix) -> int:
    return smith_normal_form(M).rank


def kernel_basis(M: IntMatrix) -> IntMatrix:
    """Columns form a basis of the saturated lattice ker M ⊂ Z^cols."""
    dec = smith_normal_form(M)
    return dec.V.select_cols(range(dec.rank, M.cols))


def column_lattice_basis(M: IntMatrix) -> IntMatrix:
    """Columns form a basis of the lattice spanned by the columns of M."""
    dec = smith_normal_form(M)
    r = dec.rank
    out = dec.U_inv.select_cols(range(r))
    d = dec.diagonal
    return IntMatrix.from_columns([tuple(d[j] * x for x in out.col(j)) for j in range(r)], M.rows)


def solve_integer(A: IntMatrix, b: Sequence[int]) -> Optional[Vector]:
    """An integer x with A·x = b, or None when none exists."""
    if len(b) != A.rows:
        raise ValueError("right-hand side length does not match")
    dec = smith_normal_form(A)
    c = dec.U.apply(b)
    r = dec.rank
    if any(c[i] != 0 for i in range(r, A.rows)):
        return None
    y = [0] * A.cols
    for i in range(r):
        q, rem = divmod(c[i], dec.D[i, i])
        if rem:
            return None
        y[i] = q
    return dec.V.apply(y)


def in_column_span(A: IntMatrix, b: Sequence[int]) -> bool:
    if not any(b):
        return True
    if A.cols == 0:
        return False
    return solve_integer(A, b) is not None
