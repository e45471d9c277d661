# complexes/sampling.py
"""Random small cochain complexes and injective cochain maps, split and non-split, for property tests."""
from __future__ import annotations

from abelian import IntMatrix, block_diagonal, column_lattice_basis, hstack, solve_integer, vstack

from .cochain import CochainComplex, CochainMap

DEGREES = (0, 1, 2)


def unimodular_pair(rng, n):
    """(P, P⁻¹) built from elementary operations with entries kept small."""
    p = IntMatrix.identity(n).to_rows()
    q = IntMatrix.identity(n).to_rows()
    for _ in range(2 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-1, 1])
        # P <- E P with E = I + c e_i e_j^T;  P⁻¹ <- P⁻¹ E⁻¹
        p[i] = [x + c * y for x, y in zip(p[i], p[j])]
        for row in q:
            row[j] -= c * row[i]
    return IntMatrix.from_rows(p, n), IntMatrix.from_rows(q, n)


def normal_form_pieces(rng, max_per_degree=3):
    """Free summands and arrows Z --m--> Z, as (ranks, d) in block normal form."""
    ranks = {k: 0 for k in DEGREES}
    arrows = []
    for _ in range(rng.randint(1, 4)):
        if rng.random() < 0.5:
            k = rng.choice(DEGREES)
            if ranks[k] < max_per_degree:
                ranks[k] += 1
        else:
            k = rng.choice(DEGREES[:-1])
            if ranks[k] < max_per_degree and ranks[k + 1] < max_per_degree:
                arrows.append((k, ranks[k], ranks[k + 1], rng.choice([1, 2, 3])))
                ranks[k] += 1
                ranks[k + 1] += 1
    d = {}
    for k in DEGREES:
        rows = [[0] * ranks[k] for _ in range(ranks.get(k + 1, 0))]
        for deg, src, tgt, m in arrows:
            if deg == k:
                rows[tgt][src] = m
        d[k] = IntMatrix.from_rows(rows, ranks[k])
    return ranks, d


def conjugate(ranks, d, changes):
    return {
        k: changes[k + 1][0] @ d[k] @ changes[k][1] if k + 1 in changes else d[k]
        for k in DEGREES
    }


def random_pair(rng):
    """(f, Y, X) with X = Y ⊕ W, f = c·inclusion, both sides scrambled by unimodular changes."""
    y_ranks, y_d = normal_form_pieces(rng)
    w_ranks, w_d = normal_form_pieces(rng)
    x_ranks = {k: y_ranks[k] + w_ranks[k] for k in DEGREES}
    x_d = {k: block_diagonal(y_d[k], w_d[k]) for k in DEGREES}
    c = rng.choice([1, 1, 2, 3])
    f = {
        k: vstack(IntMatrix.identity(y_ranks[k]).scale(c), IntMatrix.zeros(w_ranks[k], y_ranks[k]))
        for k in DEGREES
    }
    py = {k: unimodular_pair(rng, y_ranks[k]) for k in DEGREES}
    px = {k: unimodular_pair(rng, x_ranks[k]) for k in DEGREES}
    Y = CochainComplex.build(y_ranks, conjugate(y_ranks, y_d, py))
    X = CochainComplex.build(x_ranks, conjugate(x_ranks, x_d, px))
    fmap = CochainMap.build(Y, X, {k: px[k][0] @ f[k] @ py[k][1] for k in DEGREES})
    return fmap


def _lattice_basis(M: IntMatrix) -> IntMatrix:
    if not (M.rows and M.cols):
        return IntMatrix.zeros(M.rows, 0)
    return column_lattice_basis(M)


def _small_columns(rng, count: int, rows: int) -> IntMatrix:
    return IntMatrix.from_columns(
        [[rng.randint(-3, 3) for _ in range(rows)] for _ in range(count)], rows
    )


def random_subcomplex_pair(rng, max_new=2, attempts=50):
    """
    Injective f: Y -> X onto a random subcomplex lattice of a random X.

    L^0 is spanned by fresh small vectors, L^{k+1} by d(L^k) and fresh
    vectors; f sends Y^k to a basis of L^k. The image need not be a direct
    summand, so the quotient can carry torsion. Samples with Y = 0 are
    redrawn.
    """
    for _ in range(attempts):
        pieces = [normal_form_pieces(rng) for _ in range(2)]
        x_ranks = {k: sum(r[k] for r, _ in pieces) for k in DEGREES}
        x_d = {k: block_diagonal(*(d[k] for _, d in pieces)) for k in DEGREES}
        px = {k: unimodular_pair(rng, x_ranks[k]) for k in DEGREES}
        X = CochainComplex.build(x_ranks, conjugate(x_ranks, x_d, px))

        f: dict[int, IntMatrix] = {}
        pushed = IntMatrix.zeros(x_ranks[DEGREES[0]], 0)
        for k in DEGREES:
            fresh = _small_columns(rng, rng.randint(0, max_new) if x_ranks[k] else 0, x_ranks[k])
            f[k] = _lattice_basis(hstack(pushed, fresh))
            if k + 1 in x_ranks:
                pushed = X.differential(k) @ f[k]
        y_ranks = {k: f[k].cols for k in DEGREES}
        if not any(y_ranks.values()):
            continue
        y_d = {}
        for k in DEGREES[:-1]:
            image = X.differential(k) @ f[k]
            if not y_ranks[k + 1]:
                y_d[k] = IntMatrix.zeros(0, y_ranks[k])
                continue
            cols = [solve_integer(f[k + 1], c) for c in image.columns()]
            if any(c is None for c in cols):
                break
            y_d[k] = IntMatrix.from_columns(cols, y_ranks[k + 1])
        else:
            Y = CochainComplex.build(y_ranks, y_d)
            return CochainMap.build(Y, X, f)
    raise RuntimeError("no nonzero subcomplex drawn")


def direct_sum(a: CochainMap, b: CochainMap):
    """Pair a ⊕ b and the inclusions of a's spaces into it."""
    def dsum(C1: CochainComplex, C2: CochainComplex) -> CochainComplex:
        ranks = {k: C1.rank(k) + C2.rank(k) for k in DEGREES}
        d = {k: block_diagonal(C1.differential(k), C2.differential(k)) for k in DEGREES}
        return CochainComplex.build(ranks, d)

    def incl(C1: CochainComplex, C2: CochainComplex, total: CochainComplex) -> CochainMap:
        mats = {
            k: vstack(IntMatrix.identity(C1.rank(k)), IntMatrix.zeros(C2.rank(k), C1.rank(k)))
            for k in DEGREES
        }
        return CochainMap.build(C1, total, mats)

    Y = dsum(a.source, b.source)
    X = dsum(a.target, b.target)
    f = CochainMap.build(Y, X, {k: block_diagonal(a.matrix(k), b.matrix(k)) for k in DEGREES})
    return f, incl(a.source, b.source, Y), incl(a.target, b.target, X)
