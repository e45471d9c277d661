# locgroups/kernels.py
"""
Kernels, cokernels and exactness for homomorphisms of limit groups.

Quotients are classified in two passes. The torsion-free part comes from the
rational projection that kills the image: each non-torsion generator of the
target lands in the projected lattice, and the generators are grouped by the
prime support of their summand, widest support first. The torsion part is
read off finite stages B_k / (S ∩ B_k) and accepted once doubling the depth
no longer changes it; a quotient whose torsion keeps growing (a Prüfer
summand) is reported as unclassifiable.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Callable, Sequence

from abelian import (
    AbHom,
    ExactnessCheck,
    IntMatrix,
    Presentation,
    column_lattice_basis,
    hstack,
    kernel_basis,
    matrix_rank,
)
from common.config import get_stage_params
from common.errors import NotComposable, Unclassifiable
from common.logger import get_logger

from .limitgroup import LimitGroup, RationalVector, Summand, _canonical
from .lochom import LocHom, _residue
from .stages import (
    element_depth,
    embedding,
    generator,
    in_subgroup,
    is_trivial,
    relation_depth,
    relation_lattice,
    stage_coords,
)

log = get_logger(__name__)

ImagesAt = Callable[[int], list[RationalVector]]


def _integral_columns(columns: Sequence[Sequence[Fraction]], nrows: int) -> IntMatrix:
    """Each column scaled by the lcm of its denominators."""
    out = []
    for col in columns:
        col = [Fraction(q) for q in col]
        m = math.lcm(*(q.denominator for q in col)) if col else 1
        out.append(tuple(int(q * m) for q in col))
    return IntMatrix.from_columns(out, nrows)


def rational_rank(rows: Sequence[Sequence[Fraction]], ncols: int) -> int:
    """Rank over Q of a rational matrix given by rows."""
    if not rows or not ncols:
        return 0
    cols = [tuple(Fraction(r[j]) for r in rows) for j in range(ncols)]
    return matrix_rank(_integral_columns(cols, len(rows)))


# ---------- torsion-free part ----------

def _free_part(target: LimitGroup, spans: Sequence[RationalVector]) -> list[Summand]:
    nt = [i for i, s in enumerate(target.summands) if not s.is_torsion]
    if not nt:
        return []
    M = _integral_columns([[v[i] for i in nt] for v in spans], len(nt))
    # rows of Pi are the images of the non-torsion generators in Q^r / span
    Pi = kernel_basis(M.T) if M.cols else IntMatrix.identity(len(nt))
    r = Pi.cols
    if r == 0:
        return []
    vecs = {i: Pi.row(pos) for pos, i in enumerate(nt)}
    supports = {i: target.summands[i].support for i in nt}

    def rank_of(idx: Sequence[int]) -> int:
        if not idx:
            return 0
        return matrix_rank(IntMatrix.from_columns([vecs[i] for i in idx], r))

    out: list[Summand] = []
    layers = sorted({supports[i] for i in nt if supports[i]}, key=lambda P: (-len(P), sorted(P)))
    for P in layers:
        base = [i for i in nt if supports[i] > P]
        exact = sorted((i for i in nt if supports[i] == P), key=lambda i: (-target.summands[i].n, i))
        chosen: list[int] = []
        current = rank_of(base)
        for i in exact:
            if rank_of(base + chosen + [i]) > current:
                chosen.append(i)
                current += 1
        for i in chosen:
            s = target.summands[i]
            content = math.gcd(*vecs[i])
            for p in P:
                while content % p == 0:
                    content //= p
            out.append(Summand.loc(s.n, content * s.tag))
    localized = rank_of([i for i in nt if supports[i]])
    out += [Summand.free()] * (r - localized)
    return out


# ---------- torsion part ----------

def _stage_torsion(target: LimitGroup, images_at: ImagesAt, k: int) -> tuple[int, ...]:
    n = len(target)
    imgs = images_at(2 * k)
    depth = element_depth(target, [*imgs, *target.relations], at_least=2 * k)
    lattice = hstack(
        IntMatrix.from_columns([stage_coords(target, v, depth) for v in imgs], n),
        relation_lattice(target, depth),
        rows=n,
    )
    joint = hstack(embedding(target, k, depth), -lattice, rows=n)
    inside = kernel_basis(joint).select_rows(range(n))
    return Presentation(n, column_lattice_basis(inside)).group.torsion


def _torsion_part(target: LimitGroup, images_at: ImagesAt) -> tuple[int, ...]:
    if not len(target):
        return ()
    params = get_stage_params()
    k = max(params.initial_depth, relation_depth(target), 1)
    previous = _stage_torsion(target, images_at, k)
    for _ in range(params.max_doublings):
        k *= 2
        current = _stage_torsion(target, images_at, k)
        if current == previous:
            return current
        log.debug("torsion at depth %d: %s -> %s", k, previous, current)
        previous = current
    raise Unclassifiable(
        "torsion of the quotient does not stabilise (divisible torsion)",
        data={"depth": k, "last_torsion": list(previous), "target": target.to_json()},
    )


def _quotient(target: LimitGroup, images_at: ImagesAt, spans: Sequence[RationalVector]) -> LimitGroup:
    free = _free_part(target, [*spans, *target.relations])
    torsion = _torsion_part(target, images_at)
    return _canonical([Summand.torsion(t) for t in torsion] + free)


# ---------- public operations ----------

def classify_presented(G: LimitGroup) -> LimitGroup:
    """Relation-free canonical form of a presented limit group."""
    return _quotient(G, lambda depth: [], ())


def loc_cokernel(h: LocHom) -> LimitGroup:
    n = len(h.source)

    def images_at(depth: int) -> list[RationalVector]:
        return [h.image_of_generator(j, depth) for j in range(n)]

    return _quotient(h.target, images_at, [h.column(j) for j in range(n)])


def loc_kernel(h: LocHom) -> LimitGroup:
    """
    Kernel of h. Beyond the zero map this needs relation-free groups and
    rationally independent images of the non-torsion source summands.
    """
    if h.is_zero():
        return h.source.classified
    if h.source.is_presented or h.target.is_presented:
        raise Unclassifiable("kernel of a map between presented groups", data={"hom": h.to_json()})
    src, tgt = h.source.summands, h.target.summands
    dead = [j for j in range(len(src)) if is_trivial(h.target, h.column(j))]
    live_free = [j for j in range(len(src)) if j not in dead and not src[j].is_torsion]
    free_rows = [i for i, t in enumerate(tgt) if not t.is_torsion]
    block = [[h.matrix[i][j] for j in live_free] for i in free_rows]
    if rational_rank(block, len(live_free)) != len(live_free):
        raise Unclassifiable(
            "images of the torsion-free summands are rationally dependent",
            data={"hom": h.to_json(), "columns": live_free},
        )
    live_torsion = [j for j in range(len(src)) if j not in dead and src[j].is_torsion]
    torsion_rows = [i for i, t in enumerate(tgt) if t.is_torsion]
    finite = LimitGroup.zero()
    if live_torsion:
        a = Presentation.cyclic(*(src[j].n for j in live_torsion))
        b = Presentation.cyclic(*(tgt[i].n for i in torsion_rows))
        rows = [[_residue(h.matrix[i][j], tgt[i].n) for j in live_torsion] for i in torsion_rows]
        hom = AbHom(a, b, IntMatrix.from_rows(rows, len(live_torsion)))
        finite = LimitGroup.from_fg(hom.kernel())
    kept = LimitGroup.of(*(src[j] for j in dead))
    return kept.direct_sum(finite).classified


def _stage_presentation(G: LimitGroup, depth: int) -> Presentation:
    return Presentation(len(G), relation_lattice(G, depth))


def _kernel_in_image(f: LocHom, g: LocHom) -> bool:
    params = get_stage_params()
    middle = g.source
    n = len(middle)
    f_images = lambda depth: [f.image_of_generator(j, depth) for j in range(len(f.source))]  # noqa: E731
    for k in (params.initial_depth, 2 * params.initial_depth):
        imgs = [g.image_of_generator(j, k) for j in range(n)]
        depth = element_depth(g.target, [*imgs, *g.target.relations], at_least=k)
        stage = AbHom(
            Presentation.free(n),
            _stage_presentation(g.target, depth),
            IntMatrix.from_columns([stage_coords(g.target, v, depth) for v in imgs], len(g.target)),
        )
        for x in stage.preimage_lattice.columns():
            v = tuple(c * generator(s, k) for c, s in zip(x, middle.summands))
            j = 2 * k
            for _ in range(params.max_doublings):
                if in_subgroup(middle, v, f_images(j)):
                    break
                j *= 2
            else:
                return False
    return True


def loc_is_exact(sequence: Sequence[LocHom]) -> ExactnessCheck:
    """Exactness at every inner object; ``index`` is the zero-based object position."""
    for i, (f, g) in enumerate(zip(sequence, sequence[1:])):
        if f.target != g.source:
            raise NotComposable(f"map {i} target does not match map {i + 1} source")
    for i, (f, g) in enumerate(zip(sequence, sequence[1:]), start=1):
        if not g.compose(f).is_zero():
            log.debug("composition into object %d is not zero", i)
            return ExactnessCheck(False, i, "composition is not zero")
        if not _kernel_in_image(f, g):
            log.debug("kernel at object %d is larger than the image", i)
            return ExactnessCheck(False, i, "kernel is larger than image")
    return ExactnessCheck(True)


