# locgroups/stages.py
"""
Finite-stage realisation of limit groups.

At depth k a summand Z[1/n] is realised as n^-k Z with generator n^-k; Z and
Z_t are their own stages. Elements become integer coordinate vectors once the
depth is large enough; torsion coordinates are residues.
"""
from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

from abelian import IntMatrix, hstack, in_column_span
from common.errors import InadmissibleHom

from .limitgroup import LimitGroup, Summand, support


def generator(s: Summand, depth: int) -> Fraction:
    return Fraction(1, s.n ** depth) if s.is_loc else Fraction(1)


def scale(s: Summand, depth: int) -> int:
    return s.n ** depth if s.is_loc else 1


def coordinate_depth(s: Summand, q: Fraction) -> int:
    """Smallest depth at which q is an integer multiple of the stage generator."""
    if s.is_torsion or q.denominator == 1:
        return 0
    if not s.is_loc or not support(q.denominator) <= s.support:
        raise InadmissibleHom(f"{q} is not an element of {s.render()}")
    k = 0
    while (s.n ** k) % q.denominator:
        k += 1
    return k


def element_depth(G: LimitGroup, vectors: Iterable[Sequence[Fraction]], at_least: int = 0) -> int:
    depth = at_least
    for v in vectors:
        for s, q in zip(G.summands, v):
            depth = max(depth, coordinate_depth(s, Fraction(q)))
    return depth


def relation_depth(G: LimitGroup) -> int:
    return element_depth(G, G.relations)


def stage_coords(G: LimitGroup, v: Sequence[Fraction], depth: int) -> tuple[int, ...]:
    out = []
    for s, q in zip(G.summands, v):
        q = Fraction(q)
        if s.is_torsion:
            if math.gcd(q.denominator, s.n) != 1:
                raise InadmissibleHom(f"{q} has no residue modulo {s.n}")
            out.append(q.numerator * pow(q.denominator, -1, s.n) % s.n)
            continue
        x = q * scale(s, depth)
        if x.denominator != 1:
            raise InadmissibleHom(f"{q} does not live at depth {depth} of {s.render()}")
        out.append(int(x))
    return tuple(out)


def relation_lattice(G: LimitGroup, depth: int) -> IntMatrix:
    """Columns spanning the zero element at the given depth: t·e_i for Z_t and the relations."""
    n = len(G.summands)
    cols = [tuple(s.n if i == j else 0 for i in range(n)) for j, s in enumerate(G.summands) if s.is_torsion]
    cols += [stage_coords(G, r, depth) for r in G.relations]
    return IntMatrix.from_columns(cols, n)


def embedding(G: LimitGroup, lower: int, upper: int) -> IntMatrix:
    """Stage ``lower`` inside stage ``upper`` in generator coordinates."""
    return IntMatrix.diagonal([scale(s, upper - lower) for s in G.summands], len(G.summands), len(G.summands))


def is_trivial(G: LimitGroup, v: Sequence[Fraction]) -> bool:
    depth = element_depth(G, [v, *G.relations])
    return in_column_span(relation_lattice(G, depth), stage_coords(G, v, depth))


def in_subgroup(G: LimitGroup, v: Sequence[Fraction], spans: Sequence[Sequence[Fraction]]) -> bool:
    """Whether v lies in the Z-span of ``spans`` plus the relations of G."""
    depth = element_depth(G, [v, *spans, *G.relations])
    cols = [stage_coords(G, w, depth) for w in spans]
    lattice = hstack(IntMatrix.from_columns(cols, len(G.summands)), relation_lattice(G, depth))
    return in_column_span(lattice, stage_coords(G, v, depth))
