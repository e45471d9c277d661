# tiling1d/factor.py
"""Factor maps between Barge-Diamond approximants and tiling-space cohomology."""
from __future__ import annotations

from common.errors import InputError, NotInjectiveOnCochains, NotIntertwining
from common.logger import get_logger
from complexes import is_injective_on_cochains
from cw import CellularMap, CWPair
from limits import StationarySystem, classify_limit
from locgroups import LimitGroup

from .bd import bd_complex, end_vertex, start_vertex, transition_edge
from .substitution import LetterMap, Substitution1D, solenoid

log = get_logger(__name__)


def _target_substitution(s: Substitution1D, t: Substitution1D, m: LetterMap) -> Substitution1D:
    induced = m.induced_substitution()
    if induced == t:
        return t
    if induced == t.mirror():
        # reflected space with the same cohomology
        log.info("%s factors onto the mirror of %s; using %s", s.name or s, t.name or t, induced)
        return t.mirror()
    raise NotIntertwining(f"letter map sends {s} to {induced}, which is neither {t} nor its mirror")


def factor_pair(s: Substitution1D, t: Substitution1D, m: LetterMap) -> CWPair:
    """
    Cellular factor BD(s) -> BD(t) induced by the letter map: tile a goes to
    tile m(a), transition ab to m(a)m(b). Both approximants carry their
    substitution self-maps and the square commutes on cochains.
    """
    if m.source != s or m.target != t:
        raise InputError("letter map does not run between the given substitutions")
    target = _target_substitution(s, t, m)
    X, Y = bd_complex(s), bd_complex(target)
    vertices = {}
    for a in s.alphabet:
        vertices[start_vertex(a)] = start_vertex(m(a))
        vertices[end_vertex(a)] = end_vertex(m(a))
    edges = {a: [(m(a), 1)] for a in s.alphabet}
    for a, b in X.transitions:
        edges[transition_edge(a, b)] = [(transition_edge(m(a), m(b)), 1)]
    factor = CellularMap.build(X.complex, Y.complex, vertices, edges)
    pair = CWPair(X.complex, Y.complex, factor, X.self_map, Y.self_map)

    f = pair.pullback
    if not is_injective_on_cochains(f):
        raise NotInjectiveOnCochains(f"pullback of {factor.source.name} -> {factor.target.name} is not injective")
    lhs = X.self_map.pullback.compose(f)
    rhs = f.compose(Y.self_map.pullback)
    if any(lhs.matrix(k) != rhs.matrix(k) for k in lhs.degrees):
        raise NotIntertwining("factor map does not commute with the substitution maps")
    log.debug("factor %s -> %s built", X.complex.name, Y.complex.name)
    return pair


def circle_factor(s: Substitution1D, letter: str = "a") -> tuple[Substitution1D, LetterMap]:
    """The q-adic solenoid substitution for a constant-length s, with the collapsing letter map."""
    q = s.constant_length()
    if q is None:
        raise NotIntertwining(f"{s} is not of constant length, so it has no circle factor")
    target = solenoid(q, letter)
    return target, LetterMap.build(s, target, {a: letter for a in s.alphabet})


def tiling_cohomology(s: Substitution1D) -> dict[int, LimitGroup]:
    """H^0 and H^1 of the tiling space as limits of the approximant under substitution."""
    bd = bd_complex(s)
    f = bd.self_map.pullback
    out = {}
    for k in (0, 1):
        out[k] = classify_limit(StationarySystem.from_cochain_map(f, k))
    log.info("H^*(Ω_%s): %s", s.name or s, {k: str(G) for k, G in out.items()})
    return out
