# cw/builders.py
"""
Builders for the complexes used throughout: circles, the torus, finite point
sets, the two-sheeted graph cover, the Barge-Diamond approximants of the
period-doubling and collared Thue-Morse substitutions, and the two-loop graph
that wraps onto the circle.

Each builder self-checks the cohomology its reconstruction is meant to have and
raises InvalidBoundary when the check fails.
"""
from __future__ import annotations

from abelian import FgAbGroup
from common.errors import InvalidBoundary, NotInjectiveOnCochains
from common.logger import get_logger
from complexes import compute_cohomology, is_injective_on_cochains, quotient_complex

from .complex import CellularMap, CWComplex, CWPair, Edge, Face, disjoint_union, fold_map, union_of_maps

log = get_logger(__name__)


# ---------- self-checks ----------

def _expect(label: str, got: FgAbGroup, want: FgAbGroup) -> None:
    if got != want:
        raise InvalidBoundary(f"{label}: reconstruction gives {got}, expected {want}")


def check_space(K: CWComplex, expected: dict[int, FgAbGroup]) -> None:
    if not K.is_connected():
        raise InvalidBoundary(f"{K.name} is not connected")
    C = K.cochain_complex
    for k, want in expected.items():
        _expect(f"H^{k}({K.name})", compute_cohomology(C, k).group, want)


def check_pair(pair: CWPair, expected_q: dict[int, FgAbGroup]) -> None:
    f = pair.pullback
    if not is_injective_on_cochains(f):
        raise NotInjectiveOnCochains(f"pullback {pair.base.name} -> {pair.space.name} is not injective")
    Q = quotient_complex(f).complex
    for k, want in expected_q.items():
        _expect(f"H^{k}_Q({pair.space.name}, {pair.base.name})", compute_cohomology(Q, k).group, want)


# ---------- elementary spaces ----------

def circle(cells: int = 1, name: str = "S1") -> CWComplex:
    if cells < 1:
        raise InvalidBoundary("a circle needs at least one cell")
    if cells == 1:
        return CWComplex(name, ("v",), (Edge("e", "v", "v"),))
    verts = tuple(f"v{i}" for i in range(cells))
    edges = tuple(Edge(f"e{i}", verts[i], verts[(i + 1) % cells]) for i in range(cells))
    return CWComplex(name, verts, edges)


def circle_doubling(K: CWComplex | None = None) -> CellularMap:
    """z -> z^2 on the one-cell circle."""
    K = K or circle()
    if len(K.edges) != 1 or len(K.vertices) != 1:
        raise InvalidBoundary("doubling map is defined on the one-cell circle")
    (v,), e = K.vertices, K.edges[0].name
    return CellularMap.build(K, K, {v: v}, {e: [(e, 1), (e, 1)]})


def points(n: int, name: str | None = None) -> CWComplex:
    return CWComplex(name or f"{n}pt", tuple(f"p{i}" for i in range(1, n + 1)), ())


def collapse_points(n: int) -> CWPair:
    """n points over one point, identity self-maps."""
    X, Y = points(n), points(1)
    factor = CellularMap.build(X, Y, {v: "p1" for v in X.vertices}, {})
    return CWPair(X, Y, factor, CellularMap.identity(X), CellularMap.identity(Y))


def torus(name: str = "T2") -> CWComplex:
    """One vertex, edges a and b, one face with boundary a b a^-1 b^-1."""
    face = Face("F", (("a", 1), ("b", 1), ("a", -1), ("b", -1)))
    T = CWComplex(name, ("v",), (Edge("a", "v", "v"), Edge("b", "v", "v")), (face,))
    check_space(T, {0: FgAbGroup.free(1), 1: FgAbGroup.free(2), 2: FgAbGroup.free(1)})
    return T


def torus_doubling(T: CWComplex | None = None) -> CellularMap:
    """
    Doubling in both lattice directions. The face image is recorded as 4F
    directly; a cellular representative would need a subdivided square.
    """
    T = T or torus()
    return CellularMap.build(
        T, T, {"v": "v"},
        {"a": [("a", 1), ("a", 1)], "b": [("b", 1), ("b", 1)]},
        {"F": {"F": 4}},
    )


# ---------- graph pairs ----------

def figure8_cover_pair() -> CWPair:
    """Two-sheeted cover of the figure eight: a_i loops, b_1 and b_2 swap the sheets."""
    X = CWComplex(
        "X2",
        ("p1", "p2"),
        (Edge("a1", "p1", "p1"), Edge("a2", "p2", "p2"), Edge("b1", "p1", "p2"), Edge("b2", "p2", "p1")),
    )
    Y = CWComplex("Y2", ("p",), (Edge("a", "p", "p"), Edge("b", "p", "p")))
    cover = CellularMap.build(
        X, Y,
        {"p1": "p", "p2": "p"},
        {"a1": [("a", 1)], "a2": [("a", 1)], "b1": [("b", 1)], "b2": [("b", 1)]},
    )
    pair = CWPair(X, Y, cover)
    check_space(X, {1: FgAbGroup.free(3)})
    check_pair(pair, {0: FgAbGroup.trivial(), 1: FgAbGroup(1, (2,))})
    return pair


def gamma_pd() -> CWPair:
    """Period-doubling approximant over the dyadic solenoid's two-cell circle."""
    from tiling1d import circle_factor, factor_pair, period_doubling

    pd = period_doubling()
    solenoid, collapse = circle_factor(pd)
    pair = factor_pair(pd, solenoid, collapse)
    check_space(pair.space, {0: FgAbGroup.free(1), 1: FgAbGroup.free(2)})
    if pair.space.euler_characteristic() != -1:
        raise InvalidBoundary("Γ_PD must have Euler characteristic -1")
    check_pair(pair, {0: FgAbGroup.trivial(), 1: FgAbGroup.free(1)})
    return pair


def gamma_tm() -> CWPair:
    """Collared Thue-Morse approximant over Γ_PD: A_i, B_i -> i."""
    from tiling1d import LetterMap, factor_pair, period_doubling, thue_morse

    collared, _ = thue_morse().collar()
    pd = period_doubling()
    m = LetterMap.build(collared, pd, {c: c[-1] for c in collared.alphabet})
    pair = factor_pair(collared, pd, m)
    check_space(pair.space, {0: FgAbGroup.free(1), 1: FgAbGroup.free(3)})
    check_pair(pair, {0: FgAbGroup.trivial(), 1: FgAbGroup(1, (2,))})
    return pair


def gamma_tm_prime() -> CWPair:
    """
    Two loops A at l and B at r joined by the connector cycle
    l -> m1 -> r -> m2 -> l. The self-map wraps each loop twice around itself
    and fixes the connectors; the factor collapses the connectors and sends
    both loops onto the one-cell circle.
    """
    verts = ("l", "r", "m1", "m2")
    edges = (
        Edge("A", "l", "l"), Edge("B", "r", "r"),
        Edge("c1a", "l", "m1"), Edge("c1b", "m1", "r"),
        Edge("c2a", "r", "m2"), Edge("c2b", "m2", "l"),
    )
    X = CWComplex("Γ_TM'", verts, edges)
    S = circle()
    connectors = ("c1a", "c1b", "c2a", "c2b")
    wrap = CellularMap.build(
        X, X, {v: v for v in verts},
        {"A": [("A", 1), ("A", 1)], "B": [("B", 1), ("B", 1)], **{c: [(c, 1)] for c in connectors}},
    )
    factor = CellularMap.build(
        X, S, {v: "v" for v in verts},
        {"A": [("e", 1)], "B": [("e", 1)], **{c: [] for c in connectors}},
    )
    pair = CWPair(X, S, factor, wrap, circle_doubling(S))
    check_space(X, {0: FgAbGroup.free(1), 1: FgAbGroup.free(3)})
    check_pair(pair, {0: FgAbGroup.trivial(), 1: FgAbGroup.free(2)})
    return pair


def folded(base: CWComplex, base_map: CellularMap, copies: int = 2) -> CWPair:
    """``copies`` disjoint copies of a space folded onto one copy."""
    union = disjoint_union([base] * copies)
    self_map = union_of_maps([base_map] * copies, union, union)
    return CWPair(union, base, fold_map(union, base, copies), self_map, base_map)
