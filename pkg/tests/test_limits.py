import random

import pytest

from common.errors import InputError, IntertwiningFailure, Unclassifiable
from cw import figure8_cover_pair, gamma_pd, gamma_tm
from limits import (
    StationarySystem,
    analyse_limit,
    classify_limit,
    degeneration,
    eventual_kernel,
    half_hex_quotient,
    induced_lochom,
    pair_limits,
    suspension_shift,
)
from locgroups import LimitGroup, Summand, parse_limit_group


def lim(rows, torsion=()):
    return classify_limit(StationarySystem.from_matrix(rows, torsion))


# ---------- eventual kernel ----------

def test_injective_system_has_no_kernel():
    ek = eventual_kernel(StationarySystem.from_matrix([[2]]))
    assert ek.depth == 1


def test_nilpotent_kernel_needs_two_steps():
    S = StationarySystem.from_matrix([[0, 1], [0, 0]])
    assert eventual_kernel(S).depth == 2
    assert classify_limit(S).is_trivial()


# ---------- classification ----------

@pytest.mark.parametrize(
    "rows, torsion, expected",
    [
        ([[2]], (), "Z[1/2]"),
        ([[-1]], (), "Z"),
        ([[3]], (), "Z[1/3]"),
        ([[0]], (), "0"),
        ([[2, 0], [0, 1]], (), "Z[1/2] + Z"),
        ([[2, 0], [0, 0]], (), "Z[1/2]"),
        ([[0, 1], [1, 0]], (), "Z^2"),
        ([[0, 2], [1, 1]], (), "Z[1/2] + Z"),
        ([[1]], (4,), "Z_4"),
        ([[3]], (4,), "Z_4"),
        ([[2]], (4,), "0"),
        ([[1, 0], [0, 3]], (4,), "Z_4 + Z[1/3]"),
    ],
)
def test_classify(rows, torsion, expected):
    assert lim(rows, torsion).render() == expected


def test_eigenvalues_of_period_doubling_matrix():
    a = analyse_limit(StationarySystem.from_matrix([[0, 2], [1, 1]]))
    assert a.eigenvalues == (2, -1)
    assert a.group.render() == "Z[1/2] + Z"


@pytest.mark.parametrize("rows", [[[1, 1], [0, 1]], [[0, -1], [1, 0]], [[2, 1], [1, 1]]])
def test_unclassifiable_free_parts(rows):
    with pytest.raises(Unclassifiable):
        lim(rows)


def test_system_json():
    S = StationarySystem.from_json({"matrix": [[2, 0], [0, 1]], "name": "d"})
    assert classify_limit(S).render() == "Z[1/2] + Z"
    again = StationarySystem.from_json(S.to_json())
    assert classify_limit(again).render() == "Z[1/2] + Z"
    with pytest.raises(InputError):
        StationarySystem.from_matrix([[1]], torsion=(2, 3))


def test_powers_share_the_limit():
    S = StationarySystem.from_matrix([[0, 2], [1, 1]])
    assert classify_limit(S.power(2)).isomorphic(classify_limit(S))


# ---------- stage oracle ----------

DEPTH = 12
PRIMES = (2, 3, 5, 7)


def _unimodular(n, rng):
    P = [[int(i == j) for j in range(n)] for i in range(n)]
    Pinv = [row[:] for row in P]
    for _ in range(3 * n if n > 1 else 0):
        i, j = rng.sample(range(n), 2)
        c = rng.randint(-2, 2)
        for row in P:
            row[j] += c * row[i]
        Pinv[i] = [a - c * b for a, b in zip(Pinv[i], Pinv[j])]
    return P, Pinv


def _mul(A, B):
    return [[sum(a * b for a, b in zip(row, col)) for col in zip(*B)] for row in A]


def _rank_mod(A, p):
    rows = [[x % p for x in row] for row in A]
    rank, cols = 0, len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((r for r in range(rank, len(rows)) if rows[r][c]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        inv = pow(rows[rank][c], -1, p)
        rows[rank] = [x * inv % p for x in rows[rank]]
        for r in range(len(rows)):
            if r != rank and rows[r][c]:
                f = rows[r][c]
                rows[r] = [(x - f * y) % p for x, y in zip(rows[r], rows[rank])]
        rank += 1
    return rank


def _stage_quotient_rank(F, p):
    """dim of (colim G/pG) = rank of φ^DEPTH mod p; the image has stabilised by then."""
    power = [[int(i == j) for j in range(len(F))] for i in range(len(F))]
    for _ in range(DEPTH):
        power = [[x % p for x in row] for row in _mul(power, F)]
    return _rank_mod(power, p)


def _quotient_rank(G: LimitGroup, p: int) -> int:
    return sum(1 for s in G.classified.summands if s.is_free or (s.is_loc and s.n % p))


def test_classification_matches_stage_stabilisation():
    rng = random.Random(12)
    for _ in range(100):
        n = rng.randint(1, 3)
        diag = [rng.choice((-3, -2, -1, 0, 1, 2, 3, 4)) for _ in range(n)]
        P, Pinv = _unimodular(n, rng)
        D = [[diag[i] if i == j else 0 for j in range(n)] for i in range(n)]
        F = _mul(_mul(P, D), Pinv)
        G = lim(F)
        expected = LimitGroup.of(*(Summand.loc(abs(d)) if abs(d) >= 2 else Summand.free() for d in diag if d))
        assert G.isomorphic(expected), (F, diag)
        for p in PRIMES:
            assert _quotient_rank(G, p) == _stage_quotient_rank(F, p), (F, p)


# ---------- pairs ----------

def test_period_doubling_over_solenoid():
    limits = pair_limits(gamma_pd())
    assert limits.quotient(0).is_trivial()
    assert limits.quotient(1).render() == "Z"
    assert limits[1].base.render() == "Z[1/2]"
    assert limits[1].space.render() == "Z[1/2] + Z"


def test_thue_morse_over_period_doubling():
    limits = pair_limits(gamma_tm())
    d = limits[1]
    assert d.quotient.render() == "Z_2"
    assert d.base.isomorphic(d.space)
    # identity on Z[1/2], doubling on Z
    assert d.induced.matrix == ((1, 0), (0, 2))


def test_induced_map_on_localized_summand_is_primitive():
    a = analyse_limit(StationarySystem.from_matrix([[2]]))
    four = StationarySystem.from_matrix([[4]]).endo
    three = StationarySystem.from_matrix([[3]]).endo
    assert induced_lochom(four, a, a).matrix == ((1,),)
    assert induced_lochom(three, a, a).matrix == ((3,),)


def test_pair_without_self_maps_rejected():
    with pytest.raises(IntertwiningFailure):
        pair_limits(figure8_cover_pair())


def test_quotient_outside_computed_degrees_is_zero():
    assert pair_limits(gamma_pd()).quotient(5).is_trivial()


# ---------- degenerations ----------

@pytest.mark.parametrize(
    "label, h0, h1",
    [("A", "Z", "Z[1/2]"), ("B", "Z", "Z[1/2] + Z"), ("C", "0", "Z[1/2] + Z")],
)
def test_degenerations(label, h0, h1):
    g0, g1 = degeneration(label)
    assert g0.isomorphic(parse_limit_group(h0))
    assert g1.isomorphic(parse_limit_group(h1))


def test_unknown_degeneration():
    with pytest.raises(InputError):
        degeneration("D")


def test_half_hex_only_top_degree_survives():
    groups = half_hex_quotient()
    assert groups[0].is_trivial() and groups[1].is_trivial()
    assert groups[2].render() == "Z^2"


def test_suspension_shift():
    Z = LimitGroup.free_group(1)
    shifted = suspension_shift({0: Z, 1: parse_limit_group("Z[1/2]")}, n=2, k=1)
    assert shifted[0].is_trivial()
    assert shifted[1] == Z
    assert shifted[2].render() == "Z[1/2]"
    with pytest.raises(InputError):
        suspension_shift({}, n=1, k=2)
