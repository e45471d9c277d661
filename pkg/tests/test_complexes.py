import random

import pytest

from abelian import AbHom, FgAbGroup, IntMatrix, cokernel, matrix_rank
from common.errors import DegreeOutOfRange, IncompatibleMap, InvalidComplex, NotInjectiveOnCochains
from complexes import (
    CochainComplex,
    CochainMap,
    cohomology,
    compute_cohomology,
    connecting_map,
    induced_map,
    long_exact_sequence,
    mapping_cone,
    quotient_complex,
)
from complexes.sampling import direct_sum, random_pair, random_subcomplex_pair


def circle():
    return CochainComplex.build({0: 1, 1: 1}, {0: IntMatrix.zeros(1, 1)})


def figure_eight():
    return CochainComplex.build({0: 1, 1: 2})


def all_trivial(C, degrees):
    return all(compute_cohomology(C, k).group.is_trivial() for k in degrees)


def test_circle_cohomology():
    C = circle()
    assert cohomology(C, 0).group == FgAbGroup.free(1)
    assert cohomology(C, 1).group == FgAbGroup.free(1)


def test_figure_eight_h1():
    assert cohomology(figure_eight(), 1).group == FgAbGroup.free(2)


def test_cohomology_degree_out_of_range():
    with pytest.raises(DegreeOutOfRange):
        cohomology(circle(), 2)


def test_basis_representatives_are_cocycles():
    # C^0 = Z^2, C^1 = Z^2 with d = [[1, -1], [2, -2]]: H^0 = Z, H^1 = Z
    C = CochainComplex.build({0: 2, 1: 2}, {0: IntMatrix.from_rows([[1, -1], [2, -2]])})
    h0, h1 = cohomology(C, 0), cohomology(C, 1)
    assert h0.group == FgAbGroup.free(1)
    assert h1.group == FgAbGroup.free(1)
    for b in h0.basis:
        assert not any(C.differential(0).apply(b))


def test_torsion_in_cohomology():
    # Z --2--> Z gives H^1 = Z_2
    C = CochainComplex.build({0: 1, 1: 1}, {0: IntMatrix.from_rows([[2]])})
    h1 = cohomology(C, 1)
    assert h1.group == FgAbGroup(0, (2,))
    assert h1.coordinates((3,)) == (1,)
    assert h1.coordinates((4,)) == (0,)


def test_dd_must_vanish():
    with pytest.raises(InvalidComplex):
        CochainComplex.build(
            {0: 1, 1: 1, 2: 1},
            {0: IntMatrix.from_rows([[1]]), 1: IntMatrix.from_rows([[1]])},
        )


def test_identity_induces_identity():
    C = figure_eight()
    h = induced_map(CochainMap.identity(C), 1)
    assert h.equals(AbHom.identity(h.source))


def test_map_must_commute():
    C = CochainComplex.build({0: 1, 1: 1}, {0: IntMatrix.from_rows([[1]])})
    with pytest.raises(IncompatibleMap):
        CochainMap.build(C, C, {0: IntMatrix.from_rows([[1]]), 1: IntMatrix.from_rows([[2]])})


def test_cone_of_identity_is_acyclic():
    C = figure_eight()
    cone = mapping_cone(CochainMap.identity(C))
    assert all_trivial(cone, cone.degrees)


def test_quotient_by_identity_is_trivial():
    C = circle()
    q = quotient_complex(CochainMap.identity(C))
    assert all_trivial(q.complex, C.degrees)
    assert all(h.group.is_trivial() for h in long_exact_sequence(CochainMap.identity(C)).objects[3::3])


def test_cone_of_zero_complex_inclusion_recovers_target():
    C = circle()
    empty = CochainComplex.build({0: 0, 1: 0})
    f = CochainMap.build(empty, C, {})
    cone = mapping_cone(f)
    for k in C.degrees:
        assert compute_cohomology(cone, k).group == cohomology(C, k).group


def test_cone_works_without_injectivity():
    # fold of two points onto one: pullback Z -> Z^2 is injective; the reverse is not
    two_points = CochainComplex.build({0: 2})
    point = CochainComplex.build({0: 1})
    collapse = CochainMap.build(two_points, point, {0: IntMatrix.from_rows([[1, 1]])})
    with pytest.raises(NotInjectiveOnCochains):
        quotient_complex(collapse)
    cone = mapping_cone(collapse)
    assert compute_cohomology(cone, -1).group == FgAbGroup.free(1)
    assert compute_cohomology(cone, 0).group.is_trivial()


SAMPLERS = [pytest.param(random_pair, id="split"), pytest.param(random_subcomplex_pair, id="subcomplex")]


@pytest.mark.parametrize("sample", SAMPLERS)
def test_cone_matches_quotient_on_random_pairs(sample):
    rng = random.Random(2024)
    for _ in range(200):
        f = sample(rng)
        cone = mapping_cone(f)
        q = quotient_complex(f).complex
        for k in range(cone.kmin, cone.kmax + 1):
            assert compute_cohomology(cone, k).group == compute_cohomology(q, k).group


@pytest.mark.parametrize("sample", SAMPLERS)
def test_long_exact_sequence_is_exact_on_random_pairs(sample):
    rng = random.Random(99)
    for _ in range(60):
        assert long_exact_sequence(sample(rng)).check().ok


@pytest.mark.parametrize("sample", SAMPLERS)
def test_connecting_map_is_natural(sample):
    rng = random.Random(5)
    for _ in range(30):
        a, c = sample(rng), sample(rng)
        b, g_y, g_x = direct_sum(a, c)
        qa, qb = quotient_complex(a).complex, quotient_complex(b).complex
        g_q = CochainMap.build(qa, qb, dict(g_x.matrices))
        for k in (0, 1):
            left = connecting_map(b, k).compose(induced_map(g_q, k))
            right = induced_map(g_y, k + 1).compose(connecting_map(a, k))
            assert left.equals(right)


def test_subcomplex_sampler_reaches_non_split_pairs():
    rng = random.Random(7)
    torsion = 0
    for _ in range(100):
        f = random_subcomplex_pair(rng)
        for k in f.degrees:
            assert matrix_rank(f.matrix(k)) == f.source.rank(k)
        q = quotient_complex(f).complex
        torsion += any(cokernel(q.relation(k).T).torsion for k in q.degrees)
    assert torsion > 0


def test_complex_json_round_trip():
    C = CochainComplex.build({0: 2, 1: 2}, {0: IntMatrix.from_rows([[1, -1], [1, -1]])})
    assert CochainComplex.from_json(C.to_json()) == C
