import itertools
import random
from math import gcd

import pytest

from abelian import (
    AbHom,
    FgAbGroup,
    IntMatrix,
    Presentation,
    cokernel,
    hom_cokernel,
    hom_image,
    hom_kernel,
    is_exact,
    kernel_basis,
    smith_normal_form,
    solve_integer,
)
from common.errors import IllDefinedHom, InputError, NotComposable


def M(*rows, cols=None):
    return IntMatrix.from_rows(rows, cols)


def random_matrix(rng, rows, cols, lo=-6, hi=6):
    return IntMatrix.from_rows([[rng.randint(lo, hi) for _ in range(cols)] for _ in range(rows)], cols)


def random_unimodular(rng, n, steps=None):
    a = IntMatrix.identity(n).to_rows()
    for _ in range(steps or 3 * n):
        if n < 2:
            break
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-2, -1, 1, 2])
        a[i] = [x + c * y for x, y in zip(a[i], a[j])]
        if rng.random() < 0.2:
            a[i], a[j] = a[j], a[i]
    return IntMatrix.from_rows(a, n)


# ---------- Smith normal form ----------

def assert_snf_laws(m):
    dec = smith_normal_form(m)
    assert dec.U @ m @ dec.V == dec.D
    assert abs(dec.U.determinant()) == 1
    assert abs(dec.V.determinant()) == 1
    assert dec.U @ dec.U_inv == IntMatrix.identity(m.rows)
    assert dec.V @ dec.V_inv == IntMatrix.identity(m.cols)
    for i in range(dec.D.rows):
        for j in range(dec.D.cols):
            if i != j:
                assert dec.D[i, j] == 0
    diag = dec.diagonal
    assert all(d >= 0 for d in diag)
    nonzero = [d for d in diag if d]
    assert list(diag[: len(nonzero)]) == nonzero
    for a, b in zip(nonzero, nonzero[1:]):
        assert b % a == 0
    return dec


def test_snf_identity():
    dec = assert_snf_laws(IntMatrix.identity(2))
    assert dec.D == IntMatrix.identity(2)


def test_snf_diag_2_3():
    dec = assert_snf_laws(M([2, 0], [0, 3]))
    assert dec.diagonal == (1, 6)


def test_snf_zero_matrix():
    dec = assert_snf_laws(IntMatrix.zeros(3, 2))
    assert dec.D.is_zero()


def test_snf_empty_shapes():
    assert_snf_laws(IntMatrix.zeros(0, 3))
    assert_snf_laws(IntMatrix.zeros(4, 0))


def test_snf_is_deterministic():
    m = M([4, 6, 2], [8, -2, 10])
    assert smith_normal_form(m) == smith_normal_form(m)


def test_snf_laws_on_random_matrices():
    rng = random.Random(20240611)
    for _ in range(500):
        rows, cols = rng.randint(1, 5), rng.randint(1, 5)
        assert_snf_laws(random_matrix(rng, rows, cols))


def test_kernel_basis_and_solve():
    m = M([1, 2, 3], [2, 4, 6])
    k = kernel_basis(m)
    assert k.cols == 2
    assert (m @ k).is_zero()
    assert solve_integer(M([2, 0], [0, 3]), (4, 9)) == (2, 3)
    assert solve_integer(M([2]), (3,)) is None


# ---------- cokernel and groups ----------

def test_cokernel_cyclic():
    assert cokernel(M([2])) == FgAbGroup(0, (2,))
    assert cokernel(M([-2])) == FgAbGroup(0, (2,))


def test_cokernel_of_empty_relations_is_free():
    assert cokernel(IntMatrix.zeros(0, 3)) == FgAbGroup.free(3)
    assert str(cokernel(IntMatrix.zeros(0, 3))) == "Z^3"


def test_cokernel_invariant_under_unimodular_transforms():
    rng = random.Random(7)
    for _ in range(100):
        rows, cols = rng.randint(1, 4), rng.randint(1, 4)
        m = random_matrix(rng, rows, cols, -4, 4)
        p, q = random_unimodular(rng, rows), random_unimodular(rng, cols)
        assert cokernel(p @ m @ q) == cokernel(m)


def test_group_rendering():
    assert str(FgAbGroup.trivial()) == "0"
    assert str(FgAbGroup(1, (2,))) == "Z_2 + Z"
    assert str(FgAbGroup(2, (2, 6))) == "Z_2 + Z_6 + Z^2"


def test_group_json_and_validation():
    g = FgAbGroup(1, (3,))
    assert FgAbGroup.from_json(g.to_json()) == g
    with pytest.raises(InputError):
        FgAbGroup.from_json({"rank": 0, "torsion": [2, 3]})


def test_two_presentations_same_canonical_group():
    a = Presentation(2, M([2, 0], [4, 2]))
    b = Presentation(2, M([2, 2], [0, 2]))
    assert a.group == b.group == FgAbGroup(0, (2, 2))
    assert Presentation(2, M([2], [0])).group == FgAbGroup(1, (2,))


# ---------- homomorphisms ----------

def test_times_two_kernel_and_cokernel():
    z = Presentation.free(1)
    h = AbHom(z, z, M([2]))
    assert hom_kernel(h).is_trivial()
    assert hom_cokernel(h) == FgAbGroup(0, (2,))
    assert hom_image(h) == FgAbGroup.free(1)


def test_pullback_cokernel_figure_eight_cover():
    # H^1(Y) = Z^2 -> H^1(X) = Z^3 with a' -> a1 + a2, b' -> 2 b1
    h = AbHom(Presentation.free(2), Presentation.free(3), M([1, 0], [1, 0], [0, 2]))
    assert hom_cokernel(h) == FgAbGroup(1, (2,))
    assert hom_kernel(h).is_trivial()


def test_image_of_zero_map_is_trivial():
    h = AbHom.zero(Presentation.free(2), Presentation.free(3))
    assert hom_image(h).is_trivial()
    assert hom_kernel(h) == FgAbGroup.free(2)


def test_ill_defined_hom_rejected():
    with pytest.raises(IllDefinedHom):
        AbHom(Presentation.cyclic(2), Presentation.free(1), M([1]))
    with pytest.raises(IllDefinedHom):
        AbHom(Presentation.free(2), Presentation.free(1), M([1]))


def test_kernel_with_torsion_target():
    # Z -> Z_4, 1 -> 2 has kernel 2Z ≅ Z and image Z_2
    h = AbHom(Presentation.free(1), Presentation.cyclic(4), M([2]))
    assert hom_kernel(h) == FgAbGroup.free(1)
    assert hom_image(h) == FgAbGroup(0, (2,))
    assert hom_cokernel(h) == FgAbGroup(0, (2,))


# ---------- exactness ----------

ZERO = Presentation.free(0)
Z = Presentation.free(1)


def test_identity_sequence_is_exact():
    seq = [AbHom.zero(ZERO, Z), AbHom.identity(Z), AbHom.zero(Z, ZERO)]
    assert is_exact(seq).ok


def test_times_two_sequence_fails_at_third_object():
    seq = [AbHom.zero(ZERO, Z), AbHom(Z, Z, M([2])), AbHom.zero(Z, ZERO)]
    check = is_exact(seq)
    assert not check.ok
    assert check.index == 2


def test_figure_eight_sequence_is_exact():
    h0y, h0x, h1y, h1x = Z, Z, Presentation.free(2), Presentation.free(3)
    f1 = M([1, 0], [1, 0], [0, 2])
    q = Presentation(3, f1)
    seq = [
        AbHom.zero(ZERO, h0y),
        AbHom.identity(h0y),
        AbHom.zero(h0x, ZERO),
        AbHom.zero(ZERO, h1y),
        AbHom(h1y, h1x, f1),
        AbHom(h1x, q, IntMatrix.identity(3)),
        AbHom.zero(q, ZERO),
    ]
    assert q.group == FgAbGroup(1, (2,))
    assert is_exact(seq).ok


def test_not_composable():
    with pytest.raises(NotComposable):
        is_exact([AbHom.identity(Z), AbHom.identity(Presentation.free(2))])


def _elements(orders):
    return list(itertools.product(*(range(o) for o in orders)))


def _apply(matrix, v, orders):
    return tuple(x % o for x, o in zip(matrix.apply(v), orders))


def _random_finite_group(rng):
    while True:
        orders = [rng.choice([2, 3, 4, 6, 8]) for _ in range(rng.randint(1, 3))]
        size = 1
        for o in orders:
            size *= o
        if size <= 64:
            return orders


def _random_hom_matrix(rng, src, tgt):
    rows = []
    for b in tgt:
        rows.append([rng.randint(0, b) * (b // gcd(a, b)) % b for a in src])
    return IntMatrix.from_rows(rows, len(src))


def test_is_exact_agrees_with_brute_force():
    rng = random.Random(64)
    exact_seen = 0
    for trial in range(150):
        a, b, c = (_random_finite_group(rng) for _ in range(3))
        if trial % 3 == 0:
            # bias toward exact instances: Z_n -> Z_{nm} -> Z_n via ×m and reduction
            n, m = rng.choice([(2, 2), (2, 3), (3, 2), (4, 2), (2, 4)])
            a, b, c = [n], [n * m], [m]
            m1, m2 = M([m]), M([1])
        else:
            m1, m2 = _random_hom_matrix(rng, a, b), _random_hom_matrix(rng, b, c)
        h1 = AbHom(Presentation.cyclic(*a), Presentation.cyclic(*b), m1)
        h2 = AbHom(Presentation.cyclic(*b), Presentation.cyclic(*c), m2)
        image = {_apply(m1, v, b) for v in _elements(a)}
        kernel = {v for v in _elements(b) if not any(_apply(m2, v, c))}
        brute = image == kernel
        exact_seen += brute
        assert is_exact([h1, h2]).ok == brute
    assert exact_seen > 0
