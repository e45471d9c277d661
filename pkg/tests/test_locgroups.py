import random
from fractions import Fraction

import pytest

from abelian import IntMatrix, cokernel
from common import config
from common.config import get_stage_params
from common.errors import InadmissibleHom, InputError, NotComposable, UnresolvedExtension
from locgroups import (
    LimitGroup,
    LocHom,
    Summand,
    admissible,
    loc_cokernel,
    loc_is_exact,
    loc_kernel,
    parse_limit_group,
    rational_rank,
    resolve_extension,
    splice,
)

Z = LimitGroup.free_group(1)
Z2 = LimitGroup.of(Summand.loc(2))
Z4 = LimitGroup.of(Summand.loc(4))
ZERO = LimitGroup.zero()


def G(text):
    return parse_limit_group(text)


# ---------- limit groups ----------

def test_parse_and_render():
    g = G("Z_3 + (1/3)Z[1/4] + Z[1/2]^4 + Z")
    assert g.render(True) == "Z_3 + (1/3)Z[1/4] + Z[1/2]^4 + Z"
    assert g.render(False) == "Z_3 + Z[1/4] + Z[1/2]^4 + Z"
    assert G("Z[1/2] ⊕ Z").render() == "Z[1/2] + Z"
    assert G("0").is_trivial()


def test_parse_rejects_bad_terms():
    with pytest.raises(InputError):
        G("Q")
    with pytest.raises(InputError):
        G("(1/3)Z")


def test_rendering_is_canonical_order():
    assert LimitGroup.of(Summand.free(), Summand.loc(2), Summand.torsion(3)).render() == "Z_3 + Z[1/2] + Z"
    assert LimitGroup.of(Summand.loc(2), Summand.loc(4)).render() == "Z[1/4] + Z[1/2]"


def test_isomorphism_ignores_tags_and_display_base():
    assert G("(1/3)Z[1/4]").isomorphic(G("Z[1/4]"))
    assert G("Z[1/4]").isomorphic(G("Z[1/2]"))
    assert not G("Z[1/2]").isomorphic(G("Z"))
    assert not G("Z[1/2]").isomorphic(G("Z[1/3]"))


def test_divisibility():
    assert Z4.is_divisible_by(2)
    assert not Z.is_divisible_by(2)
    assert G("Z_3").is_divisible_by(2)
    assert not G("Z_2").is_divisible_by(2)
    assert not Z2.is_divisible_by(3)


def test_presented_group_classifies():
    g = LimitGroup.free_group(2).with_relations([(2, 0)])
    assert g.is_presented
    assert g.classified.render() == "Z_2 + Z"


def test_rational_rank():
    rows = [[Fraction(1), Fraction(2)], [Fraction(2), Fraction(4)]]
    assert rational_rank(rows, 2) == 1
    assert rational_rank([], 0) == 0


# ---------- homomorphisms ----------

def test_admissibility_rules():
    assert admissible(Fraction(1, 2), Summand.free(), Summand.loc(2)) is None
    assert admissible(Fraction(1, 3), Summand.free(), Summand.loc(2)) is not None
    assert admissible(Fraction(1), Summand.loc(2), Summand.free()) is not None
    assert admissible(Fraction(1), Summand.loc(2), Summand.loc(4)) is None
    assert admissible(Fraction(1), Summand.loc(3), Summand.loc(2)) is not None
    assert admissible(Fraction(1), Summand.torsion(2), Summand.loc(2)) is not None
    assert admissible(Fraction(0), Summand.loc(2), Summand.free()) is None


def test_inadmissible_matrix_rejected():
    with pytest.raises(InadmissibleHom):
        LocHom.build(Z2, Z, [[1]])
    with pytest.raises(InadmissibleHom):
        LocHom.build(Z, Z2, [[1, 0]])


def test_compose_and_zero():
    double = LocHom.build(Z, Z, [[2]])
    assert double.compose(double).matrix == ((Fraction(4),),)
    assert LocHom.zero(Z2, Z).is_zero()
    assert not LocHom.identity(Z2).is_zero()
    with pytest.raises(NotComposable):
        LocHom.identity(Z2).compose(double)


def test_lochom_json():
    h = LocHom.build(Z, Z2, [[Fraction(3, 4)]])
    assert LocHom.from_json(h.to_json()) == h


# ---------- kernels and cokernels ----------

def test_cokernel_with_three_torsion():
    target = LimitGroup.of(Summand.loc(2), Summand.free())
    h = LocHom.from_column(Z, target, [0, 3])
    assert loc_cokernel(h).render() == "Z_3 + Z[1/2]"


def test_cokernel_records_one_third_tag():
    target = LimitGroup.of(Summand.loc(4), Summand.free())
    h = LocHom.from_column(Z, target, [-1, 3])
    coker = loc_cokernel(h)
    assert coker.render(True) == "(1/3)Z[1/4]"
    assert coker.isomorphic(Z4)
    assert coker.extension_tags == (3,)


def test_cokernel_agrees_with_integer_cokernel():
    M = IntMatrix.from_rows([[2, 0], [0, 3]])
    h = LocHom.build(LimitGroup.free_group(2), LimitGroup.free_group(2), M.to_rows())
    assert loc_cokernel(h).render() == LimitGroup.from_fg(cokernel(M)).render() == "Z_6"


def test_cokernel_of_localized_identity_is_trivial():
    assert loc_cokernel(LocHom.identity(G("Z[1/2]^2 + Z"))).is_trivial()


def test_kernel_of_times_three_is_zero():
    assert loc_kernel(LocHom.build(Z, Z, [[3]])).is_trivial()


def test_kernel_of_zero_map_is_source():
    assert loc_kernel(LocHom.zero(Z2, Z)).render() == "Z[1/2]"


def test_kernel_with_torsion():
    src = G("Z_4")
    h = LocHom.build(src, G("Z_2"), [[1]])
    assert loc_kernel(h).render() == "Z_2"


# ---------- exactness ----------

def test_identity_sequence_is_exact():
    A = G("Z[1/2] + Z")
    seq = [LocHom.zero(ZERO, A), LocHom.identity(A), LocHom.zero(A, ZERO)]
    assert loc_is_exact(seq).ok


def test_zero_map_sequence_fails_at_first_inner_object():
    seq = [LocHom.zero(ZERO, Z2), LocHom.zero(Z2, Z), LocHom.zero(Z, ZERO)]
    check = loc_is_exact(seq)
    assert not check.ok
    assert check.index == 1
    assert check.reason == "kernel is larger than image"


def test_times_two_on_localized_group_is_exact():
    seq = [LocHom.zero(ZERO, Z2), LocHom.build(Z2, Z2, [[2]]), LocHom.zero(Z2, ZERO)]
    assert loc_is_exact(seq).ok


def test_times_two_on_integers_is_not_exact():
    seq = [LocHom.zero(ZERO, Z), LocHom.build(Z, Z, [[2]]), LocHom.zero(Z, ZERO)]
    check = loc_is_exact(seq)
    assert not check.ok
    assert check.index == 2


def test_nonzero_composition_detected():
    seq = [LocHom.identity(Z), LocHom.identity(Z)]
    check = loc_is_exact(seq)
    assert not check.ok
    assert check.reason == "composition is not zero"


def test_exactness_needs_composable_maps():
    with pytest.raises(NotComposable):
        loc_is_exact([LocHom.identity(Z), LocHom.identity(Z2)])


# ---------- extensions ----------

def test_extension_by_localized_group_splits():
    assert resolve_extension(Z4, G("Z[1/2] + Z")).render() == "Z[1/4] + Z[1/2] + Z"


def test_free_quotient_always_splits():
    A = G("Z_3 + Z[1/2]")
    assert resolve_extension(A, LimitGroup.free_group(2)).render() == "Z_3 + Z[1/2] + Z^2"


def test_dyadic_extension_of_integers_is_refused():
    with pytest.raises(UnresolvedExtension):
        resolve_extension(Z, Z2)


def test_evidence_forces_split():
    assert resolve_extension(Z, Z2, evidence={2}).render() == "Z[1/2] + Z"


def test_torsion_extension_needs_divisibility():
    with pytest.raises(UnresolvedExtension):
        resolve_extension(Z, G("Z_2"))
    with pytest.raises(UnresolvedExtension):
        resolve_extension(Z2, G("Z_3"))
    assert resolve_extension(G("Z_2"), G("Z_3")).render() == "Z_6"


def test_splice_produces_three_torsion():
    a2 = LimitGroup.of(Summand.loc(2), Summand.free())
    delta = LocHom.from_column(Z, a2, [0, 3])
    s = splice(ZERO, a2, delta, Z2, evidence={2})
    assert s.h1.is_trivial()
    assert s.h2.render() == "Z_3 + Z[1/2]^2"
    assert s.cancelled
    assert s.sequence.check().ok


def test_splice_with_zero_connecting_map():
    delta = LocHom.zero(Z, Z4)
    s = splice(Z2, Z4, delta, G("Z[1/2] + Z"), evidence={2})
    assert s.h1.render() == "Z[1/2] + Z"
    assert s.h2.render() == "Z[1/4] + Z[1/2] + Z"
    assert not s.cancelled
    assert s.sequence.check().ok


# ---------- stage depth ----------

@pytest.fixture(params=[1, 2, 8])
def stage_depth(request, monkeypatch):
    monkeypatch.setattr(config, "STAGE_PARAMS", config.StageParams(initial_depth=request.param))
    return request.param


def test_results_do_not_depend_on_stage_depth(stage_depth):
    assert get_stage_params().initial_depth == stage_depth
    three = LocHom.from_column(Z, LimitGroup.of(Summand.loc(2), Summand.free()), [0, 3])
    assert loc_cokernel(three).render() == "Z_3 + Z[1/2]"
    tagged = LocHom.from_column(Z, LimitGroup.of(Summand.loc(4), Summand.free()), [-1, 3])
    assert loc_cokernel(tagged).render(True) == "(1/3)Z[1/4]"
    doubling = LocHom.build(G("Z[1/2] + Z"), G("Z[1/2] + Z"), [[1, 0], [0, 2]])
    assert loc_cokernel(doubling).render() == "Z_2"
    s = splice(ZERO, three.target, three, Z2, evidence={2})
    assert s.h2.render() == "Z_3 + Z[1/2]^2"
    assert s.sequence.check().ok
    assert not loc_is_exact([LocHom.zero(ZERO, Z), LocHom.build(Z, Z, [[2]]), LocHom.zero(Z, ZERO)]).ok


# ---------- random admissible maps ----------

KINDS = (Summand.free(), Summand.loc(2), Summand.loc(3), Summand.loc(6))


def _random_group(rng):
    return LimitGroup.of(*(rng.choice(KINDS) for _ in range(rng.randint(1, 2))))


def _random_entry(rng, src, tgt):
    if src.is_loc and (tgt.is_free or not src.support <= tgt.support):
        return Fraction(0)
    c = rng.randint(-3, 3)
    return Fraction(c, tgt.n ** rng.randint(0, 2)) if tgt.is_loc else Fraction(c)


def _random_hom(rng, A, B):
    return LocHom.build(A, B, [[_random_entry(rng, s, t) for s in A.summands] for t in B.summands])


def test_graph_sequences_of_random_admissible_maps():
    rng = random.Random(23)
    for _ in range(40):
        A, B = _random_group(rng), _random_group(rng)
        h = _random_hom(rng, A, B)
        a, b = len(A), len(B)
        total = A.direct_sum(B)
        graph = LocHom.build(A, total, [[int(i == j) for j in range(a)] for i in range(a)] + [list(r) for r in h.matrix])
        rows = [[-q for q in r] + [int(i == j) for j in range(b)] for i, r in enumerate(h.matrix)]
        project = LocHom.build(total, B, rows)
        seq = [LocHom.zero(ZERO, A), graph, project, LocHom.zero(B, ZERO)]
        assert loc_is_exact(seq).ok, (str(A), str(B), h.matrix)

        doubled = LocHom.build(total, B, [[2 * q for q in r] for r in rows])
        check = loc_is_exact([LocHom.zero(ZERO, A), graph, doubled, LocHom.zero(B, ZERO)])
        halvable = all(s.is_loc and s.n % 2 == 0 for s in B.summands)
        assert check.ok == halvable
        if not halvable:
            assert check.index == 3
