import pytest
import sympy

from abelian import FgAbGroup
from common.errors import InputError, NotIntertwining, NotPrimitive
from complexes import compute_cohomology
from tiling1d import (
    LetterMap,
    Substitution1D,
    bd_complex,
    circle_factor,
    factor_pair,
    period_doubling,
    render_word,
    solenoid,
    thue_morse,
    tokenize,
    tiling_cohomology,
)

FIBONACCI = "a->ab, b->a"


# ---------- substitutions ----------

def test_parse_matches_builtin():
    pd = Substitution1D.parse("1 -> 21; 2 -> 11")
    assert pd == period_doubling()
    assert str(pd) == "1->21, 2->11"
    assert pd.constant_length() == 2


def test_parse_errors():
    with pytest.raises(InputError):
        Substitution1D.parse("1->")
    with pytest.raises(InputError):
        Substitution1D.parse("1->23")
    with pytest.raises(InputError):
        Substitution1D.parse("")


def test_tokenize_multichar_letters():
    assert tokenize("A1B2", ("A1", "A2", "B1", "B2")) == ("A1", "B2")
    assert tokenize("1_2 1_1", ("1_1", "1_2")) == ("1_2", "1_1")
    assert render_word(("A1", "B2")) == "A1 B2"
    assert render_word(("a", "b")) == "ab"


def test_json_round_trip():
    tm = thue_morse()
    assert Substitution1D.from_json(tm.to_json()) == tm


def test_primitivity():
    assert period_doubling().is_primitive()
    assert Substitution1D.parse(FIBONACCI).is_primitive()
    assert Substitution1D.parse(FIBONACCI).constant_length() is None
    reducible = Substitution1D.parse("a->ab, b->b")
    assert not reducible.is_primitive()
    with pytest.raises(NotPrimitive):
        bd_complex(reducible)


def test_period_doubling_language():
    words = period_doubling().allowed_words(2)
    assert words == {("1", "1"), ("1", "2"), ("2", "1")}


def test_mirror():
    pd = period_doubling()
    assert pd.mirror().image("1") == ("1", "2")
    assert pd.mirror().mirror() == pd


def test_collared_thue_morse():
    collared, forget = thue_morse().collar()
    assert collared.alphabet == ("A1", "A2", "B1", "B2")
    assert forget("A2") == "A" and forget("B1") == "B"
    assert forget.intertwines()
    # right collars read the factor backwards
    onto_pd = LetterMap.build(collared, period_doubling(), {c: c[-1] for c in collared.alphabet})
    assert not onto_pd.intertwines()
    assert onto_pd.induced_substitution() == period_doubling().mirror()


# ---------- letter maps ----------

def test_letter_map_must_cover_alphabet():
    with pytest.raises(InputError):
        LetterMap.build(thue_morse(), period_doubling(), {"A": "1"})


def test_uncollared_thue_morse_does_not_factor_onto_period_doubling():
    tm, pd = thue_morse(), period_doubling()
    m = LetterMap.build(tm, pd, {"A": "1", "B": "2"})
    assert not m.intertwines()
    with pytest.raises(NotIntertwining):
        factor_pair(tm, pd, m)


def test_circle_factor():
    target, m = circle_factor(period_doubling())
    assert target == solenoid(2)
    assert m.intertwines()
    with pytest.raises(NotIntertwining):
        circle_factor(Substitution1D.parse(FIBONACCI))


def test_factor_onto_mirror_is_accepted():
    pd = period_doubling()
    mirrored = pd.mirror()
    pair = factor_pair(mirrored, pd, LetterMap.build(mirrored, pd, {"1": "1", "2": "2"}))
    assert pair.base == pair.space


# ---------- approximants ----------

def test_period_doubling_approximant():
    bd = bd_complex(period_doubling())
    assert len(bd.complex.vertices) == 4
    assert len(bd.complex.edges) == 5
    assert bd.transitions == (("1", "1"), ("1", "2"), ("2", "1"))
    assert compute_cohomology(bd.complex.cochain_complex, 1).group == FgAbGroup.free(2)


def test_solenoid_approximant_is_a_circle():
    K = bd_complex(solenoid(3)).complex
    assert compute_cohomology(K.cochain_complex, 1).group == FgAbGroup.free(1)


# ---------- tiling cohomology ----------

@pytest.mark.parametrize(
    "s, h1",
    [
        (solenoid(2), "Z[1/2]"),
        (solenoid(3), "Z[1/3]"),
        (period_doubling(), "Z[1/2] + Z"),
        (thue_morse(), "Z[1/2] + Z"),
    ],
)
def test_tiling_cohomology(s, h1):
    groups = tiling_cohomology(s)
    assert groups[0].render() == "Z"
    assert groups[1].render() == h1


# ---------- invariants over the built-in substitutions ----------

def _collared_thue_morse():
    return thue_morse().collar()[0]


SUBSTITUTIONS = [
    pytest.param(period_doubling, id="pd"),
    pytest.param(thue_morse, id="tm"),
    pytest.param(_collared_thue_morse, id="tm-collared"),
]


@pytest.mark.parametrize("make", [period_doubling, thue_morse, solenoid])
def test_collaring_keeps_the_language(make):
    s = make()
    collared, forget = s.collar()
    for n in range(1, 5):
        assert {forget.apply(w) for w in collared.allowed_words(n)} == s.allowed_words(n)


@pytest.mark.parametrize("make", SUBSTITUTIONS)
def test_approximant_self_map_grows_like_the_substitution(make):
    s = make()
    bd = bd_complex(s)
    n = len(s.alphabet)
    f1 = bd.self_map.pullback.matrix(1)
    # tile block is the abelianization; transitions go to single transitions
    assert f1.select_rows(range(n)).select_cols(range(n)) == s.abelianization().T
    for i in range(n, f1.rows):
        row = f1.row(i)
        assert not any(row[:n])
        assert sorted(row[n:])[-1] == 1 and sum(row[n:]) == 1

    spectrum = sympy.Matrix(s.abelianization().to_rows()).eigenvals()
    radius = max(abs(complex(sympy.N(lam))) for lam in spectrum)
    assert radius == pytest.approx(s.constant_length())


@pytest.mark.parametrize("make", SUBSTITUTIONS)
def test_approximant_is_connected(make):
    K = bd_complex(make()).complex
    assert compute_cohomology(K.cochain_complex, 0).group == FgAbGroup.free(1)
