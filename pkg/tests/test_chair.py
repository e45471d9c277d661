import copy

import pytest

from chair import (
    TABLES,
    Ledger,
    LedgerState,
    ModelId,
    base_state,
    full_tables,
    load_ledger,
    one_step_quotient,
    propagate,
    solenoid_base,
    step,
)
from common.errors import InconsistentState, InputError
from common.models import get_model_loader
from locgroups import parse_limit_group


@pytest.fixture(scope="module")
def ledger():
    return load_ledger()


@pytest.fixture(scope="module")
def tables(ledger):
    return full_tables(ledger)


def payload():
    return copy.deepcopy(get_model_loader().load("chair_ledger"))


def _drop_delta(raw, edge):
    raw["deltas"] = [d for d in raw["deltas"] if d["edge"] != edge]
    return raw


# ---------- ledger ----------

def test_model_codes():
    assert ModelId.parse("(X,0)") == ModelId("X", "0")
    assert ModelId.parse("/−").code == "/-"
    assert str(ModelId.parse("00")) == "(0,0)"
    with pytest.raises(InputError):
        ModelId.parse("Q+")
    with pytest.raises(InputError):
        ModelId.parse("X")


def test_ledger_shape(ledger):
    assert len(ledger.nodes) == 9
    assert len(ledger.edges) == 12
    assert ledger.evidence == {2}
    assert ledger.base == ModelId("0", "0")
    assert len(list(ledger.maximal_paths())) == 6
    assert ledger.identified_patches(ModelId("X", "0")) == ("E=F=G=H",)


def test_ledger_edges_and_deltas(ledger):
    e = ledger.edge(ModelId("X", "0"), ModelId("/", "0"))
    assert e.degeneration == "A"
    assert ledger.delta(e).values == (-1, 0, 3)
    with pytest.raises(InputError):
        ledger.edge(ModelId("X", "0"), ModelId("0", "0"))


def test_missing_edge_rejected():
    raw = payload()
    raw["edges"] = raw["edges"][:-1]
    with pytest.raises(InconsistentState):
        Ledger.from_json(raw)


def test_nonzero_no_target_delta_rejected():
    raw = payload()
    for d in raw["deltas"]:
        if d["source"] == "no-target":
            d["values"][0] = 1
            break
    with pytest.raises(InconsistentState):
        Ledger.from_json(raw)


def test_unknown_delta_source_rejected():
    raw = payload()
    raw["deltas"][0]["source"] = "guessed"
    with pytest.raises(InconsistentState):
        Ledger.from_json(raw)


def test_unknown_degeneration_label_rejected():
    raw = payload()
    raw["edges"][0]["degeneration"] = "D"
    with pytest.raises(InputError):
        Ledger.from_json(raw)


# ---------- one step ----------

@pytest.mark.parametrize(
    "label, h1, h2",
    [("A", "Z", "Z[1/2]"), ("B", "Z", "Z[1/2] + Z"), ("C", "0", "Z[1/2] + Z")],
)
def test_one_step_quotients(ledger, label, h1, h2):
    e = next(e for e in ledger.edges if e.degeneration == label)
    groups = one_step_quotient(e)
    assert groups[0].is_trivial()
    assert groups[1].isomorphic(parse_limit_group(h1))
    assert groups[2].isomorphic(parse_limit_group(h2))


def test_solenoid_base():
    groups = solenoid_base()
    assert groups[0].render() == "Z"
    assert groups[1].render() == "Z[1/2]^2"
    assert groups[2].render() == "Z[1/4]"


def test_step_must_start_at_target(ledger):
    e = ledger.edge(ModelId("X", "+"), ModelId("/", "+"))
    with pytest.raises(InconsistentState):
        step(ledger, e, base_state(ledger))


def test_chair_pair_cancels(ledger):
    e = ledger.edge(ModelId("/", "0"), ModelId("0", "0"))
    slash, cancelled = step(ledger, e, base_state(ledger))
    assert not cancelled
    assert slash.h2.classified.render() == "Z[1/4] + Z[1/2] + Z"
    chair_edge = ledger.edge(ModelId("X", "0"), ModelId("/", "0"))
    chair, cancelled = step(ledger, chair_edge, slash)
    assert cancelled
    assert chair.h2.classified.render(True) == "(1/3)Z[1/4] + Z[1/2]^2"
    assert chair.q2.classified.render() == "Z_3 + Z[1/2]^2"


# ---------- tables ----------

@pytest.mark.parametrize("name", TABLES)
def test_tables_match_ledger_expectations(ledger, tables, name):
    expected = ledger.expected_table(name)
    assert len(expected) == 9
    for model, text in expected.items():
        got = tables.group(name, model)
        assert got.render(True) == parse_limit_group(text).render(True), (name, str(model))


def test_each_chain_cancels_once(tables):
    assert len(tables.paths) == 6
    assert tables.cancellations == (1,) * 6


def test_quotients_never_keep_quarter_localisation(tables):
    for name in ("q1", "q2"):
        for G in tables.table(name).values():
            assert 4 not in G.localized_summands


def test_propagation_order_does_not_matter(ledger, tables):
    state = LedgerState()
    for path in reversed(list(ledger.maximal_paths())):
        propagate(ledger, path, state)
    for name in TABLES:
        for model, G in tables.table(name).items():
            assert getattr(state.nodes[model], name).classified.render(True) == G.render(True)


def test_missing_delta_is_refused():
    ledger = Ledger.from_json(_drop_delta(payload(), ["X0", "/0"]))
    with pytest.raises(InconsistentState):
        full_tables(ledger)


def test_render_and_json(tables):
    text = tables.render(True)
    assert "H^2_Q(Ω, S2 x S2)" in text
    assert "(1/3)Z[1/4]" in text
    data = tables.to_json(False)
    assert data["tables"]["h2"]["X0"] == "Z[1/4] + Z[1/2]^2"
    assert data["tables"]["q1"]["X+"] == "Z^2"
    assert data["cancellations_per_path"] == [1] * 6
