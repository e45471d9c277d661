import io
import json
import logging

import pytest

from cli import CHECKS, run

DIAG_2_3 = '{"rows": 2, "cols": 2, "entries": [2, 0, 0, 3]}'


def call(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def test_snf_text():
    code, out, _ = call("snf", DIAG_2_3)
    assert code == 0
    assert "invariant factors: 1, 6" in out
    assert "cokernel: Z_6" in out


@pytest.mark.parametrize("argv", [["--format", "json", "snf", DIAG_2_3], ["snf", DIAG_2_3, "--format", "json"]])
def test_snf_json(argv):
    code, out, _ = call(*argv)
    assert code == 0
    data = json.loads(out)
    assert data["invariant_factors"] == [1, 6]
    assert data["rank"] == 2


def test_cohomology_of_builtin_pair_space():
    code, out, _ = call("cohomology", "figure8", "--degree", "1")
    assert code == 0
    assert out.strip() == "H^1 = Z^3"


def test_quotient_figure_eight():
    code, out, _ = call("quotient", "figure8")
    assert code == 0
    lines = out.splitlines()
    assert "H^1_Q = Z_2 + Z" in lines
    assert "exact: yes" in lines


def test_limit_inline_system():
    code, out, _ = call("limit", '{"matrix": [[2, 0], [0, 1]]}')
    assert code == 0
    assert "Z[1/2] + Z" in out.splitlines()[0]


def test_tiling_cohomology():
    code, out, _ = call("tiling", "pd")
    assert code == 0
    assert "H^1(Ω_PD) = Z[1/2] + Z" in out.splitlines()


def test_tiling_inline_rules():
    code, out, _ = call("tiling", "a->aaa")
    assert code == 0
    assert out.splitlines()[-1].endswith("= Z[1/3]")


def test_period_doubling_over_solenoid():
    code, out, _ = call("tiling", "pd", "--quotient-onto", "solenoid")
    assert code == 0
    assert "H^1_Q = Z" in out.splitlines()


def test_thue_morse_over_period_doubling():
    code, out, _ = call("tiling", "tm", "--quotient-onto", "pd", "--letter-map", "tm-pd", "--format", "json")
    assert code == 0
    data = json.loads(out)
    h1 = next(d for d in data["degrees"] if d["degree"] == 1)
    assert h1["quotient"] == "Z_2"


def test_missing_letter_map_is_an_error():
    code, out, err = call("tiling", "tm", "--quotient-onto", "pd")
    assert code == 1
    assert out == ""
    assert err.startswith("error: InputError:")


def test_unknown_input_is_an_error():
    code, _, err = call("snf", "no-such-model")
    assert code == 1
    assert "InputError" in err


@pytest.mark.parametrize(
    "argv",
    [[], ["tiling", "pd", "--letter-map", "tm-pd"], ["examples"], ["snf"], ["frobnicate"]],
)
def test_usage_errors_exit_2(argv):
    code, _, _ = call(*argv)
    assert code == 2


def test_examples_listing():
    code, out, _ = call("examples", "--list")
    assert code == 0
    assert out.split() == list(CHECKS)


def test_examples_single_check():
    code, out, _ = call("examples", "figure8-cover", "degenerations")
    assert code == 0
    assert "2 passed, 0 failed" in out


def test_unknown_check_is_an_error():
    code, _, err = call("examples", "no-such-check")
    assert code == 1
    assert "unknown checks" in err


def test_chair_tables():
    code, out, _ = call("chair", "--tables", "--track-extensions")
    assert code == 0
    assert "Z_3 + Z[1/2]^2" in out
    assert "(1/3)Z[1/4] + Z[1/2]^2" in out


def test_chair_edge_listing():
    code, out, _ = call("chair", "--format", "json")
    assert code == 0
    edges = json.loads(out)["edges"]
    assert len(edges) == 12
    chair = next(e for e in edges if (e["source"], e["target"]) == ("X0", "/0"))
    assert chair["delta"] == "quoted"


def test_export_dot(tmp_path):
    target = tmp_path / "x2.dot"
    code, out, _ = call("export-dot", "figure8", "--output", str(target))
    assert code == 0
    assert target.exists()
    assert "p1" in target.read_text(encoding="utf-8")


@pytest.fixture
def root_handlers():
    root = logging.getLogger()
    before, level = list(root.handlers), root.level
    yield root
    for h in root.handlers[len(before):]:
        h.close()
    root.handlers[:] = before
    root.setLevel(level)


def test_log_file_receives_records(tmp_path, root_handlers):
    target = tmp_path / "logs" / "run.log"
    code, _, _ = call("--log-file", str(target), "--verbose", "tiling", "pd")
    assert code == 0
    assert "Z[1/2] + Z" in target.read_text(encoding="utf-8")
