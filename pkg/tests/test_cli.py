import json
import subprocess
import sys

import pytest

from umbral_clifford.cli import main, run_command
from umbral_clifford.serialize import serialize


def test_decompose_x1_squared(P):
    r = run_command(["decompose", "--n", "2", "--family", "continuum", "--k", "3", "--expr", "x1^2"])
    assert r.exit_code == 0
    assert [str(c) for c in r.payload] == [
        "1/4*x1^2 - 1/2*x1*x2*e1*e2 - 1/4*x2^2", "-1/4*x1*e1 + 1/4*x2*e2", "-1/2"]


def test_verify_osp12_forward():
    r = run_command(["verify", "--suite", "osp12", "--n", "2", "--family", "forward", "--h", "1",
                     "--max-degree", "5", "--trials", "50", "--seed", "7"])
    assert r.exit_code == 0
    assert len(r.payload) == 9 and all(rep.passed for rep in r.payload)


def test_basic_seq(P):
    r = run_command(["basic-seq", "--alpha", "3,0", "--n", "2", "--family", "forward", "--h", "1"])
    assert r.exit_code == 0 and r.payload == P("x1*(x1 - 1)*(x1 - 2)")


def test_verify_is_deterministic():
    argv = ["verify", "--suite", "weyl", "--n", "3", "--family", "central", "--h", "1/2",
            "--variant", "symmetrized", "--max-degree", "4", "--trials", "5", "--seed", "3"]
    a, b = run_command(argv), run_command(argv)
    assert a.payload_json() == b.payload_json()


def test_failed_suite_exits_one_with_counterexample():
    r = run_command(["verify", "--suite", "oscillator", "--n", "2", "--hbar", "1", "--trials", "3", "--max-degree", "3"])
    assert r.exit_code == 1
    doc = json.loads(r.payload_json())
    failing = [d for d in doc if not d["passed"]]
    assert failing and all(d["counterexample"]["input"]["terms"] for d in failing)


@pytest.mark.parametrize("argv,code", [
    (["decompose", "--n", "2", "--k", "2", "--expr", "x1^2"], 3),
    (["fischer", "--n", "2", "--expr", "x1^2 + x2"], 3),
    (["decompose", "--n", "2", "--k", "2", "--expr", "x3"], 2),
    (["decompose", "--n", "2", "--k", "2", "--expr", "x1 +* 2"], 2),
    (["verify", "--suite", "nope", "--n", "2"], 2),
    (["verify", "--suite", "weyl", "--n", "2", "--bogus"], 2),
    (["verify", "--suite", "weyl", "--n", "2", "--family", "forward"], 2),
    (["verify", "--suite", "weyl", "--n", "2", "--h", "1"], 2),
    (["apply", "--n", "2", "--op", "dirac", "--family", "forward", "--h", "0", "--expr", "x1"], 2),
    (["basic-seq", "--n", "2", "--alpha", "1"], 2),
    ([], 2),
])
def test_exit_codes(argv, code):
    assert run_command(argv).exit_code == code


def test_precondition_payload_has_witness():
    r = run_command(["decompose", "--n", "2", "--k", "2", "--expr", "x1^2"])
    doc = json.loads(r.payload_json())
    assert doc["error"] == "precondition"
    assert doc["witness"] == {"n": 2, "terms": [{"coef": "-2", "monomial": [0, 0], "blade": []}]}


@pytest.mark.parametrize("op,expected", [
    ("dirac", "-1"),
    ("vector", "-x1^2 - x1*x2*e1*e2"),
    ("euler", "x1*e1"),
    ("gamma", "x2*e2"),
    ("laplacian", "0"),
])
def test_apply_operators(op, expected):
    r = run_command(["apply", "--n", "2", "--op", op, "--expr", "x1*e1"])
    assert r.exit_code == 0 and str(r.payload) == expected


def test_apply_oscillator_ops(P):
    r = run_command(["apply", "--n", "2", "--op", "potential", "--hbar", "1", "--expr", "1"])
    assert r.payload == P("1/2*x1^2 + 1/2*x2^2 - 1/2*x1*e1 - 1/2*x2*e2 - 1/8")
    assert run_command(["apply", "--n", "2", "--op", "J", "--expr", "1"]).payload == P("1/2")
    assert run_command(["apply", "--n", "2", "--op", "H", "--expr", "1"]).payload == P("1/2*x1^2 + 1/2*x2^2")


def test_input_file_expression_and_json(tmp_path, P):
    expr = tmp_path / "f.txt"
    expr.write_text("x1*e1\n")
    doc = tmp_path / "f.json"
    doc.write_text(serialize(P("x1*e1")))
    for path in (expr, doc):
        r = run_command(["fischer", "--n", "2", "--input", str(path)])
        assert r.exit_code == 0
        assert r.payload.components == (P("1/2*x1*e1 - 1/2*x2*e2"), P("1/2"))
    r = run_command(["fischer", "--n", "3", "--input", str(doc)])
    assert r.exit_code == 2
    r = run_command(["fischer", "--n", "2", "--input", str(tmp_path / "missing")])
    assert r.exit_code == 2


def test_fischer_degree_flag(P):
    assert run_command(["fischer", "--n", "2", "--degree", "2", "--expr", "x1^2"]).exit_code == 0
    assert run_command(["fischer", "--n", "2", "--degree", "1", "--expr", "x1^2"]).exit_code == 3


def test_main_streams(capsys):
    code = main(["decompose", "--n", "2", "--k", "3", "--expr", "x1^2"])
    out, err = capsys.readouterr()
    assert code == 0
    assert json.loads(out)["k"] == 3
    assert "f_2 = -1/2" in err


def test_console_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "umbral_clifford.cli", "basic-seq", "--alpha", "2", "--n", "1", "--family", "central", "--h", "1"],
        capture_output=True, text=True,
    )
    assert proc.returncode == 0
    assert json.loads(proc.stdout) == {"n": 1, "terms": [{"coef": "1", "monomial": [2], "blade": []}]}
