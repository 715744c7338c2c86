import json
import subprocess
import sys

import pytest

from pftrees.cli import main

SAMPLE_JSON = '{"n":4,"edges":[[0,1,2],[1,2,2],[2,3,2],[2,4,1],[3,4,1],[0,4,3]]}'


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_poly_main(capsys):
    code, out, _ = run(capsys, "poly", "--formula", "main", "--x", "1,1")
    assert code == 0 and out.strip() == "2 + q"


@pytest.mark.parametrize("formula", ["brute", "main", "kungyan"])
def test_poly_formulas_agree(capsys, formula):
    code, out, _ = run(capsys, "poly", "--formula", formula, "--x", "1,3,1")
    assert code == 0 and out.strip() == "6 + 9*q + 12*q^2 + 12*q^3 + 9*q^4 + 6*q^5 + 3*q^6 + q^7"


def test_poly_graph_and_json(capsys):
    code, out, _ = run(capsys, "--output", "json", "poly", "--formula", "trees", "--graph", SAMPLE_JSON)
    assert code == 0
    terms = json.loads(out)["terms"]
    assert sum(int(c) for _, c in terms) == 116


def test_burn_vector_example(capsys):
    code, out, _ = run(capsys, "burn", "--mode", "vector", "--x", "1,3,1", "--alpha", "2,0,2")
    doc = json.loads(out)
    assert code == 0
    assert doc["tree"] == {"n": 3, "parent": [0, 1, 1]}
    assert doc["labeling"] == [[0, 1, 0], [1, 2, 1], [1, 3, 1]]
    assert doc["order"] == {"sequence": [3, 1, 2]}


def test_burn_unburn_pipe(tmp_path, capsys):
    for argv in (
        ["burn", "--mode", "vector", "--x", "1,3,1", "--alpha", "2,0,2"],
        ["burn", "--graph", SAMPLE_JSON, "--alpha", "1,2,0,0", "--order", "2,4,1,3", "--trace"],
    ):
        code, out, _ = run(capsys, *argv)
        assert code == 0
        f = tmp_path / "burn.json"
        f.write_text(out)
        code, out2, _ = run(capsys, "unburn", "--input", f"@{f}")
        assert code == 0
        alpha = argv[argv.index("--alpha") + 1]
        assert json.loads(out2)["alpha"] == [int(v) for v in alpha.split(",")]


def test_unburn_explicit_flags(capsys):
    code, out, _ = run(
        capsys, "unburn", "--mode", "graph", "--graph", SAMPLE_JSON, "--tree", "2,4,4,0",
        "--labeling", "[[0,4,2],[1,2,0],[2,4,0],[3,4,0]]",
    )
    assert code == 0 and json.loads(out) == {"alpha": [1, 2, 0, 0]}


def test_trace_golden(capsys):
    from pathlib import Path

    code, out, _ = run(capsys, "burn", "--graph", SAMPLE_JSON, "--alpha", "1,2,0,0", "--trace")
    lines = out.strip().splitlines()
    golden = (Path(__file__).parent / "golden" / "sample_graph_trace.jsonl").read_text().splitlines()
    assert lines[:-1] == golden


def test_json_reserialization_is_stable(capsys):
    code, out, _ = run(capsys, "burn", "--mode", "vector", "--x", "1,3,1", "--alpha", "2,0,2")
    assert json.dumps(json.loads(out), separators=(",", ":")) == out.strip()


def test_enumerate(capsys):
    code, out, _ = run(capsys, "enumerate", "--x", "1,1")
    assert out.split() == ["0,0", "0,1", "1,0"]
    code, out, _ = run(capsys, "--output", "json", "enumerate", "--x", "1,1,1", "--increasing")
    assert len(json.loads(out)) == 5
    code, out, _ = run(capsys, "enumerate", "--graph", SAMPLE_JSON, "--output", "json")
    assert len(json.loads(out)) == 116


def test_vector_from_file(tmp_path, capsys):
    f = tmp_path / "x.json"
    f.write_text("[1, 1, 1]")
    code, out, _ = run(capsys, "count", "--x", f"@{f}")
    assert code == 0 and out.strip() == "16"
    code, out, _ = run(capsys, "count", "--x", "2,1,1", "--formula", "trees")
    assert out.strip() == "50"


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "thm1.7", "--max-n", "3", "--x-range", "3")
    rep = json.loads(out)
    assert code == 0 and rep == {"identity": "thm1.7", "instances": 84, "failures": []}


@pytest.mark.parametrize("suite", ["eq1", "thm3.1", "kungyan", "cor1.8", "increasing", "spec-q", "exceptional", "classify"])
def test_verify_suites(capsys, suite):
    code, out, _ = run(capsys, "verify", suite, "--max-n", "2", "--x-range", "2", "--samples", "2")
    rep = json.loads(out)
    assert code == 0 and rep["identity"] == suite and rep["failures"] == [] and rep["instances"] > 0


def test_verify_failure_exit_code(capsys, monkeypatch):
    import pftrees.verify as v

    monkeypatch.setitem(v.SUITES, "eq1", lambda **kw: {"identity": "eq1", "instances": 1, "failures": [{"instance": 1}]})
    code, out, _ = run(capsys, "verify", "eq1")
    assert code == 1


def test_classify_cli(capsys):
    g = '{"n":3,"edges":[[0,1,2],[0,2,2],[0,3,2],[1,2,3],[1,3,3],[2,3,3]]}'
    code, out, _ = run(capsys, "classify", "--graph", g, "--output", "json")
    assert json.loads(out) == {"tag": "Kab", "a": 2, "b": 3, "x": [2, 3, 3]}


@pytest.mark.parametrize(
    "argv",
    [
        ["burn", "--graph", "{bad", "--alpha", "1"],
        ["burn", "--mode", "vector", "--x", "1,a", "--alpha", "0,0"],
        ["poly", "--formula", "nope", "--x", "1"],
        ["unburn", "--input", "[1,2]"],
        ["burn", "--graph", SAMPLE_JSON, "--alpha", "1,2"],
        ["classify", "--graph", '{"n":2,"edges":[[0,1,1]]}'],
        [],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 2 and err


def test_module_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "pftrees", "poly", "--formula", "kungyan", "--x", "1,1"],
        capture_output=True, text=True, check=False,
    )
    assert proc.returncode == 0 and proc.stdout.strip() == "2 + q"
