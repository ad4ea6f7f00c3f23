import json
import subprocess
import sys

import pytest

from indpoly.cli import main
from indpoly.dsl import build
from indpoly.formats import write_graph6


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_compute_c7(capsys):
    code, out, _ = run(capsys, "compute", "--expr", "C7")
    assert code == 0
    rec = json.loads(out)["graphs"][0]
    assert rec["coeffs"] == ["1", "7", "14", "7"]
    assert rec["input"] == {"source": "expr", "value": "C7"}
    assert rec["window"] == {"alpha": 3, "lower": 2, "upper": 2, "window": [2]}


def test_verify_prop3_on_four_c5(capsys):
    code, out, _ = run(capsys, "verify", "--checks", "prop3", "--expr", "4*C5")
    assert code == 0
    (verdict,) = json.loads(out)["graphs"][0]["verdicts"]
    assert verdict["premise_holds"] is False and verdict["conclusion_holds"] is False
    viol = verdict["first_violation"]
    assert (viol["k"], viol["left"], viol["right"]) == (5, "4000", "4250")


def test_fixtures_run(capsys):
    code, out, _ = run(capsys, "fixtures", "--run")
    payload = json.loads(out)
    assert code == 0 and payload["failed"] == 0 and payload["passed"] > 0


def test_fixtures_list_marks_reconstructions(capsys):
    code, out, _ = run(capsys, "fixtures", "--list")
    names = {f["name"]: f["reconstructed"] for f in json.loads(out)["fixtures"]}
    assert code == 0 and names["vwc-12"] is True and names["C7"] is False


def test_json_is_byte_identical(capsys):
    first = run(capsys, "verify", "--expr", "K3^* | P4")[1]
    second = run(capsys, "verify", "--expr", "K3^* | P4")[1]
    assert first == second


def test_classify_and_formats(capsys, tmp_path):
    path = tmp_path / "g.txt"
    path.write_text("n 4\n0 1\n0 2\n0 3\n")
    code, out, _ = run(capsys, "classify", "--edges", str(path))
    classes = json.loads(out)["graphs"][0]["classes"]
    assert code == 0 and classes["quasi_regularizable"] is False
    code, out, _ = run(capsys, "compute", "--format", "csv", "--expr", "K1,3")
    assert code == 0 and "1;4;3;1" in out
    code, out, _ = run(capsys, "verify", "--format", "text", "--checks", "prop2", "--expr", "K1,3")
    assert code == 0 and "prop2" in out


def test_g6_file_with_several_graphs(capsys, tmp_path):
    path = tmp_path / "corpus.g6"
    path.write_text("D?{\n@\n")
    code, out, _ = run(capsys, "compute", "--g6", str(path))
    graphs = json.loads(out)["graphs"]
    assert code == 0 and [g["coeffs"] for g in graphs] == [["1", "5", "6", "4", "1"], ["1", "1"]]


def test_hunt_exit_codes(capsys, tmp_path):
    path = tmp_path / "corpus.g6"
    path.write_text("\n".join(write_graph6(build(e)) for e in ("K24 + (K3 | K3 | K4)", "C5")) + "\n")
    code, out, _ = run(capsys, "hunt", "--corpus", str(path), "--predicate", "any", "--property", "unimodal")
    payload = json.loads(out)
    assert code == 1 and len(payload["counterexamples"]) == 1
    assert payload["meta"]["graphs_scanned"] == 2
    code, out, _ = run(capsys, "hunt", "--corpus", "exhaustive:4", "--predicate", "well-covered", "--property", "log-concave")
    assert code == 0 and json.loads(out)["meta"]["graphs_scanned"] == 1 + 2 + 8 + 64


@pytest.mark.parametrize(
    "argv",
    [
        ["compute", "--expr", "C2"],
        ["compute"],
        ["frobnicate"],
        ["compute", "--expr", "K3", "--bogus"],
        ["verify", "--checks", "prop9", "--expr", "K3"],
        ["compute", "--expr", "K41"],
        ["hunt", "--corpus", "exhaustive:9", "--predicate", "any", "--property", "unimodal"],
    ],
)
def test_usage_errors_exit_2(capsys, argv):
    code, out, err = run(capsys, *argv)
    assert code == 2 and out == "" and "error" in err


def test_global_flags_either_side(capsys):
    a = run(capsys, "--format", "text", "compute", "--expr", "P3")[1]
    b = run(capsys, "compute", "--format", "text", "--expr", "P3")[1]
    assert a == b and not a.startswith("{")


def test_console_script():
    proc = subprocess.run(
        [sys.executable, "-m", "indpoly.cli", "compute", "--expr", "C5"],
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0 and json.loads(proc.stdout)["graphs"][0]["coeffs"] == ["1", "5", "5"]
