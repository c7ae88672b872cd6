import json
import subprocess
import sys

import pytest

from sl2bi import cli
from sl2bi import oddgraph as og
from sl2bi import sl2modules as sm
from sl2bi.exactlinalg import Matrix


def run(capsys, *argv):
    code = cli.run(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_ring_small(capsys):
    code, out, _ = run(capsys, "verify-ring", "--max-degree", "5", "--words", "60", "--hopf-words", "10")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1
    assert [r["criterion"] for r in data["results"]] == [1, 2]
    assert all(r["passed"] for r in data["results"])


def test_verify_ring_normal_form(capsys):
    code, out, _ = run(capsys, "verify-ring", "--words", "5", "--hopf-words", "2", "--normalize", "F*E", "--format", "text")
    assert code == 0
    assert out.splitlines()[-1] == "normal form: -H + E F"


def test_leonard_example_with_negative_values(capsys):
    code, out, _ = run(capsys, "leonard", "--parity", "odd", "--n", "2", "--a", "2", "--b", "-3/2", "--c", "-2")
    assert code == 0
    data = json.loads(out)
    assert data["schema"] == 1 and data["is_leonard"] is True
    assert data["params"]["b"] == "-3/2"
    code2, out2, _ = run(capsys, "leonard", "--parity", "odd", "--n", "2", "--a", "2", "--b=-3/2", "--c=-2")
    assert code2 == 0 and out2 == out


def test_leonard_false_is_not_a_failure(capsys):
    code, out, _ = run(capsys, "leonard", "--parity", "odd", "--n", "2", "--a", "1/2", "--b", "-3/2", "--c", "-2")
    assert code == 0
    assert json.loads(out)["is_leonard"] is False


@pytest.mark.parametrize(
    "argv,message",
    [
        (["oddgraph", "--d", "0"], "d must be ≥ 1"),
        (["oddgraph", "--d", "2", "--base", "0,1,2"], "bad --base"),
        (["oddgraph", "--d", "5"], "--allow-large"),
        (["leonard", "--parity", "odd", "--n", "1", "--a", "1", "--b", "1", "--c", "1"], "n even"),
        (["leonard", "--parity", "odd", "--n", "2", "--a", "x", "--b", "1", "--c", "1"], "--a"),
        (["v1", "--m", "3", "--n", "2"], "m <= n"),
        (["cg", "--m", "1"], "--n"),
        (["module", "--n", "2", "--sign", "0"], "sign"),
        (["bogus"], "invalid choice"),
        ([], "required"),
    ],
)
def test_usage_errors_exit_2(capsys, argv, message):
    code, out, err = run(capsys, *argv)
    assert code == 2
    assert message in err
    assert out == ""


def test_help_exits_0(capsys):
    code, out, _ = run(capsys, "--help")
    assert code == 0 and "oddgraph" in out


def test_module_and_cg_reports(capsys):
    code, out, _ = run(capsys, "module", "--powerset", "3", "--decompose")
    assert code == 0
    data = json.loads(out)
    assert data["decomposition"] == [["L_3^+", 1], ["L_1^-", 2]]
    assert data["representation"]["dim"] == 8
    code, out, _ = run(capsys, "cg", "--m", "2", "--n", "3")
    assert code == 0
    assert [r["label"] for r in json.loads(out)["summands"]] == ["L_5^+", "L_3^-", "L_1^+"]


def test_v1_and_bi_reports(capsys):
    code, out, _ = run(capsys, "v1", "--m", "1", "--n", "2", "--swapped", "--delta", "-")
    assert code == 0
    data = json.loads(out)
    assert data["dimV1"] == 2 and all(data["relations"].values())
    code, out, _ = run(capsys, "bi", "--parity", "even", "--n", "1", "--a", "3/2", "--b", "1", "--c", "3/2", "--twist", "-1,1")
    assert code == 0
    data = json.loads(out)
    assert data["identification"]["twist"] == [-1, 1]
    assert data["identification"]["abc_squared"] == ["9/4", "1", "9/4"]


def test_oddgraph_report_is_deterministic(tmp_path, capsys):
    first, second = tmp_path / "a.json", tmp_path / "b.json"
    assert run(capsys, "oddgraph", "--d", "2", "--base", "0,1", "--out", str(first))[0] == 0
    assert run(capsys, "oddgraph", "--d", "2", "--base", "0,1", "--out", str(second))[0] == 0
    assert first.read_bytes() == second.read_bytes()
    data = json.loads(first.read_text())
    assert {"schema", "d", "base", "dim", "relations", "summands"} <= set(data)
    assert data["dim"] == 10 and all(data["relations"].values())
    assert sum(s["multiplicity"] * s["dims"] for s in data["summands"]) == 10


def test_suite_cap_d_limits_odd_graphs(monkeypatch, capsys):
    seen = []
    real = og.decompose_standard_module

    def spy(d, *args, **kwargs):
        seen.append(d)
        return real(d, *args, **kwargs)

    monkeypatch.setattr(og, "decompose_standard_module", spy)
    code, out, _ = run(capsys, "suite", "--cap-d", "1", "--criteria", "10")
    assert code == 0
    assert seen == [1]
    assert json.loads(out)["results"][0]["passed"] is True


def test_corrupted_build_exits_1_naming_identity(monkeypatch, capsys):
    real = sm.build_irreducible

    def corrupted(label):
        rep = real(label)
        return rep.with_generator("rho", Matrix.identity(rep.dim))

    monkeypatch.setattr(sm, "build_irreducible", corrupted)
    code, _, err = run(capsys, "module", "--n", "1")
    assert code == 1
    assert "rhoH+Hrho=0" in err
    code, out, err = run(capsys, "suite", "--criteria", "3", "--format", "text")
    assert code == 1
    assert "[FAIL] criterion  3" in out
    assert "rhoH+Hrho=0" in err


def test_console_entry_point_runs():
    proc = subprocess.run(
        [sys.executable, "-m", "sl2bi", "oddgraph", "--d", "0"], capture_output=True, text=True, check=False
    )
    assert proc.returncode == 2
    assert "d must be ≥ 1" in proc.stderr
