import json
import os
import subprocess
import sys

import pytest

from leibts.cli import main
from leibts.fileformat import parse_document, serialize, serialize_rep
from leibts.fixtures import ex1, ex1_triangular_rep
from leibts.algebra import TripleTable
from leibts.envelope import build_envelope


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr().out


def run_json(capsys, *argv):
    code, out = run(capsys, "--report", "json", *argv)
    return code, json.loads(out), out


@pytest.fixture
def broken(tmp_path):
    """EX1 with one structure constant changed."""
    d = {k: {i: c for i, c in enumerate(v) if c} for k, v in ex1().as_dict().items()}
    d[(1, 1, 1)] = {0: 1, 1: 1}
    p = tmp_path / "broken.lts"
    p.write_text(serialize(TripleTable.from_products(["x", "y"], d), "broken"))
    return str(p)


def test_check_pass(capsys):
    code, out = run(capsys, "check", "@ex1")
    assert code == 0 and out.startswith("check: PASS")


def test_check_fail_with_witness(capsys, broken):
    code, rep, _ = run_json(capsys, "check", broken)
    assert code == 1 and rep["passed"] is False
    w = rep["findings"]["leibts"]["witnesses"][0]
    assert set(w) == {"identity", "at", "lhs", "rhs"}


def test_check_ex3_fails(capsys):
    code, rep, _ = run_json(capsys, "check", "@ex3")
    assert code == 1
    assert rep["findings"]["leibts"]["violations"] == 10


def test_parse_error_exit_2(capsys, tmp_path):
    p = tmp_path / "bad.lts"
    p.write_text("system s\ndim 1\nbasis x\nprod x x x = q\nend\n")
    code, rep, _ = run_json(capsys, "check", str(p))
    assert code == 2 and rep["findings"]["error"] == "parse"
    assert "line 4" in rep["findings"]["message"]


def test_missing_file_exit_2(capsys, tmp_path):
    assert run(capsys, "check", str(tmp_path / "nope.lts"))[0] == 2
    assert run(capsys, "check", "@nope")[0] == 2


def test_bad_arguments_exit_2(capsys):
    assert main(["series", "@ex1"]) == 2
    assert main(["frobnicate"]) == 2
    capsys.readouterr()


def test_precondition_exit_3(capsys):
    code, rep, _ = run_json(capsys, "radical", "@ex3")
    assert code == 3 and rep["findings"]["error"] == "precondition"
    code, _, _ = run_json(capsys, "series", "@ex1", "--kind", "derived", "--ideal", "y")
    assert code == 3


def test_radical_json(capsys):
    code, rep, _ = run_json(capsys, "radical", "@ex1")
    assert code == 0
    assert list(rep) == ["command", "input_digest", "passed", "findings"]
    assert rep["input_digest"].startswith("sha256:")
    f = rep["findings"]
    assert f["R"]["basis"] == [["1/1", "0/1"], ["0/1", "1/1"]]
    assert f["Ker"]["basis"] == [["1/1", "0/1"]]
    assert f["N"]["basis"] == [["1/1", "0/1"]]
    assert f["semisimple"] is False


def test_json_deterministic(capsys):
    outs = [run_json(capsys, "suite", "@ex2")[2] for _ in range(2)]
    assert outs[0] == outs[1]


def test_env_default(capsys, monkeypatch):
    monkeypatch.setenv("TK_REPORT", "json")
    code, out = run(capsys, "check", "@z1")
    assert json.loads(out)["passed"] is True
    code, out = run(capsys, "check", "@z1", "--report", "text")
    assert out.startswith("check: PASS")


def test_envelope_out(capsys, tmp_path):
    out = tmp_path / "u.lts"
    code, rep, _ = run_json(capsys, "envelope", "@ex1", "--out", str(out))
    assert code == 0 and rep["findings"]["dim"] == 4
    block = parse_document(out.read_text())[0]
    assert block.obj == build_envelope(ex1()).bracket
    assert block.grading is not None


def test_series_ideal_levi_suite(capsys):
    code, rep, _ = run_json(capsys, "series", "@ex1", "--kind", "derived")
    assert code == 0 and rep["findings"]["series"]["dims"] == [2, 1, 0]
    code, rep, _ = run_json(capsys, "series", "@ex2", "--kind", "lower", "--ideal", "x,y")
    assert code == 0 and rep["findings"]["series"]["reaches_zero"] is True
    code, rep, _ = run_json(capsys, "ideal", "@ex1", "--gens", "x")
    assert code == 0 and rep["findings"]["closure"]["dim"] == 1
    assert run_json(capsys, "levi", "@sl2lts", "--subsystem", "h,e,f")[0] == 0
    assert run_json(capsys, "levi", "@ex1", "--subsystem", "y")[0] == 1
    assert run_json(capsys, "suite", "@z1")[0] == 0
    assert run_json(capsys, "suite", "@ex3")[0] == 3


def test_rep_check(capsys, tmp_path):
    p = tmp_path / "rep.lts"
    p.write_text(serialize_rep(ex1_triangular_rep(), "V", "ex1"))
    code, rep, _ = run_json(capsys, "rep-check", str(p))
    assert code == 0 and rep["findings"]["Z"]["dim"] == 1
    q = tmp_path / "rep_only.lts"
    q.write_text(serialize_rep(ex1_triangular_rep(), "V", "ex1", with_system=False))
    assert run_json(capsys, "rep-check", str(q))[0] == 0  # resolved from the corpus
    code, rep, _ = run_json(capsys, "rep-check", str(q), "--system", "@ex1")
    assert code == 0


def test_bad_rep_fails(capsys, tmp_path):
    p = tmp_path / "rep.lts"
    p.write_text("rep V over ex1\nvdim 2\nvbasis v w\nl x y w = v\nend\n")
    code, rep, _ = run_json(capsys, "rep-check", str(p))
    assert code == 1 and rep["findings"]["representation"]["violations"] > 0


def test_console_script():
    env = dict(os.environ, TK_REPORT="json")
    proc = subprocess.run([sys.executable, "-m", "leibts.cli", "check", "@ex1"],
                          capture_output=True, text=True, env=env)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["command"] == "check"
