import json
import subprocess
import sys
from fractions import Fraction

from axialmono import serialize
from axialmono.axial import block, extract
from axialmono.cli import main, run
from axialmono.mpoly import CliffPoly
from axialmono.spherical import inner_monogenic_basis


def test_block_example():
    code, report = run(["block", "--family", "1", "--m", "3", "--k", "1", "--ell", "1",
                        "--n", "1"])
    assert code == 0
    assert report["result"]["cr_left"] == "0" and report["result"]["cr_right"] == "0"
    assert report["passed"] is True


def test_usage_errors_exit_2():
    assert run(["no-such-command"])[0] == 2
    assert run(["block", "--m", "3"])[0] == 2
    assert run(["block", "--family", "3", "--m", "3", "--k", "0", "--ell", "1", "--n", "1"])[0] == 2
    assert run(["planewave", "--m", "3", "--k", "0", "--ell", "1", "--r", "-1"])[0] == 2


def test_bad_input_file_exit_2(tmp_path):
    path = tmp_path / "g.json"
    path.write_text(serialize.dumps(CliffPoly.var(2, 0)))
    code, report = run(["ck-extend", "--input", str(path)])
    assert code == 2 and "x_0" in report["error"]


def test_failed_check_exit_1(tmp_path):
    from axialmono.clifford import Multivector
    g = CliffPoly.var(2, 1) * CliffPoly.constant(Multivector.basis(2, 2))
    path = tmp_path / "g.json"
    path.write_text(serialize.dumps(g))
    code, report = run(["ck-extend", "--input", str(path), "--check", "two-sided"])
    assert code == 1 and report["passed"] is False
    assert report["input_sha256"]


def test_decompose_and_primitivize(tmp_path):
    P = inner_monogenic_basis(3, 1, 1)[0]
    F = block(2, P, 0)
    path = tmp_path / "M.json"
    path.write_text(serialize.dumps(F))
    code, report = run(["decompose", "--input", str(path)])
    assert code == 0 and report["result"]["reconstruction_residual"] == "0"
    qpath = tmp_path / "q.json"
    qpath.write_text(serialize.dumps(extract(F, P)))
    code, report = run(["primitivize", "--input", str(qpath), "--rect", "0", "1", "1", "2"])
    assert code == 0 and isinstance(report["result"]["c"], Fraction)


def test_vekua_and_fischer(tmp_path):
    code, report = run(["vekua", "--m", "3", "--k", "1", "--ell", "1", "--n", "1",
                        "--family", "1"])
    assert code == 0 and set(report["result"]["residuals"].values()) == {"0"}
    path = tmp_path / "p.json"
    path.write_text(serialize.dumps(CliffPoly.var(2, 1) ** 2))
    assert run(["fischer", "--input", str(path)])[0] == 0
    assert run(["fischer", "--input", str(path), "--mode", "monogenic"])[0] == 0
    assert run(["fischer", "--input", str(path), "--mode", "other"])[0] == 2


def test_numeric_commands():
    assert run(["planewave", "--m", "3", "--k", "1", "--ell", "1"])[0] == 0
    assert run(["specfun-selftest"])[0] == 0
    code, report = run(["basis", "--m", "2", "--k", "1", "--ell", "1"])
    assert code == 0 and report["result"]["dimension"] == 2


def test_threads_variable(monkeypatch):
    monkeypatch.setenv("AXIAL_THREADS", "4")
    assert run(["basis", "--m", "2", "--k", "0", "--ell", "0"])[1]["threads"] == 4
    monkeypatch.setenv("AXIAL_THREADS", "zero")
    assert run(["basis", "--m", "2", "--k", "0", "--ell", "0"])[0] == 2


def test_main_prints_json(capsys):
    assert main(["basis", "--m", "2", "--k", "0", "--ell", "1"]) == 0
    out = capsys.readouterr().out
    assert json.loads(out)["result"]["dimension"] == 2


def test_byte_stable_output():
    cmd = [sys.executable, "-m", "axialmono", "block", "--family", "2", "--m", "3", "--k", "2",
           "--ell", "1", "--n", "1", "--seed", "3"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    assert first == second and first


def test_quick_battery_exit_code():
    code, report = run(["battery", "--quick"])
    assert code == 0
    assert all(c["passed"] for c in report["result"]["criteria"])
