import json
import subprocess
import sys

import pytest

from qzeta.cli import main

TRIANGLE = "n 3\ne 0 1\ne 1 2\ne 0 2\n"
PATH4 = "n 4\ne 0 1\ne 1 2\ne 2 3\n"
JSON_KEYS = {"command", "inputs", "values", "discrepancies", "warnings", "seed"}


@pytest.fixture
def files(tmp_path):
    paths = {}
    for name, text in [("tri", TRIANGLE), ("p4", PATH4), ("bad", "n 3\ne 0 1 2\n"),
                       ("disc", "n 3\ne 0 1\n"),
                       ("w", "w 0 1 0 0 0.5 0\nw 2 0 0.3 0.1 0 0\n")]:
        p = tmp_path / f"{name}.txt"
        p.write_text(text)
        paths[name] = str(p)
    return paths


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_info_triangle(capsys, files):
    code, out, _ = run(capsys, "info", files["tri"])
    assert code == 0
    assert "n=3 m=3 r=1" in out
    assert out.count("inverse") == 6


def test_info_tree_flag(capsys, files):
    code, out, _ = run(capsys, "info", files["p4"])
    assert code == 0 and "r=0 tree" in out


def test_info_json(capsys, files):
    code, out, _ = run(capsys, "info", files["tri"], "--json")
    data = json.loads(out)
    assert code == 0 and set(data) == JSON_KEYS
    assert data["values"]["arcs"][:2] == [[0, 1], [1, 0]]


def test_info_malformed(capsys, files):
    code, _, err = run(capsys, "info", files["bad"])
    assert code == 2 and "line 2" in err


def test_info_disconnected(capsys, files):
    code, _, err = run(capsys, "info", files["disc"])
    assert code == 2 and "ValidationError" in err


def test_missing_file(capsys, tmp_path):
    code, _, err = run(capsys, "info", str(tmp_path / "nope"))
    assert code == 2 and "cannot read" in err


def test_zeta_triangle(capsys, files):
    code, out, _ = run(capsys, "zeta", files["tri"], "--t", "0.1,0,0,0")
    assert code == 0
    assert "hashimoto: 0.996005996001" in out
    assert "bass: 0.996005996001" in out
    assert "discrepancy hashimoto-bass" in out


def test_zeta_j_direction(capsys, files):
    code, out, _ = run(capsys, "zeta", files["tri"], "--t", "0,0,0.1,0", "--json")
    data = json.loads(out)
    assert code == 0 and set(data) == JSON_KEYS
    for name in ("hashimoto", "bass"):
        assert data["values"][name] == pytest.approx(1.000002000001, rel=1e-12)
    assert data["values"]["passed"] is True


def test_zeta_tree_pole(capsys, files):
    code, _, err = run(capsys, "zeta", files["p4"], "--t", "1,0,0,0", "--method", "bass")
    assert code == 2 and "DomainError" in err


def test_zeta_weights(capsys, files):
    code, out, _ = run(capsys, "zeta", files["tri"], "--weights", files["w"],
                       "--t", "0.05,0.01,0,0.02", "--json")
    data = json.loads(out)
    assert code == 0 and data["inputs"]["weights"] == files["w"]
    assert data["discrepancies"]["hashimoto-bass"] <= 1e-8


def test_zeta_tol_fail(capsys, files):
    # at this t the two routes differ by round-off (about 5e-16), above a 1e-300 tolerance
    code, out, _ = run(capsys, "zeta", files["tri"], "--t", "0.7,0.3,0.2,0.1", "--tol", "1e-300",
                       "--json")
    data = json.loads(out)
    assert data["discrepancies"]["hashimoto-bass"] > 1e-300
    assert code == 1 and data["values"]["passed"] is False


@pytest.mark.parametrize("t", ["0.1,0,0", "a,b,c,d", "0.1,0,0,nan"])
def test_zeta_bad_t(capsys, files, t):
    code, _, err = run(capsys, "zeta", files["tri"], "--t", t)
    assert code == 2 and "--t" in err


def test_check_passes(capsys):
    code, out, _ = run(capsys, "check", "--trials", "10", "--seed", "7")
    assert code == 0 and out.startswith("10/10 pass")


def test_check_fixed_graph(capsys, files):
    code, out, _ = run(capsys, "check", files["p4"], "--trials", "5", "--json")
    data = json.loads(out)
    assert code == 0 and data["values"]["trees"] == 5 and data["seed"] == 0


def test_check_failure_exit(capsys):
    code, _, _ = run(capsys, "check", "--trials", "5", "--radius", "0.9", "--tol", "1e-300")
    assert code == 1


@pytest.mark.parametrize("argv", [
    ["check", "--trials", "0"],
    ["check", "--tol", "0"],
    ["check", "--n-max", "0"],
    ["check", "--seed", "-1"],
    ["euler", "TRI", "--t", "0.01,0,0,0", "--max-len", "0"],
])
def test_usage_errors(capsys, files, argv):
    argv = [files["tri"] if a == "TRI" else a for a in argv]
    code, _, err = run(capsys, *argv)
    assert code == 2 and err.startswith("error:")


def test_argparse_usage_exit(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["zeta"])
    assert exc.value.code == 2
    with pytest.raises(SystemExit) as exc:
        main(["frobnicate"])
    assert exc.value.code == 2


def test_euler_compare(capsys, files):
    code, out, _ = run(capsys, "euler", files["tri"], "--t", "0.05,0,0,0", "--max-len", "9",
                       "--compare", "--json")
    data = json.loads(out)
    assert code == 0 and set(data) == JSON_KEYS
    assert data["discrepancies"]["gap"] <= 1e-12
    assert data["warnings"] == ["convergence not guaranteed (|t|·max|w̃| ≥ 1/(8m²))"]


def test_euler_guard_warning_text(capsys, files):
    code, out, _ = run(capsys, "euler", files["tri"], "--t", "0.5,0,0,0", "--max-len", "4")
    assert code == 0
    assert "warning: convergence not guaranteed (|t|·max|w̃| ≥ 1/(8m²))" in out


def test_euler_below_girth(capsys, files):
    code, out, _ = run(capsys, "euler", files["tri"], "--t", "0.01,0,0,0", "--max-len", "2",
                       "--compare", "--json")
    data = json.loads(out)
    assert data["values"]["truncated"] == 1.0
    assert data["discrepancies"]["gap"] == abs(1.0 - data["values"]["bass"])


def test_euler_table(capsys, files):
    code, out, _ = run(capsys, "euler", files["tri"], "--t", "0.01,0,0,0", "--max-len", "6",
                       "--compare")
    lines = out.splitlines()
    assert code == 0 and lines[0].split()[:2] == ["len", "cycles"]
    assert any(line.startswith("gap:") for line in lines)


def test_selftest(capsys):
    code, out, _ = run(capsys, "selftest", "--seed", "3")
    assert code == 0
    assert out.count("PASS") == 6 and "FAIL" not in out


def _check_json():
    cmd = [sys.executable, "-m", "qzeta", "check", "--trials", "50", "--seed", "7", "--json"]
    return subprocess.run(cmd, capture_output=True, check=False)


def test_check_json_deterministic():
    a, b = _check_json(), _check_json()
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout
    data = json.loads(a.stdout)
    assert data["values"]["passed"] == 50 and data["seed"] == 7
