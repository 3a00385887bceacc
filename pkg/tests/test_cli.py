import io
import json
import subprocess
import sys

import numpy as np
import pytest

from gl22r import cli
from gl22r.fundrep import GeneratorTerm, represent
from gl22r.params import derive_kinematics, make_global
from gl22r.rmatrix import r_fund_table


def run(args):
    out = io.StringIO()
    code = cli.run(args, stdout=out)
    return code, out.getvalue()


def test_parse_complex():
    assert cli.parse_complex("1.5,-2") == 1.5 - 2j
    assert cli.parse_complex("3") == 3
    for bad in ("a,b", "1,2,3", ""):
        with pytest.raises(cli.ConfigError):
            cli.parse_complex(bad)


def test_verify_cybe_example():
    code, text = run(["verify", "--suite", "cybe", "--h", "0.3,0", "--alpha", "1,0", "--seed", "7"])
    assert code == 0
    rep = json.loads(text)
    assert rep["schema"] == 1 and rep["passed"]
    assert rep["suites"]["cybe"]["max_residual"] < 1e-9
    for c in rep["suites"]["cybe"]["checks"]:
        assert "threshold" in c and "residual" in c


def test_verify_identities_lists_samples():
    code, text = run(["verify", "--suite", "identities", "--samples", "5"])
    rep = json.loads(text)
    names = [c["name"] for c in rep["suites"]["identities"]["checks"]]
    assert code == 0 and "pair 0 linear" in names and "pair 4 quadratic" in names


def test_verify_limits_table():
    code, text = run(["verify", "--suite", "limits", "--family", "full_rational", "--samples", "2"])
    rep = json.loads(text)
    table = rep["suites"]["limits"]["tables"]["full_rational convergence"]
    assert code == 0
    assert [row[0] for row in table["rows"]] == [1e-2, 1e-3, 1e-4]
    assert table["order"] >= 0.9


def test_failure_exit_code():
    code, _ = run(["verify", "--suite", "constraints", "--samples", "3", "--tolerance", "1e-30"])
    assert code == 1


@pytest.mark.parametrize("args", [
    ["verify", "--suite", "nope"],
    ["verify", "--tolerance", "-1"],
    ["coeffs", "--h", "x,y"],
    ["coeffs", "--x1", "1,0"],
    ["coeffs", "--x1", "2,0", "--x2", "2,0"],
    ["dump", "--what", "generator", "--generator", "Z99"],
    ["verify", "--h", "0,0"],
    ["nonsense"],
    ["graph", "--format", "csv"],
])
def test_config_errors(args):
    code, _ = run(args)
    assert code == 2


def test_coeffs_match_library():
    code, text = run(["coeffs", "--h", "0.4,0.1", "--x1", "2,0.5", "--x2=-1.5,1.5", "--g2", "1.1,0"])
    rep = json.loads(text)
    gp = make_global(0.4 + 0.1j, 1.0)
    r = r_fund_table(gp, derive_kinematics(gp, 2 + 0.5j, 1.0), derive_kinematics(gp, -1.5 + 1.5j, 1.1))
    for k, v in r.coeffs.as_dict().items():
        assert complex(*rep["coefficients"][k]) == v


def test_dump_roundtrip(tmp_path):
    path = tmp_path / "r.json"
    code, _ = run(["dump", "--h", "0.3,0", "--output", str(path)])
    assert code == 0
    gp = make_global(0.3, 1.0)
    k1 = derive_kinematics(gp, 2.1 + 0.3j, 1.0)
    k2 = derive_kinematics(gp, -1.7 + 2.2j, 1.2 + 0.1j)
    mem = r_fund_table(gp, k1, k2).op.mat
    back = cli.load_matrix(str(path))
    assert np.array_equal(back, mem)
    header = json.loads(path.read_text())["header"]
    for key in ("h", "hprime", "alpha", "x1", "gamma1", "x2", "gamma2", "z1", "z2", "q1", "q2"):
        assert key in header


def test_dump_rational_at_h_zero():
    code, text = run(["dump", "--h", "0", "--x1", "2", "--x2", "3"])
    rep = json.loads(text)
    m = cli.load_matrix(text)
    assert code == 0 and rep["header"]["form"] == "full_rational"
    u1, u2 = 2 + 1 / 2, 3 + 1 / 3
    cs = {k: complex(*v) for k, v in rep["coefficients"].items()}
    # phi1 phi1 -> phi1 phi1 carries A with no constant shift
    assert m[0, 0] == cs["A"]
    assert abs((cs["A"] + cs["B"]) - 2 / (u1 - u2)) < 1e-14


def test_dump_generator():
    code, text = run(["dump", "--what", "generator", "--generator", "Q12", "--level", "2"])
    gp = make_global(0.3, 1.0)
    k1 = derive_kinematics(gp, 2.1 + 0.3j, 1.0)
    from gl22r.fundrep import Generator
    assert np.array_equal(cli.load_matrix(text), represent(GeneratorTerm(Generator("Q", 1, 2), 2), k1).mat)


def test_sweep_csv(tmp_path, monkeypatch):
    monkeypatch.setenv(cli.THREADS_ENV, "3")
    code, text = run(["sweep", "--steps", "4", "--format", "csv"])
    lines = text.strip().splitlines()
    assert code == 0 and lines[0].split(",") == cli.SWEEP_COLUMNS and len(lines) == 5
    monkeypatch.setenv(cli.THREADS_ENV, "1")
    assert run(["sweep", "--steps", "4", "--format", "csv"])[1] == text


def test_bad_thread_env(monkeypatch):
    monkeypatch.setenv(cli.THREADS_ENV, "zero")
    assert run(["graph"])[0] == 2


def test_graph_command():
    code, text = run(["graph"])
    rep = json.loads(text)
    assert code == 0 and rep["matches_arrows"]


def test_deterministic_reports():
    args = ["verify", "--suite", "symmetries", "--suite", "limits", "--samples", "2", "--seed", "11"]
    assert run(args)[1] == run(args)[1]
    other = run(["verify", "--suite", "symmetries", "--samples", "2", "--seed", "12"])[1]
    assert other != run(["verify", "--suite", "symmetries", "--samples", "2", "--seed", "11"])[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "gl22r", "graph"], capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["schema"] == 1
