"""Acceptance criteria, one test each; every test prints a single PASS/FAIL line.

Run under pytest (lines are repeated in the terminal summary) or directly with
``python3 tests/test_acceptance.py``.
"""

import json
import subprocess
import sys

import numpy as np

from gl22r import limits
from gl22r.suites import ORDER_MIN, run_suite, sample_point
from gl22r.symmetries import conjugate_site, duality, invert_z

try:
    from tests_acceptance_lines import LINES
except ImportError:  # direct execution
    LINES = []

SEED = 2024


def record(number: int, title: str, passed: bool, detail: str) -> None:
    line = f"criterion {number:2d} {'PASS' if passed else 'FAIL'}  {title}: {detail}"
    LINES.append(line)
    print(line)


def _suite_line(number, title, res, limit_s=None):
    bad = [c for c in res.checks if not c.passed]
    ok = not bad and (limit_s is None or res.seconds < limit_s)
    detail = f"{len(res.checks)} checks, max residual {res.max_residual:.2e}, {res.seconds:.1f}s"
    if bad:
        detail += f", first failure {bad[0].name} ({bad[0].residual} vs {bad[0].threshold})"
    record(number, title, ok, detail)
    return ok


def test_01_cybe():
    res = run_suite("cybe", SEED, n=100)
    assert _suite_line(1, "CYBE on 100 triples < 1e-9 within 30 s", res, limit_s=30)


def test_02_dual_construction():
    res = run_suite("dual", SEED, n=100, tol=1e-10)
    assert _suite_line(2, "state table equals tensor form within 1e-10", res)


def test_03_identities_and_rank():
    res = run_suite("identities", SEED, n=200, tol=1e-10)
    assert _suite_line(3, f"linear/quadratic identities within 1e-10, rank {res.info['ranks']}", res)


def test_04_antisymmetry():
    res = run_suite("antisymmetry", SEED, n=100, tol=1e-11)
    assert _suite_line(4, "r12 + P r21 P within 1e-11", res)


def test_05_jacobi():
    res = run_suite("jacobi", SEED, n=1, tol=1e-11, level_bound=3, samples=300)
    assert _suite_line(5, "Jacobi identity, levels [-3,3], within 1e-11 in 60 s", res, limit_s=60)


def test_06_homomorphism():
    res = run_suite("homomorphism", SEED, n=50, tol=1e-9)
    assert _suite_line(6, "evaluation homomorphism at 50 kinematics within 1e-9", res)


def test_07_constraints():
    res = run_suite("constraints", SEED, n=200, tol=1e-10)
    assert _suite_line(7, "ad-bc=1, det T=1, tr W=0, TM=qWT within 1e-10", res)


def test_08_affine():
    res = run_suite("affine", SEED, n=50, tol=1e-10)
    assert _suite_line(8, "derivation identities within 1e-10, finite differences within 1e-6", res)


def test_09_quantum_order():
    res = run_suite("quantum", SEED, n=5)
    slopes = [c.residual for c in res.checks if c.kind == "band"]
    ok = _suite_line(9, f"constraint exponent {min(slopes):.3f}..{max(slopes):.3f} in 2 +- 0.1, q2C forms within 1e-8",
                     res)
    assert ok


def test_10_symmetries():
    res = run_suite("symmetries", SEED, n=20, tol=1e-10)
    # group relations, compared at machine precision
    rng = np.random.default_rng(SEED)
    gp, (k,) = sample_point(rng, 1)
    ulp = np.finfo(float).eps
    x2 = conjugate_site(gp, conjugate_site(gp, k)).x
    z2 = invert_z(gp, invert_z(gp, k)).z
    k4 = duality(duality(duality(duality(gp)))).k
    groups = {"conjugation^2 on x": abs(x2 - k.x) / abs(k.x), "inversion^2 on z": abs(z2 - k.z) / abs(k.z),
              "duality^4 on k": abs(k4 - gp.k) / abs(gp.k)}
    group_ok = all(v <= 4 * ulp for v in groups.values())
    bad = [c for c in res.checks if not c.passed]
    record(10, "symmetry relations within 1e-10, group relations to 4 ulp", not bad and group_ok,
           f"{len(res.checks)} checks, max residual {res.max_residual:.2e}, group {max(groups.values()):.1e}")
    assert not bad and group_ok


def test_11_limits():
    res = run_suite("limits", SEED, n=10, tol=1e-9, eps_list=(1e-2, 1e-3, 1e-4))
    orders = {k.split()[0]: v["order"] for k, v in res.tables.items()}
    worst = min(orders.values())
    bad = [c for c in res.checks if not c.passed]
    record(11, "8 limits converge (order >= 0.9), limit CYBE < 1e-9, graph matches arrows", not bad,
           f"min order {worst:.3f}, max residual {res.max_residual:.2e}, {len(res.checks)} checks")
    assert not bad and worst >= ORDER_MIN and len(orders) == len(limits.FAMILIES)


def test_12_serre():
    res = run_suite("serre", SEED, n=20, tol=1e-10)
    assert _suite_line(12, "Chevalley relations and Cartan matrix within 1e-10", res)


def test_13_determinism(tmp_path):
    args = [sys.executable, "-m", "gl22r", "verify", "--suite", "cybe", "--suite", "identities",
            "--suite", "limits", "--samples", "5", "--seed", "7"]
    outs = [subprocess.run(args, capture_output=True) for _ in range(2)]
    same = outs[0].stdout == outs[1].stdout and outs[0].returncode == outs[1].returncode == 0
    rep = json.loads(outs[0].stdout)
    record(13, "two CLI runs give byte-identical reports", same and rep["schema"] == 1,
           f"{len(outs[0].stdout)} bytes, exit codes {[o.returncode for o in outs]}")
    assert same


if __name__ == "__main__":
    import tempfile
    from pathlib import Path

    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn(Path(tempfile.mkdtemp())) if "tmp_path" in fn.__code__.co_varnames else fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
