import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gl22r import rmatrix
from gl22r.params import PoleError, derive_kinematics, make_global
from gl22r.rmatrix import (P12, coefficient_rank, coefficients, cybe_operator, cybe_residual, quadratic_warp,
                           r_fund_table, r_fund_universal, shift_coefficients, shift_identity, shift_report,
                           st_split, table_operator)
from gl22r.suites import sample_point
from gl22r.superlinalg import max_abs


def test_table_equals_universal(rng):
    for _ in range(30):
        gp, (k1, k2) = sample_point(rng, 2)
        assert max_abs(r_fund_table(gp, k1, k2).op.mat - r_fund_universal(gp, k1, k2).op.mat) < 1e-12


def test_opposite_lower_epsilon_breaks_agreement(gp, sites):
    k1, k2, _ = sites
    cs = coefficients(gp, k1, k2)
    flipped = table_operator(cs, lower_eps=+1)
    assert max_abs(flipped - r_fund_universal(gp, k1, k2).op.mat) > 1e-3


def test_cybe(rng):
    for _ in range(20):
        gp, (k1, k2, k3) = sample_point(rng, 3)
        assert cybe_residual(gp, k1, k2, k3) < 1e-11
        assert cybe_residual(gp, k1, k2, k3, builder=r_fund_universal) < 1e-11


def test_cybe_negative_controls(gp, sites, monkeypatch):
    k1, k2, k3 = sites
    assert cybe_residual(gp, k1, k2, k3, builder=r_fund_universal, warp=quadratic_warp()) > 1e-3
    # unit weight on the epsilon-contracted pair states fails
    monkeypatch.setattr(rmatrix, "PAIR_WEIGHT", 1)
    assert cybe_residual(gp, k1, k2, k3) > 1e-3


def test_cybe_invariant_under_identity_shift(gp, sites):
    k1, k2, k3 = sites
    lam = 0.37 - 0.2j
    rs = [shift_identity(r_fund_table(gp, a, b), lam).op.mat for a, b in ((k1, k2), (k1, k3), (k2, k3))]
    assert max_abs(cybe_operator(*rs)) < 1e-11


def test_shift_operator_matches_shifted_coefficients(gp, sites):
    k1, k2, _ = sites
    rm = shift_identity(r_fund_table(gp, k1, k2), 0.25)
    assert max_abs(rm.op.mat - table_operator(rm.coeffs)) < 1e-13
    # identity shifts keep both identity families but break the A = D gauge
    report = shift_report(coefficients(gp, k1, k2), 0.4)
    assert report["linear"] and report["quadratic"] and not report["gauge A=D"]


def test_graded_antisymmetry(rng):
    for _ in range(30):
        gp, (k1, k2) = sample_point(rng, 2)
        r12, r21 = r_fund_table(gp, k1, k2), r_fund_table(gp, k2, k1)
        assert r12.antisymmetry_residual(r21) < 1e-12


def test_st_split_recombines(gp, sites):
    k1, k2, _ = sites
    s12, s21, t = st_split(gp, k1, k2)
    r = r_fund_table(gp, k1, k2).op.mat
    assert max_abs(r - (s12.mat + k2.z / (k1.z - k2.z) * t.mat)) < 1e-12
    # s21 is the swap of s12
    assert max_abs(P12.mat @ s12.mat @ P12.mat - st_split(gp, k2, k1)[1].mat) < 1e-12


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**31 - 1))
def test_coefficient_identities_property(seed):
    rng = np.random.default_rng(seed)
    gp, (k1, k2) = sample_point(rng, 2)
    cs = coefficients(gp, k1, k2)
    scale = max(1.0, float(np.max(np.abs(cs.as_array()))) ** 2)
    assert max(cs.linear_identities().values()) < 1e-11 * scale
    assert max(cs.quadratic_identities().values()) < 1e-11 * scale


def test_gauge_relations(gp, sites):
    k1, k2, _ = sites
    cs = coefficients(gp, k1, k2)
    assert abs(cs.A - cs.D) < 1e-13 and abs(cs.B - cs.E) < 1e-13 and abs(cs.G + cs.L) < 1e-13


def test_rank_is_six(rng):
    gp, (k1, k2) = sample_point(rng, 2)
    point = np.array([k1.x, k2.x, k1.gamma, k2.gamma, gp.h, 0.2, gp.alpha])
    rank, sv = coefficient_rank(point)
    # seven parameters, one redundant direction (alpha against the gammas)
    assert rank == 6
    assert sv[5] / sv[0] > 1e-6 and sv[6] / sv[0] < 1e-9


def test_collision_raises(gp):
    k = derive_kinematics(gp, 2.0 + 0.1j, 1.0)
    with pytest.raises(PoleError):
        coefficients(gp, k, derive_kinematics(gp, 2.0 + 0.1j, 1.3))
    # x and 1/x share z
    with pytest.raises(PoleError):
        coefficients(gp, k, derive_kinematics(gp, 1 / (2.0 + 0.1j), 1.0))


def test_shift_pattern():
    cs = rmatrix.CoefficientSet(*range(1, 11))
    sh = shift_coefficients(cs, 1.0)
    assert sh.as_array().real.tolist() == [2, 1, 3, 3, 6, 6, 8, 8, 9, 11]
