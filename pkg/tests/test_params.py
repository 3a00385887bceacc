import cmath

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gl22r.params import (ParameterError, PoleError, crossratio, derive_kinematics, global_from_k,
                          make_global, preferred_kinematics, quantum_charges, selfdual_points,
                          solve_xplus, xpm_classical, xpm_constraint, y_parametrisation, z_of_y, zq_of_x)
from gl22r.suites import sample_point


def test_global_relations(gp):
    assert max(gp.check().values()) < 1e-14
    k = gp.k
    assert abs(k * k - 2 * gp.h * k + 1) < 1e-14


def test_global_from_k_roundtrip():
    gp = make_global(0.4 - 0.2j, 2.0)
    back = global_from_k(gp.k, gp.alpha)
    assert abs(back.h - gp.h) < 1e-14 and abs(back.hprime - gp.hprime) < 1e-14


def test_degenerate_parameters():
    with pytest.raises(ParameterError):
        make_global(1.0)
    with pytest.raises(ParameterError):
        make_global(0.3, 0.0)
    with pytest.raises(ParameterError):
        make_global(0.3, 1.0, branch=2)
    with pytest.raises(ParameterError):
        global_from_k(0)


def test_z_depends_on_x_plus_inverse(gp):
    # z = i / (h h' (x + 1/x) + i (h'^2 - h^2)), so x and 1/x share z while q flips sign
    for x in (2.0 + 0.5j, -1.3 + 2.2j):
        z, q = zq_of_x(gp, x)
        expected = 1j / (gp.h * gp.hprime * (x + 1 / x) + 1j * (gp.hprime**2 - gp.h**2))
        assert abs(z - expected) < 1e-14
        z2, q2 = zq_of_x(gp, 1 / x)
        assert abs(z2 - z) < 1e-13 and abs(q2 + q) < 1e-13


def test_constraints_random(rng):
    for _ in range(50):
        gp, (k,) = sample_point(rng, 1)
        assert max(k.constraints().values()) < 1e-12


def test_special_points_raise(gp):
    for x in (1.0, -1.0, 1j * gp.h / gp.hprime, -1j * gp.hprime / gp.h):
        with pytest.raises(PoleError):
            derive_kinematics(gp, x, 1.0)
    with pytest.raises(ParameterError):
        derive_kinematics(gp, 2.0, 0.0)


def test_selfdual_points_are_images_of_unit_x(gp):
    zp, zm, xp, xm = selfdual_points(gp)
    za, _ = zq_of_x(gp, 1 + 1e-9)
    zb, _ = zq_of_x(gp, -1 + 1e-9)
    assert min(abs(za - zp), abs(za - zm)) < 1e-7
    assert min(abs(zb - zp), abs(zb - zm)) < 1e-7
    assert abs(zp * zm - 1) < 1e-13
    assert abs(crossratio(gp) - zp**2) < 1e-13


def test_zero_and_infinity_points(gp):
    # x at the zeros of h'x - ih and hx + ih' sends z to infinity
    near = 1j * gp.h / gp.hprime * (1 + 1e-9)
    z, _ = zq_of_x(gp, near)
    assert abs(z) > 1e6


def test_preferred_gauge_is_gamma_formula(gp):
    x = 2.2 - 0.7j
    k = preferred_kinematics(gp, x, scale=1.5)
    expected = 1.5 * (gp.hprime * x - 1j * gp.h) / (gp.hprime * cmath.sqrt(x * x - 1))
    assert abs(k.gamma - expected) < 1e-14
    assert k.gauge == "preferred"


@settings(max_examples=60, deadline=None)
@given(st.floats(0.3, 2.5), st.floats(0.05, 1.5), st.floats(0.2, 0.6), st.floats(0.5, 2.0))
def test_y_parametrisation_matches_direct(r, phase, kphase, kappa):
    y = r * np.exp(1j * phase)
    k = np.exp(1j * kphase)
    eta = 0.8 + 0.3j
    yp = y_parametrisation(y, k, eta, kappa)
    kin = derive_kinematics(yp.gp, yp.x, yp.gamma)
    scale = max(1.0, abs(kin.q), abs(kin.z), abs(kin.b), abs(kin.c), abs(kin.d))
    assert abs(kin.z - z_of_y(y, k)) < 1e-10 * scale
    assert abs(kin.q - yp.q) < 1e-10 * scale
    for name in "abcd":
        assert abs(getattr(kin, name) - getattr(yp, name)) < 1e-10 * scale


def test_y_special_points_raise():
    k = np.exp(0.4j)
    for y in (1, 1j, k, -1j * k, 0):
        with pytest.raises(PoleError):
            y_parametrisation(y, k, 1.0, 1.0)


def test_quantum_constraint_scales_as_inverse_square(gp):
    gs = np.array([1e2, 1e3, 1e4])
    res = [abs(xpm_constraint(*xpm_classical(gp, 2.3 + 0.4j, g), g)) for g in gs]
    slope = np.polyfit(np.log(gs), np.log(res), 1)[0]
    assert abs(slope + 2) < 0.1
    # leading order only: one power worse
    res0 = [abs(xpm_constraint(*xpm_classical(gp, 2.3 + 0.4j, g, order=0), g)) for g in gs]
    assert abs(np.polyfit(np.log(gs), np.log(res0), 1)[0] + 1) < 0.1


def test_q2C_forms_agree_on_exact_solution(gp):
    for g in (1e2, 1e3):
        xp, xm, qd = xpm_classical(gp, -1.9 + 1.1j, g)
        exact = solve_xplus(xm, qd, g, xp)
        data = quantum_charges(exact, xm, qd, g, gp.alpha)
        assert data.constraint_residual < 1e-9
        assert data.q2C_discrepancy < 1e-8


def test_coupling_validation(gp):
    with pytest.raises(ParameterError):
        xpm_classical(gp, 2.0, -1.0)
    with pytest.raises(ParameterError):
        xpm_classical(gp, 2.0, 10.0, order=3)
