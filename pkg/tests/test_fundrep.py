import numpy as np
import pytest

from gl22r import fundrep
from gl22r.fundrep import (BASIS, AlgebraError, Generator, GeneratorTerm, bracket, cocycle, derivation_check,
                           homomorphism_residual, jacobi_residual, represent, serre_chevalley_check, term,
                           uv_taylor)
from gl22r.params import UV_matrices, derive_kinematics, preferred_kinematics
from gl22r.suites import cocycle_quadrature, fd_derivative_residual, sample_point
from gl22r.superlinalg import max_abs, supercommutator


def test_basis_size_and_parities():
    assert len(BASIS) == 16
    assert sum(g.parity for g in BASIS) == 8
    assert Generator("R", 2, 1) == Generator("R", 1, 2)


def test_graded_antisymmetry_of_bracket(gp):
    for x in BASIS:
        for y in BASIS:
            s, t = GeneratorTerm(x, 1), GeneratorTerm(y, -2)
            sign = -1 if x.parity * y.parity else 1
            diff = bracket(s, t, gp) + sign * bracket(t, s, gp)
            assert diff.max_abs() < 1e-14, (x, y)


def test_rr_bracket_hand_value(gp):
    # [R11, R22] = eps^{12} R12 + eps^{12} R12 = 2 R12
    out = bracket(term("R", 1, 1), term("R", 2, 2), gp)
    assert out.terms == {(Generator("R", 1, 2), 0): 2}


def test_jacobi_small_levels(gp):
    assert jacobi_residual(1, gp, samples=30) < 1e-12


def test_jacobi_detects_perturbation(gp, monkeypatch):
    original = fundrep._base_bracket

    def broken(x, y, g):
        out = original(x, y, g)
        if x.kind == "B" and y.kind == "Q":
            out = [(c * 1.1 if s == 1 else c, gen, s) for c, gen, s in out]
        if y.kind == "B" and x.kind == "Q":
            out = [(c * 1.1 if s == 1 else c, gen, s) for c, gen, s in out]
        return out

    monkeypatch.setattr(fundrep, "_base_bracket", broken)
    assert jacobi_residual(1, gp) > 1e-3


def test_homomorphism_several_levels(sites):
    for k in sites:
        assert homomorphism_residual(k, levels=range(-1, 2)) < 1e-12


def test_homomorphism_detects_wrong_loop_variable(gp):
    k = derive_kinematics(gp, 2.0 + 0.4j, 1.1)
    wrong = k.__class__(**{**k.__dict__, "z": k.z * 1.01})
    assert homomorphism_residual(wrong) > 1e-4


def test_represent_level_scaling(gp):
    k = derive_kinematics(gp, -2.0 + 1.4j, 0.7)
    t0 = represent(GeneratorTerm(Generator("Q", 1, 2), 0), k)
    t3 = represent(GeneratorTerm(Generator("Q", 1, 2), 3, 2.0), k)
    assert max_abs(t3.mat - 2 * k.z**3 * t0.mat) < 1e-13


def test_central_charge_is_not_represented(gp):
    k = derive_kinematics(gp, 2.0, 1.0)
    with pytest.raises(AlgebraError):
        represent(GeneratorTerm(Generator("C"), 0), k)
    with pytest.raises(AlgebraError):
        bracket(GeneratorTerm(Generator("C"), 0), term("Q", 1, 1), gp)


def test_derivation_preferred_gauge(rng):
    for _ in range(20):
        gp, (k,) = sample_point(rng, 1)
        res = derivation_check(k, gp)
        for key in ("zdT/dz T^-1 - U", "(z/q) dq/dz - V", "z dW/dz - [U,W] + VW",
                    "gauge_residual_constant_gamma"):
            assert res[key] < 1e-10, key


def test_constant_gamma_needs_gauge_term(gp):
    k = derive_kinematics(gp, 2.3 - 0.3j, 1.0)
    assert abs(derivation_check(k, gp)["f_constant_gamma"]) > 1e-6


def test_analytic_derivatives_match_richardson(rng):
    for _ in range(20):
        gp, (k,) = sample_point(rng, 1)
        assert fd_derivative_residual(gp, k) < 1e-6


def test_uv_taylor_matches_closed_form(gp):
    U, V = uv_taylor(gp, 40)
    rad = fundrep.contour_radius(gp, 0.3)
    for z in (rad, -rad * 0.5j, rad * np.exp(1j)):
        Ue, Ve = UV_matrices(gp, z)
        powers = z ** np.arange(41)
        assert max_abs(np.tensordot(powers, U, axes=1) - Ue) < 1e-12
        assert abs(powers @ V - Ve) < 1e-12


@pytest.mark.parametrize("pair", [("Q11", "S22"), ("Q12", "Q21"), ("S12", "S21"), ("A", "B"), ("R12", "R12"),
                                  ("L11", "L22"), ("R11", "Q11")])
def test_cocycle_matches_quadrature(gp, pair):
    def parse(name):
        return GeneratorTerm(Generator(name[0], int(name[1]), int(name[2])) if len(name) == 3
                             else Generator(name))

    s, t = (parse(n) for n in pair)
    f, g = {1: 0.7, -1: 1.0, -3: 0.2}, {2: -0.4, 0: 1.0, -1: 0.3}
    assert abs(cocycle(f, s, g, t, gp) - cocycle_quadrature(f, s, g, t, gp)) < 1e-9


def test_cocycle_graded_antisymmetry(gp):
    f, g = {1: 1.0, -2: 0.5}, {-1: 1.0, 0: -0.3}
    for x in BASIS:
        for y in BASIS:
            s, t = GeneratorTerm(x), GeneratorTerm(y)
            sign = -1 if x.parity * y.parity else 1
            assert abs(cocycle(f, s, g, t, gp) + sign * cocycle(g, t, f, s, gp)) < 1e-12


def test_serre_chevalley(sites):
    for k in sites:
        assert max(serre_chevalley_check(k).values()) < 1e-12


def test_chevalley_cartan_action(gp):
    k = preferred_kinematics(gp, 1.9 + 0.6j)
    g = fundrep.chevalley_generators(k)
    # [H1, E1] = 2 E1 and E2 is nilpotent
    assert max_abs(supercommutator(g["H1"], g["E1"]).mat - 2 * g["E1"].mat) < 1e-13
    assert max_abs(g["E2"].mat @ g["E2"].mat) < 1e-13


def test_level_bound_validation(gp):
    with pytest.raises(AlgebraError):
        jacobi_residual(0, gp)
