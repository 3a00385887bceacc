"""Discrete symmetries: conjugation, inversion, statistics flip, duality.

Each map acts on kinematics (and for duality on the global parameters) and
comes with a verification routine returning named residuals.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .fundrep import BASIS, Generator, represent_base
from .params import (GlobalParams, Kinematics, ParameterError, derive_kinematics, global_from_k,
                     y_parametrisation)
from .rmatrix import CoefficientSet, LOWER_EPS, coefficients, r_fund_table
from .superlinalg import V4, GradedOperator, kron_graded, max_abs

EPS2 = np.array([[0, 1], [-1, 0]], dtype=complex)
_Z2 = np.zeros((2, 2))
OMEGA = np.block([[EPS2, _Z2], [_Z2, EPS2]])
PARITY = np.array([0, 0, 1, 1])

# phi^a <-> psi^a, an odd map on the fundamental
STATE_SWAP = np.zeros((4, 4), dtype=complex)
STATE_SWAP[2, 0] = STATE_SWAP[3, 1] = STATE_SWAP[0, 2] = STATE_SWAP[1, 3] = 1


@dataclass(frozen=True)
class SymmetryMap:
    name: str
    param_map: Callable
    generator_map: str
    site_operator: np.ndarray | None = None


def supertranspose(m: np.ndarray) -> np.ndarray:
    """``(E^ST)_{ij} = (-1)^{(|i|+1)|j|} E_{ji}`` on the (2|2) basis."""
    s = (-1.0) ** (((PARITY[:, None] + 1) * PARITY[None, :]) % 2)
    return s * m.T


def conjugation_operator(m: np.ndarray) -> np.ndarray:
    """``E' = -Omega E^ST Omega^-1`` with Omega = diag(eps, eps)."""
    return -OMEGA @ supertranspose(m) @ np.linalg.inv(OMEGA)


def apply_on_site1(r: np.ndarray, fn: Callable[[np.ndarray], np.ndarray]) -> np.ndarray:
    """Apply a linear map of 4x4 matrices to the first tensor factor of ``r``.

    Uses ``r = sum_ij E_ij (x) M_ij`` with graded tensor products.
    """
    r4 = r.reshape(4, 4, 4, 4)  # [i, k, j, l]
    out = np.zeros((16, 16), dtype=complex)
    for i in range(4):
        for j in range(4):
            pm = (PARITY[:, None] + PARITY[None, :]) % 2
            M = r4[i, :, j, :] * np.where((pm * PARITY[j]) % 2 == 1, -1.0, 1.0)
            if not np.any(M):
                continue
            Eij = np.zeros((4, 4), dtype=complex)
            Eij[i, j] = 1
            par = (PARITY[i] + PARITY[j]) % 2
            img = GradedOperator.on(V4, fn(Eij), par)
            out += kron_graded(img, GradedOperator.on(V4, M)).mat
    return out


def _two_site(u: np.ndarray, parity: int) -> np.ndarray:
    U = GradedOperator.on(V4, u, parity)
    return kron_graded(U, U).mat


# conjugation ---------------------------------------------------------------

def conjugate_site(gp: GlobalParams, kin: Kinematics) -> Kinematics:
    """``x -> 1/x`` with the matching gamma."""
    x, g = kin.x, kin.gamma
    if abs(x) == 0:
        raise ParameterError("conjugation needs x != 0")
    P = gp.hprime * x - 1j * gp.h
    Q = gp.h * x + 1j * gp.hprime
    return derive_kinematics(gp, 1 / x, gp.alpha * P * Q / (g * gp.hprime * (x * x - 1)))


def verify_conjugation(gp: GlobalParams, kin1: Kinematics, kin2: Kinematics) -> dict[str, float]:
    c = coefficients(gp, kin1, kin2)
    k1b, k2b = conjugate_site(gp, kin1), conjugate_site(gp, kin2)
    c1 = coefficients(gp, k1b, kin2)
    c2 = coefficients(gp, kin1, k2b)
    c12 = coefficients(gp, k1b, k2b)
    J = np.array([[0, -1], [1, 0]])
    res = {
        "z' - z": abs(k1b.z - kin1.z),
        "q' + q": abs(k1b.q + kin1.q),
        "T' - T J": max_abs(k1b.T - kin1.T @ J),
        "site1 A + (A-B)/2": abs(c1.A + 0.5 * (c.A - c.B)),
        "site1 D + (D-E)/2": abs(c1.D + 0.5 * (c.D - c.E)),
        "site1 (A-B)/2 + A": abs(0.5 * (c1.A - c1.B) + c.A),
        "site1 (D-E)/2 + D": abs(0.5 * (c1.D - c1.E) + c.D),
        "site1 G - L": abs(c1.G - c.L),
        "site1 L - G": abs(c1.L - c.G),
        "site1 H + F": abs(c1.H + c.F),
        "site1 F - H": abs(c1.F - c.H),
        "site1 K + C": abs(c1.K + c.C),
        "site1 C - K": abs(c1.C - c.K),
        "site1 (A+B+1)/2": abs((c1.A + c1.B) - (c.A + c.B)),
        "site1 (D+E+1)/2": abs((c1.D + c1.E) - (c.D + c.E)),
        "site2 H - C": abs(c2.H - c.C),
        "site2 C + H": abs(c2.C + c.H),
        "site2 K - F": abs(c2.K - c.F),
        "site2 F + K": abs(c2.F + c.K),
        "both C - F": abs(c12.C - c.F),
        "both F - C": abs(c12.F - c.C),
        "both H - K": abs(c12.H - c.K),
        "both K - H": abs(c12.K - c.H),
    }
    # gamma has period 4 under the map (gamma'' = -gamma): odd-sector coefficients flip twice
    kk = conjugate_site(gp, k1b)
    k4 = conjugate_site(gp, conjugate_site(gp, kk))
    odd_sign = np.array([1, 1, -1, 1, 1, -1, 1, -1, -1, 1])
    res["x'' - x"] = abs(kk.x - kin1.x)
    res["gamma'' + gamma"] = abs(kk.gamma + kin1.gamma)
    res["coefficients after double map"] = max_abs(
        coefficients(gp, kk, kin2).as_array() - odd_sign * c.as_array())
    res["coefficients after four-fold map"] = max_abs(coefficients(gp, k4, kin2).as_array() - c.as_array())
    gen = max(max_abs(conjugation_operator(represent_base(G, kin1).mat) - represent_base(G, k1b).mat)
              for G in BASIS)
    res["generator map rho(1/x) = Omega(rho(x))"] = gen
    r = r_fund_table(gp, kin1, kin2).op.mat
    rb = r_fund_table(gp, k1b, kin2).op.mat
    res["operator site1"] = max_abs(rb - apply_on_site1(r, conjugation_operator))
    return res


# inversion ---------------------------------------------------------------

def invert_z(gp: GlobalParams, kin: Kinematics) -> Kinematics:
    x, g = kin.x, kin.gamma
    if abs(kin.z) == 0:
        raise ParameterError("inversion needs z != 0")
    P = gp.hprime * x - 1j * gp.h
    Q = gp.h * x + 1j * gp.hprime
    return derive_kinematics(gp, 1j * Q / P, g / P)


def inversion_matrix(gp: GlobalParams) -> np.ndarray:
    return np.array([[0, 1j * gp.alpha], [1j / gp.alpha, 0]])


def inversion_generator_image(G: Generator, kin: Kinematics) -> np.ndarray:
    """Represented image of ``G`` under the generator map accompanying z -> 1/z."""
    def lower(i, j):
        return LOWER_EPS * EPS2[i - 1, j - 1].real

    def rep(kind, i=0, j=0):
        return represent_base(Generator(kind, i, j), kin).mat

    if G.kind in ("R", "L"):
        return sum(lower(G.i, c) * lower(G.j, d) * rep(G.kind, c, d) for c in (1, 2) for d in (1, 2))
    if G.kind in ("Q", "S"):
        R = inversion_matrix(kin.gp)
        row = 0 if G.kind == "Q" else 1
        return sum(lower(G.i, c) * lower(G.j, d) * (R[row, 0] * rep("Q", c, d) + R[row, 1] * rep("S", c, d))
                   for c in (1, 2) for d in (1, 2))
    if G.kind == "A":
        return kin.z * rep("A")
    return rep("B") / kin.z


def verify_inversion(gp: GlobalParams, kin1: Kinematics, kin2: Kinematics) -> dict[str, float]:
    k1, k2 = invert_z(gp, kin1), invert_z(gp, kin2)
    c, ci = coefficients(gp, kin1, kin2), coefficients(gp, k1, k2)
    res = {
        "z' z - 1": abs(k1.z * kin1.z - 1),
        "q' - z q": abs(k1.q - kin1.z * kin1.q),
        "T' - R T": max_abs(k1.T - inversion_matrix(gp) @ kin1.T),
        "coefficients flip sign": max_abs(ci.as_array() + c.as_array()),
        "z'' - z": abs(invert_z(gp, k1).z - kin1.z),
    }
    Oinv = np.linalg.inv(OMEGA)
    res["generator map intertwined by Omega"] = max(
        max_abs(represent_base(G, k1).mat - OMEGA @ inversion_generator_image(G, kin1) @ Oinv) for G in BASIS)
    U = _two_site(OMEGA, 0)
    r = r_fund_table(gp, kin1, kin2).op.mat
    ri = r_fund_table(gp, k1, k2).op.mat
    res["operator r' + Omega r Omega^-1"] = max_abs(ri + U @ r @ np.linalg.inv(U))
    return res


# statistics flip -------------------------------------------------------------

def statistics_flip(gp: GlobalParams, kin: Kinematics) -> Kinematics:
    x, g = kin.x, kin.gamma
    P = gp.hprime * x - 1j * gp.h
    Q = gp.h * x + 1j * gp.hprime
    return derive_kinematics(gp, x, gp.alpha * P * Q * x / (gp.hprime * g * (x * x - 1)))


def flip_matrix(gp: GlobalParams, z: complex) -> np.ndarray:
    return (1j / gp.hprime) * np.array([[gp.h, gp.alpha / z], [-z / gp.alpha, -gp.h]])


def verify_statistics_flip(gp: GlobalParams, kin1: Kinematics, kin2: Kinematics) -> dict[str, float]:
    """Residuals of the flip.

    The C/F relations hold with a relative sign: C' = -F, F' = -C (the
    coefficient functions do not carry the statistics sign of the pair states).
    """
    k1, k2 = statistics_flip(gp, kin1), statistics_flip(gp, kin2)
    c, f = coefficients(gp, kin1, kin2), coefficients(gp, k1, k2)
    X = np.array([[0, 1], [1, 0]])
    res = {
        "z' - z": abs(k1.z - kin1.z),
        "q' - q": abs(k1.q - kin1.q),
        "T' - R T X": max_abs(k1.T - flip_matrix(gp, kin1.z) @ kin1.T @ X),
        "A' - D": abs(f.A - c.D), "D' - A": abs(f.D - c.A),
        "B' - E": abs(f.B - c.E), "E' - B": abs(f.E - c.B),
        "G' + L": abs(f.G + c.L), "L' + G": abs(f.L + c.G),
        "C' + F": abs(f.C + c.F), "F' + C": abs(f.F + c.C),
        "H' - K": abs(f.H - c.K), "K' - H": abs(f.K - c.H),
    }
    kk1, kk2 = statistics_flip(gp, k1), statistics_flip(gp, k2)
    res["gamma'' - gamma"] = abs(kk1.gamma - kin1.gamma)
    res["coefficients after double flip"] = max_abs(coefficients(gp, kk1, kk2).as_array() - c.as_array())
    S = _two_site(STATE_SWAP, 1)
    r = r_fund_table(gp, kin1, kin2).op.mat
    rf = r_fund_table(gp, k1, k2).op.mat
    res["operator r' + Pi r Pi^-1"] = max_abs(rf + S @ r @ np.linalg.inv(S))
    return res


def statistics_flip_literal(gp: GlobalParams, kin1: Kinematics, kin2: Kinematics) -> dict[str, float]:
    """C' = F, F' = C read without the statistics sign (reported, not asserted)."""
    c = coefficients(gp, kin1, kin2)
    f = coefficients(gp, statistics_flip(gp, kin1), statistics_flip(gp, kin2))
    return {"C' - F": abs(f.C - c.F), "F' - C": abs(f.F - c.C)}


# duality -------------------------------------------------------------------

def duality(gp: GlobalParams, kin: Kinematics | None = None):
    """``k -> i k``; returns ``gp'`` or ``(gp', kin')``."""
    k = gp.k
    km, kp = k - 1 / k, k + 1 / k
    if abs(km) < 1e-12:
        raise ParameterError("duality needs k - 1/k != 0 (h' = 0)")
    gp2 = global_from_k(1j * k, -1j * kp / km * gp.alpha)
    if kin is None:
        return gp2
    return gp2, derive_kinematics(gp2, kin.x, kin.gamma)


def verify_duality(gp: GlobalParams, kin1: Kinematics, kin2: Kinematics) -> dict[str, float]:
    c = coefficients(gp, kin1, kin2)
    gp2, k1 = duality(gp, kin1)
    _, k2 = duality(gp, kin2)
    k = gp.k
    R = np.array([[1, 0], [kin1.z / (gp.alpha * gp.h), 1]])
    res = {
        "z' + z": abs(k1.z + kin1.z),
        "q' - i(k-1/k)/(k+1/k) q": abs(k1.q - 1j * (k - 1 / k) / (k + 1 / k) * kin1.q),
        "T' - R T": max_abs(k1.T - R @ kin1.T),
        "coefficients invariant": max_abs(coefficients(gp2, k1, k2).as_array() - c.as_array()),
    }
    g, a, b = gp, kin1, kin2
    worst = 0.0
    for _ in range(4):
        g2, a = duality(g, a)
        _, b = duality(g, b)
        g = g2
        worst = max(worst, max_abs(coefficients(g, a, b).as_array() - c.as_array()))
    res["orbit coefficients invariant"] = worst
    res["k'''' - k"] = abs(g.k - gp.k)
    res["alpha'' + alpha"] = abs(duality(duality(gp)).alpha + gp.alpha)
    return res


def verify_selfdual(y1: complex, y2: complex, eta1: complex, eta2: complex, kappa: complex) -> dict[str, float]:
    """At k = sqrt(i): y -> 1/y, eta -> -i (y^2+i)/(y^2-i) eta preserves the coefficients."""
    k = np.exp(1j * np.pi / 4)

    def eta_map(y, eta):
        return -1j * (y * y + 1j) / (y * y - 1j) * eta

    p1, p2 = y_parametrisation(y1, k, eta1, kappa), y_parametrisation(y2, k, eta2, kappa)
    m1 = y_parametrisation(1 / y1, k, eta_map(y1, eta1), kappa)
    m2 = y_parametrisation(1 / y2, k, eta_map(y2, eta2), kappa)
    gp = p1.gp
    kin = lambda p: derive_kinematics(gp, p.x, p.gamma)
    c = coefficients(gp, kin(p1), kin(p2))
    cm = coefficients(gp, kin(m1), kin(m2))
    return {
        "z' + z": abs(m1.z + p1.z),
        "x' + x": abs(m1.x + p1.x),
        "coefficients invariant": max_abs(cm.as_array() - c.as_array()),
    }


SYMMETRIES = {
    "conjugation_site1": SymmetryMap("conjugation_site1", conjugate_site,
                                     "E -> -Omega E^ST Omega^-1 on site 1", OMEGA),
    "conjugation_site2": SymmetryMap("conjugation_site2", conjugate_site,
                                     "E -> -Omega E^ST Omega^-1 on site 2", OMEGA),
    "inversion": SymmetryMap("inversion", invert_z,
                             "(Q,S) -> eps eps R (Q,S), R/L -> eps eps R/L, A -> zA, B -> B/z", OMEGA),
    "statistics_flip": SymmetryMap("statistics_flip", statistics_flip,
                                   "R <-> L, (Q,S) -> R (Q,S), B -> -B", STATE_SWAP),
    "duality": SymmetryMap("duality", duality, "(Q,S) -> R (Q,S), A, B rescaled", None),
}
