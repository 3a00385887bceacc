"""Fundamental classical r-matrix: coefficients, two constructions, CYBE."""

from __future__ import annotations

from dataclasses import dataclass, fields, replace
from typing import Callable

import numpy as np

from .fundrep import Generator, eps, represent_base
from .params import POLE_THRESHOLD, GlobalParams, Kinematics, ParameterError, PoleError
from .superlinalg import (V4, GradedOperator, embed_legs, graded_swap, kron_graded, max_abs)

V2 = V4.tensor(V4)
P12 = graded_swap(V4, V4)

# lower epsilon: eps_{12} = LOWER_EPS; fixed by agreement of the two constructions
LOWER_EPS = -1
# weight of the eps-contracted pair states in the state action; 1 fails the CYBE
PAIR_WEIGHT = 2

PHI1, PHI2, PSI1, PSI2 = 0, 1, 2, 3


@dataclass(frozen=True)
class CoefficientSet:
    A: complex
    B: complex
    C: complex
    D: complex
    E: complex
    F: complex
    G: complex
    H: complex
    K: complex
    L: complex

    def as_dict(self) -> dict[str, complex]:
        return {f.name: getattr(self, f.name) for f in fields(self)}

    def as_array(self) -> np.ndarray:
        return np.array([getattr(self, f.name) for f in fields(self)], dtype=complex)

    def map(self, fn: Callable[[complex], complex]) -> "CoefficientSet":
        return CoefficientSet(**{k: fn(v) for k, v in self.as_dict().items()})

    def linear_identities(self) -> dict[str, float]:
        """``A - D = -B + E = G + L``."""
        A, B, D, E, G, L = self.A, self.B, self.D, self.E, self.G, self.L
        return {"(A-D)-(-B+E)": abs((A - D) - (-B + E)), "(A-D)-(G+L)": abs((A - D) - (G + L))}

    def quadratic_identities(self, constant: float = 1.0) -> dict[str, float]:
        """``1/4 (A+B-c)(A+B+c) = 1/4 (3A-B)(3D-E) + 4GL = CF + HK`` (c = 1, or 0 for rational forms)."""
        A, B, C, D, E, F, G, H, K, L = self.as_array()
        lhs = 0.25 * (A + B - constant) * (A + B + constant)
        mid = 0.25 * (3 * A - B) * (3 * D - E) + 4 * G * L
        rhs = C * F + H * K
        return {"lhs-mid": abs(lhs - mid), "lhs-rhs": abs(lhs - rhs)}


def _collision(kin1: Kinematics, kin2: Kinematics):
    if abs(kin1.z - kin2.z) < POLE_THRESHOLD * max(1.0, abs(kin1.z)):
        raise PoleError("spectral parameters collide: z1 = z2", "z1 = z2")


def coefficients(gp: GlobalParams, kin1: Kinematics, kin2: Kinematics) -> CoefficientSet:
    """The ten coefficient functions for the site pair (1, 2)."""
    _collision(kin1, kin2)
    z1, z2 = kin1.z, kin2.z
    q1, q2 = kin1.q, kin2.q
    a1, b1, c1, d1 = kin1.a, kin1.b, kin1.c, kin1.d
    a2, b2, c2, d2 = kin2.a, kin2.b, kin2.c, kin2.d
    dz = z1 - z2
    A = (0.25 * z1 + 0.25 * z2 + 0.25 * z1 * q1 / q2 + 0.25 * z2 * q2 / q1) / dz
    B = 2 * z1 / dz - 1 - A
    G = (-0.25 * z1 * q1 / q2 + 0.25 * z2 * q2 / q1) / dz
    return CoefficientSet(
        A=A, B=B,
        C=(z1 * a1 * c2 - z2 * a2 * c1) / dz,
        D=A, E=B,
        F=(z1 * b1 * d2 - z2 * b2 * d1) / dz,
        G=G,
        H=(z1 * a1 * d2 - z2 * b2 * c1) / dz,
        K=(-z1 * b1 * c2 + z2 * a2 * d1) / dz,
        L=-G,
    )


def shift_coefficients(cs: CoefficientSet, lam: complex) -> CoefficientSet:
    """Add ``lam`` times the coefficient pattern of the identity operator."""
    pattern = dict(A=1, B=-1, C=0, D=-1, E=1, F=0, G=1, H=0, K=0, L=1)
    return CoefficientSet(**{k: v + lam * pattern[k] for k, v in cs.as_dict().items()})


def table_operator(cs: CoefficientSet, constant: float = 1.0, lower_eps: int | None = None) -> np.ndarray:
    """16x16 matrix of the state action.

    ``constant`` multiplies the +-1/2 terms in the (A+B+-1) and (D+E+-1)
    combinations; rational limit forms use ``constant = 0``.
    """
    A, B, C, D, E, F, G, H, K, L = cs.as_array()
    c = constant
    if lower_eps is None:
        lower_eps = LOWER_EPS
    m = np.zeros((16, 16), dtype=complex)

    def idx(i, j):
        return 4 * i + j

    def put(src, coeff, dst):
        m[idx(*dst), idx(*src)] += coeff

    # eps_{ab} |x^a x^b> -> PAIR_WEIGHT * lower_eps (|x^1 x^2> - |x^2 x^1>)
    def put_eps(src, coeff, first, second):
        w = PAIR_WEIGHT * lower_eps
        put(src, coeff * w, (first, second))
        put(src, -coeff * w, (second, first))

    put((PHI1, PHI1), A, (PHI1, PHI1))
    put((PHI2, PHI2), A, (PHI2, PHI2))
    put((PHI1, PHI2), 0.5 * (A + B + c), (PHI2, PHI1))
    put((PHI1, PHI2), 0.5 * (A - B), (PHI1, PHI2))
    put_eps((PHI1, PHI2), -0.5 * C, PSI1, PSI2)
    put((PHI2, PHI1), 0.5 * (A - B), (PHI2, PHI1))
    put((PHI2, PHI1), 0.5 * (A + B - c), (PHI1, PHI2))
    put_eps((PHI2, PHI1), 0.5 * C, PSI1, PSI2)

    put((PSI1, PSI1), -D, (PSI1, PSI1))
    put((PSI2, PSI2), -D, (PSI2, PSI2))
    put((PSI1, PSI2), -0.5 * (D + E + c), (PSI2, PSI1))
    put((PSI1, PSI2), -0.5 * (D - E), (PSI1, PSI2))
    put_eps((PSI1, PSI2), 0.5 * F, PHI1, PHI2)
    put((PSI2, PSI1), -0.5 * (D - E), (PSI2, PSI1))
    put((PSI2, PSI1), -0.5 * (D + E - c), (PSI1, PSI2))
    put_eps((PSI2, PSI1), -0.5 * F, PHI1, PHI2)

    for phi in (PHI1, PHI2):
        for psi in (PSI1, PSI2):
            put((phi, psi), G, (phi, psi))
            put((phi, psi), H, (psi, phi))
            put((psi, phi), K, (phi, psi))
            put((psi, phi), L, (psi, phi))
    return m


@dataclass(frozen=True)
class RMatrix:
    op: GradedOperator
    kin1: Kinematics
    kin2: Kinematics
    coeffs: CoefficientSet

    def antisymmetry_residual(self, swapped: "RMatrix") -> float:
        """``r12 + P r21 P`` with ``swapped`` built for the exchanged sites."""
        return max_abs(self.op.mat + P12.mat @ swapped.op.mat @ P12.mat)


def r_fund_table(gp: GlobalParams, kin1: Kinematics, kin2: Kinematics) -> RMatrix:
    cs = coefficients(gp, kin1, kin2)
    return RMatrix(GradedOperator.on(V2, table_operator(cs), 0), kin1, kin2, cs)


def _rep(kind: str, i: int, j: int, kin: Kinematics) -> GradedOperator:
    return represent_base(Generator(kind, i, j), kin)


def _lower(i: int, j: int) -> int:
    return LOWER_EPS * eps(i, j)


def st_split(gp: GlobalParams, kin1: Kinematics, kin2: Kinematics
             ) -> tuple[GradedOperator, GradedOperator, GradedOperator]:
    """``(s12, s21, t12)`` with ``r = z1/(z1-z2) s12 + z2/(z1-z2) s21`` and ``t12 = s12 + s21``."""
    def k(kind1, i1, j1, kind2, i2, j2):
        return kron_graded(_rep(kind1, i1, j1, kin1), _rep(kind2, i2, j2, kin2)).mat

    s12 = k("R", 1, 2, "R", 1, 2) - k("R", 2, 2, "R", 1, 1) - k("L", 1, 2, "L", 1, 2) + k("L", 2, 2, "L", 1, 1)
    s21 = k("R", 1, 2, "R", 1, 2) - k("R", 1, 1, "R", 2, 2) - k("L", 1, 2, "L", 1, 2) + k("L", 1, 1, "L", 2, 2)
    for al in (1, 2):
        for b in (1, 2):
            for ga in (1, 2):
                for d in (1, 2):
                    w = _lower(al, ga) * _lower(b, d)
                    if w == 0:
                        continue
                    s12 = s12 - w * k("Q", al, b, "S", ga, d)
                    s21 = s21 + w * k("S", al, b, "Q", ga, d)
    s12 = s12 - k("A", 0, 0, "B", 0, 0)
    s21 = s21 - k("B", 0, 0, "A", 0, 0)
    ops = [GradedOperator.on(V2, m, 0) for m in (s12, s21, s12 + s21)]
    return ops[0], ops[1], ops[2]


def r_fund_universal(gp: GlobalParams, kin1: Kinematics, kin2: Kinematics,
                     warp: Callable[[complex], complex] | None = None) -> RMatrix:
    """Tensor-product form in represented generators.

    ``warp`` replaces the loop variable in the two prefactors (negative
    controls only).
    """
    _collision(kin1, kin2)
    s12, s21, _ = st_split(gp, kin1, kin2)
    z1, z2 = kin1.z, kin2.z
    if warp is not None:
        z1, z2 = warp(z1), warp(z2)
    dz = z1 - z2
    op = GradedOperator.on(V2, (z1 * s12.mat + z2 * s21.mat) / dz, 0)
    return RMatrix(op, kin1, kin2, coefficients(gp, kin1, kin2))


def shift_identity(rm: RMatrix, lam: complex) -> RMatrix:
    """Add ``lam * Id`` and the matching coefficient shift."""
    cs = shift_coefficients(rm.coeffs, lam)
    return replace(rm, op=GradedOperator.on(V2, rm.op.mat + lam * np.eye(16), 0), coeffs=cs)


def shift_report(cs: CoefficientSet, lam: complex, tol: float = 1e-10) -> dict[str, bool]:
    """Which invariants survive a shift by ``lam``."""
    sh = shift_coefficients(cs, lam)
    return {
        "linear": max(sh.linear_identities().values()) < tol,
        "quadratic": max(sh.quadratic_identities().values()) < tol,
        "gauge A=D": abs(sh.A - sh.D) < tol,
    }


def cybe_operator(r12: np.ndarray, r13: np.ndarray, r23: np.ndarray) -> np.ndarray:
    """``[r12, r13] + [r12, r23] + [r13, r23]`` for even operators on three legs."""
    R12 = embed_legs(GradedOperator.on(V2, r12, 0), (1, 2), 3).mat
    R13 = embed_legs(GradedOperator.on(V2, r13, 0), (1, 3), 3).mat
    R23 = embed_legs(GradedOperator.on(V2, r23, 0), (2, 3), 3).mat

    def c(X, Y):
        return X @ Y - Y @ X

    return c(R12, R13) + c(R12, R23) + c(R13, R23)


def cybe_residual(gp: GlobalParams, kin1: Kinematics, kin2: Kinematics, kin3: Kinematics,
                  builder: Callable = r_fund_table, **kw) -> float:
    r12 = builder(gp, kin1, kin2, **kw).op.mat
    r13 = builder(gp, kin1, kin3, **kw).op.mat
    r23 = builder(gp, kin2, kin3, **kw).op.mat
    return max_abs(cybe_operator(r12, r13, r23))


def quadratic_warp(strength: float = 0.3) -> Callable[[complex], complex]:
    """Loop-variable warp ``z -> z + strength z^2`` (breaks linearity of W in z)."""
    return lambda z: z + strength * z * z


def coefficient_jacobian(gp_builder: Callable, point: np.ndarray, step: float = 1e-4) -> np.ndarray:
    """Complex Jacobian of the ten coefficients (with identity shift) by 4-point central differences.

    ``gp_builder(p)`` maps a parameter vector ``(x1, x2, g1, g2, h, lam)`` to a
    CoefficientSet.
    """
    point = np.asarray(point, dtype=complex)
    cols = []
    for n in range(point.size):
        e = np.zeros_like(point)
        e[n] = step
        f = lambda t: gp_builder(point + t * e).as_array()
        cols.append((8 * (f(1) - f(-1)) - (f(2) - f(-2))) / (12 * step))
    return np.stack(cols, axis=1)


def coefficient_rank(point, alpha: complex = 1.0, threshold: float = 1e-8) -> tuple[int, np.ndarray]:
    """Numerical rank of ``(x1, x2, g1, g2, h, lam[, alpha]) -> (A..L)`` at ``point``.

    A seventh entry of ``point`` makes alpha a free parameter; otherwise
    ``alpha`` is held fixed.
    """
    from .params import derive_kinematics, make_global

    point = np.asarray(point, dtype=complex)
    if point.size not in (6, 7):
        raise ValueError("point needs 6 or 7 entries")

    def build(p):
        x1, x2, g1, g2, h, lam = p[:6]
        gp = make_global(h, p[6] if p.size == 7 else alpha)
        cs = coefficients(gp, derive_kinematics(gp, x1, g1), derive_kinematics(gp, x2, g2))
        return shift_coefficients(cs, lam)

    J = coefficient_jacobian(build, point)
    sv = np.linalg.svd(J, compute_uv=False)
    return int(np.sum(sv > threshold * sv[0])), sv
