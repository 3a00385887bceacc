"""Scalar kinematics of the deformed gl(2|2) loop algebra.

Global data is the deformation modulus ``h`` (with ``h'`` and ``k``) and the
constant ``alpha``.  A fundamental evaluation representation is labelled by a
spectral parameter ``x`` and a normalisation ``gamma``; everything else
(``z``, ``q``, ``a, b, c, d`` and the 2x2 matrices ``T, W, U`` and scalar
``V``) is derived from them.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass, field

import numpy as np

#: denominators below this magnitude are treated as poles
POLE_THRESHOLD = 1e-12

M = np.diag([1.0, -1.0]).astype(complex)


class ParameterError(ValueError):
    """Invalid global parameters (e.g. degenerate modulus)."""


class PoleError(ValueError):
    """A kinematic quantity was requested too close to one of its poles."""

    def __init__(self, message: str, point: str):
        super().__init__(message)
        self.point = point


@dataclass(frozen=True)
class GlobalParams:
    h: complex
    hprime: complex
    alpha: complex
    k: complex

    def check(self, tol: float = 1e-10) -> dict[str, float]:
        """Residuals of the defining relations between h, h' and k."""
        k = self.k
        return {
            "h^2+h'^2-1": abs(self.h**2 + self.hprime**2 - 1),
            "h-(k+1/k)/2": abs(self.h - (k + 1 / k) / 2),
            "h'+i(k-1/k)/2": abs(self.hprime + 0.5j * (k - 1 / k)),
        }


def make_global(h: complex, alpha: complex = 1.0, branch: int = 1,
                allow_degenerate: bool = False) -> GlobalParams:
    """Global parameters from ``h``; ``h' = branch * sqrt(1 - h^2)``
    (principal root) and ``k = h + i h'`` solves ``k^2 - 2hk + 1 = 0``."""
    if branch not in (1, -1):
        raise ParameterError("branch must be +1 or -1")
    h = complex(h)
    alpha = complex(alpha)
    if alpha == 0:
        raise ParameterError("alpha must be nonzero")
    hp = branch * cmath.sqrt(1 - h * h)
    if hp == 0 and not allow_degenerate:
        raise ParameterError(f"h = {h} gives h' = 0; the sign of h' is ambiguous")
    return GlobalParams(h=h, hprime=hp, alpha=alpha, k=h + 1j * hp)


def global_from_k(k: complex, alpha: complex = 1.0) -> GlobalParams:
    k = complex(k)
    if k == 0:
        raise ParameterError("k must be nonzero")
    return GlobalParams(h=(k + 1 / k) / 2, hprime=-0.5j * (k - 1 / k), alpha=complex(alpha), k=k)


@dataclass(frozen=True)
class Kinematics:
    """One fundamental evaluation representation.

    ``gauge`` is ``"preferred"`` when gamma was chosen proportional to the
    normalisation for which ``z dT/dz T^-1 = U`` exactly, else ``"constant"``.
    """

    gp: GlobalParams
    x: complex
    gamma: complex
    z: complex
    q: complex
    a: complex
    b: complex
    c: complex
    d: complex
    gauge: str = "constant"
    T: np.ndarray = field(repr=False, default=None)
    W: np.ndarray = field(repr=False, default=None)
    U: np.ndarray = field(repr=False, default=None)
    V: complex = field(repr=False, default=None)

    def constraints(self) -> dict[str, float]:
        """Residuals of the kinematic identities (max-abs)."""
        T, W = self.T, self.W
        return {
            "ad-bc-1": abs(self.a * self.d - self.b * self.c - 1),
            "detT-1": abs(np.linalg.det(T) - 1),
            "trW": abs(np.trace(W)),
            "TM-qWT": float(np.max(np.abs(T @ M - self.q * W @ T))),
        }


def _check_pole(value: complex, what: str, point: str):
    if abs(value) < POLE_THRESHOLD:
        raise PoleError(f"{what} vanishes: x is at the special point {point}", point)


def zq_of_x(gp: GlobalParams, x: complex) -> tuple[complex, complex]:
    h, hp = gp.h, gp.hprime
    P = hp * x - 1j * h
    Q = h * x + 1j * hp
    _check_pole(P, "h'x - ih", "x = ih/h'")
    _check_pole(Q, "hx + ih'", "x = -ih'/h")
    _check_pole(x * x - 1, "x^2 - 1", "x = +-1")
    z = 1j * x / (P * Q)
    q = -P * Q / (hp * (x * x - 1))
    return z, q


def W_matrix(gp: GlobalParams, z: complex) -> np.ndarray:
    h, al = gp.h, gp.alpha
    return np.array([[(z - 1) / h, 2 * al], [2 * z / al, -(z - 1) / h]], dtype=complex)


def UV_matrices(gp: GlobalParams, z: complex) -> tuple[np.ndarray, complex]:
    """Derivation data in the gauge where the W-component of z dT/dz T^-1 vanishes."""
    h, al = gp.h, gp.alpha
    den = z + 1 / z - 2 + 4 * h * h
    if abs(den) < POLE_THRESHOLD:
        raise PoleError("z is at a self-dual point, U and V have poles there", "z = z*")
    U = np.array([[-h * h, h * al], [-h / al, h * h]], dtype=complex) / den
    V = -(z - 1 + 2 * h * h) / den
    return U, V


def preferred_gamma(gp: GlobalParams, x: complex) -> complex:
    """Normalisation ``(h'x - ih) / (h' sqrt(x^2 - 1))`` (principal root)."""
    return (gp.hprime * x - 1j * gp.h) / (gp.hprime * cmath.sqrt(x * x - 1))


def derive_kinematics(gp: GlobalParams, x: complex, gamma: complex,
                      gauge: str = "constant") -> Kinematics:
    x = complex(x)
    gamma = complex(gamma)
    if gamma == 0:
        raise ParameterError("gamma must be nonzero")
    h, hp, al = gp.h, gp.hprime, gp.alpha
    z, q = zq_of_x(gp, x)
    P = hp * x - 1j * h
    a = gamma
    b = al * q / gamma
    c = 1j * gamma / (al * P)
    d = x * P / (gamma * hp * (x * x - 1))
    T = np.array([[a, -b], [-c, d]], dtype=complex)
    W = W_matrix(gp, z) if h != 0 else None
    try:
        U, V = UV_matrices(gp, z)
    except PoleError:
        U, V = None, None
    return Kinematics(gp=gp, x=x, gamma=gamma, z=z, q=q, a=a, b=b, c=c, d=d,
                      gauge=gauge, T=T, W=W, U=U, V=V)


def preferred_kinematics(gp: GlobalParams, x: complex, scale: complex = 1.0) -> Kinematics:
    """Kinematics with ``gamma = scale * preferred_gamma(x)``."""
    return derive_kinematics(gp, x, scale * preferred_gamma(gp, x), gauge="preferred")


def selfdual_points(gp: GlobalParams) -> tuple[complex, complex, complex, complex]:
    """``(z*_+, z*_-, x*_+, x*_-)`` with ``z*_pm = (ih pm h')^2`` and ``x*_pm = pm 1``."""
    h, hp = gp.h, gp.hprime
    return (1j * h + hp) ** 2, (1j * h - hp) ** 2, 1.0 + 0j, -1.0 + 0j


def crossratio(gp: GlobalParams) -> complex:
    """The Moebius invariant ``(ih + h')^4`` of the four special points."""
    return (1j * gp.h + gp.hprime) ** 4


# quantum side -------------------------------------------------------------

def xpm_classical(gp: GlobalParams, x: complex, g: float, order: int = 1):
    """Large-coupling expansion of ``x^pm`` and the deformation parameter.

    Returns ``(xplus, xminus, qdef)`` with ``qdef = 1 + h/(2g)``.
    """
    if g <= 0:
        raise ParameterError("coupling g must be positive")
    if order not in (0, 1):
        raise ParameterError("order must be 0 or 1")
    h, hp = gp.h, gp.hprime
    x = complex(x)
    _check_pole(x * x - 1, "x^2 - 1", "x = +-1")
    base = hp * x - 1j * h
    corr = x * (h * x + 1j * hp) / (x * x - 1) / (2 * g) if order == 1 else 0.0
    return base * (1 + corr), base * (1 - corr), 1 + h / (2 * g)


def xpm_constraint(xplus: complex, xminus: complex, qdef: complex, g: float) -> complex:
    """Left minus right side of the quadratic relation between ``x^+`` and ``x^-``."""
    qq = qdef
    return (xplus / qq + qq / xplus - qq * xminus - 1 / (qq * xminus)
            + 1j * g * (qq - 1 / qq) * (xplus / (qq * xminus) - qq * xminus / xplus)
            - 1j / g)


def solve_xplus(xminus: complex, qdef: complex, g: float, near: complex) -> complex:
    """Exact root ``x^+`` of the quadratic relation closest to ``near``."""
    qq = qdef
    dq = qq - 1 / qq
    c2 = 1 / qq + 1j * g * dq / (qq * xminus)
    c1 = -(qq * xminus + 1 / (qq * xminus) + 1j / g)
    c0 = qq - 1j * g * dq * qq * xminus
    roots = np.roots([c2, c1, c0])
    return complex(roots[np.argmin(np.abs(roots - near))])


@dataclass(frozen=True)
class QuantumSideData:
    g: float
    qdef: complex
    xplus: complex
    xminus: complex
    q2D: complex
    q2C: complex
    P: complex
    K: complex
    q2C_discrepancy: float
    constraint_residual: float


def quantum_charges(xplus: complex, xminus: complex, qdef: complex, g: float,
                    alpha: complex) -> QuantumSideData:
    qq = qdef
    dq = qq - 1 / qq
    q2D = xplus / (qq * xminus)
    q2C = qq * (dq / xplus - 1j / g) / (dq / xminus - 1j / g)
    q2C_alt = (dq * xplus + 1j / g) / (dq * xminus + 1j / g) / qq
    P = g * alpha * (1 - q2C * q2D)
    K = g / alpha * (1 / q2C - 1 / q2D)
    return QuantumSideData(g=g, qdef=qq, xplus=xplus, xminus=xminus, q2D=q2D, q2C=q2C,
                           P=P, K=K, q2C_discrepancy=abs(q2C - q2C_alt),
                           constraint_residual=abs(xpm_constraint(xplus, xminus, qq, g)))


# reparametrisation ----------------------------------------------------------

@dataclass(frozen=True)
class YParams:
    y: complex
    k: complex
    eta: complex
    kappa: complex
    x: complex
    gamma: complex
    z: complex
    q: complex
    a: complex
    b: complex
    c: complex
    d: complex
    R: np.ndarray = field(repr=False)
    Ttilde: np.ndarray = field(repr=False)
    Wtilde: np.ndarray = field(repr=False)
    Utilde: np.ndarray = field(repr=False)

    @property
    def gp(self) -> GlobalParams:
        k = self.k
        return global_from_k(k, 0.5 * (k - 1 / k) * self.kappa)


def y_special_points(k: complex) -> dict[str, list[complex]]:
    """Points of the y-plane mapping to z = 0 (circ+), z = inf (circ-) and the self-dual points."""
    return {
        "circ+": [1, -1, 1j, -1j],
        "circ-": [k, -k, 1j * k, -1j * k],
        "star": [0, np.inf],
    }


def z_of_y(y: complex, k: complex) -> complex:
    return -k * k * (y**4 - 1) / (y**4 - k**4)


def y_parametrisation(y: complex, k: complex, eta: complex, kappa: complex) -> YParams:
    y, k, eta, kappa = complex(y), complex(k), complex(eta), complex(kappa)
    for name, pts in y_special_points(k).items():
        for p in pts:
            if np.isinf(p):
                continue
            if abs(y - p) < POLE_THRESHOLD:
                label = "y*" if name == "star" else "y°"
                raise PoleError(f"y = {y} is at the special point {label} = {p}", label)
    km = k - 1 / k
    x = -(y * y - 1) / (y * y + 1)
    gamma = (y * y + k * k) / (2 * k * y) * eta
    z = z_of_y(y, k)
    # factor 1/2 fixed by b = alpha q / gamma
    q = -1 / (2 * k * k * km) * (y**4 - k**4) / (y * y)
    a = eta * (y * y + k * k) / (2 * k * y)
    b = -kappa * (y * y - k * k) / (2 * k * eta * y)
    c = -eta * (y * y + 1) / (kappa * km * y)
    d = (y * y - 1) / (eta * km * y)
    gp = global_from_k(k, 0.5 * km * kappa)
    T = np.array([[a, -b], [-c, d]])
    W = W_matrix(gp, z)
    U, _ = UV_matrices(gp, z)
    R = np.array([[-2 / km, kappa * k], [-1 / (kappa * km), 0.5 / k]])
    Rinv = np.linalg.inv(R)
    return YParams(y=y, k=k, eta=eta, kappa=kappa, x=x, gamma=gamma, z=z, q=q,
                   a=a, b=b, c=c, d=d, R=R, Ttilde=R @ T, Wtilde=R @ W @ Rinv,
                   Utilde=R @ U @ Rinv)
