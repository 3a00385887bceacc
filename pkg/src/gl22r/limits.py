"""Limiting r-matrices: paths, rescalings, closed forms and the degeneration graph.

Each family fixes a path ``eps -> (gp, kin1, kin2)`` through the full
trigonometric r-matrix, a scalar rescaling of ``r`` and closed-form limit
coefficients.  Rational families use the state-action table without the
constant +-1/2 terms; trigonometric families keep them.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Callable

import numpy as np

from .params import (GlobalParams, Kinematics, ParameterError, PoleError, UV_matrices, W_matrix,
                     derive_kinematics, make_global)
from .rmatrix import CoefficientSet, cybe_operator, r_fund_table, table_operator
from .superlinalg import max_abs

FAMILIES = ("full_rational", "conventional_rational", "conventional_trigonometric", "twisted_rational",
            "twisted_trigonometric", "special_trig_inf", "special_trig_zero", "special_rational")

RATIONAL = "rational"
TRIGONOMETRIC = "trigonometric"


@dataclass(frozen=True)
class Site:
    """Limit variable of one site (u, z~ or y) and its gamma."""

    var: complex
    gamma: complex = 1.0


@dataclass(frozen=True)
class LimitFamily:
    name: str
    limit_type: str
    variable: str
    globals_default: dict
    path: Callable = field(repr=False)
    rescale: Callable = field(repr=False)
    limit_coeffs: Callable = field(repr=False)
    rep_params: Callable | None = field(default=None, repr=False)

    @property
    def constant(self) -> float:
        return 0.0 if self.limit_type == RATIONAL else 1.0


def table2(z1, z2, q1, q2, p1, p2) -> CoefficientSet:
    """Coefficient formulas evaluated on explicit parameters ``p = (a, b, c, d)``."""
    a1, b1, c1, d1 = p1
    a2, b2, c2, d2 = p2
    dz = z1 - z2
    if abs(dz) < 1e-14:
        raise PoleError("limit variables collide", "z1 = z2")
    A = (0.25 * z1 + 0.25 * z2 + 0.25 * z1 * q1 / q2 + 0.25 * z2 * q2 / q1) / dz
    G = (-0.25 * z1 * q1 / q2 + 0.25 * z2 * q2 / q1) / dz
    B = 2 * z1 / dz - 1 - A
    return CoefficientSet(A=A, B=B, C=(z1 * a1 * c2 - z2 * a2 * c1) / dz, D=A, E=B,
                          F=(z1 * b1 * d2 - z2 * b2 * d1) / dz, G=G,
                          H=(z1 * a1 * d2 - z2 * b2 * c1) / dz, K=(-z1 * b1 * c2 + z2 * a2 * d1) / dz, L=-G)


def _from_sums(plus, minus, C, F, G, H, K) -> CoefficientSet:
    """Build a set from A+B = 2 plus, A-B = 2 minus with A = D, B = E, L = -G."""
    A = plus + minus
    B = plus - minus
    return CoefficientSet(A=A, B=B, C=C, D=A, E=B, F=F, G=G, H=H, K=K, L=-G)


def _distinct(v1, v2, what="limit variables"):
    if abs(v1 - v2) < 1e-12:
        raise PoleError(f"{what} collide", "u1 = u2")


def _big_h(eps: float, alpha) -> GlobalParams:
    """h = 1/eps with h' = +i sqrt(h^2 - 1)."""
    h = 1 / eps
    gp = make_global(h, alpha)
    if (gp.hprime / (1j * h)).real < 0:
        gp = make_global(h, alpha, branch=-1)
    return gp


# full rational ----------------------------------------------------------------

def _rational_params(x, gamma, alpha):
    s = x * x - 1
    return (gamma, -1j * alpha * x / (gamma * s), 1j * gamma / (alpha * x), x * x / (gamma * s)), -1j * x / s


def _full_rational_path(eps, s1: Site, s2: Site, g):
    gp = make_global(eps, g["alpha"])
    return gp, derive_kinematics(gp, s1.var, s1.gamma), derive_kinematics(gp, s2.var, s2.gamma)


def _full_rational_coeffs(s1: Site, s2: Site, g):
    u1, u2 = s1.var + 1 / s1.var, s2.var + 1 / s2.var
    _distinct(u1, u2)
    p1, q1 = _rational_params(s1.var, s1.gamma, g["alpha"])
    p2, q2 = _rational_params(s2.var, s2.gamma, g["alpha"])
    du = u1 - u2
    A = (0.5 + 0.25 * (q1 / q2 + q2 / q1)) / du
    G = 0.25 * (q2 / q1 - q1 / q2) / du
    a1, b1, c1, d1 = p1
    a2, b2, c2, d2 = p2
    return CoefficientSet(A=A, B=2 / du - A, C=(a1 * c2 - a2 * c1) / du, D=A, E=2 / du - A,
                          F=(b1 * d2 - b2 * d1) / du, G=G, H=(a1 * d2 - b2 * c1) / du,
                          K=(-b1 * c2 + a2 * d1) / du, L=-G)


# conventional rational ----------------------------------------------------------

def conventional_singular_points(gp: GlobalParams) -> list[complex]:
    return [1.0, -1.0, 1j * gp.h / gp.hprime, -1j * gp.hprime / gp.h]


def _conv_rational_path(eps, s1: Site, s2: Site, g):
    gp = make_global(g["h"], g["alpha"])
    x0 = g["x0"]
    for p in conventional_singular_points(gp):
        if abs(x0 - p) < 1e-8:
            raise PoleError(f"x0 = {x0} is a singular point of the rescaling", "x0 singular")
    return (gp, derive_kinematics(gp, x0 * (1 + eps * s1.var), s1.gamma),
            derive_kinematics(gp, x0 * (1 + eps * s2.var), s2.gamma))


def _conv_rational_rescale(eps, g):
    gp = make_global(g["h"], g["alpha"])
    h, hp, x0 = gp.h, gp.hprime, g["x0"]
    return -h * hp * eps * (x0 * x0 - 1) / ((h * x0 + 1j * hp) * (hp * x0 - 1j * h))


def _conv_rational_coeffs(s1: Site, s2: Site, g):
    _distinct(s1.var, s2.var)
    w = 1 / (s1.var - s2.var)
    return CoefficientSet(A=w, B=w, C=0, D=w, E=w, F=0, G=0, H=s1.gamma / s2.gamma * w,
                          K=s2.gamma / s1.gamma * w, L=0)


# conventional trigonometric -------------------------------------------------------

def _conv_trig_path(eps, s1: Site, s2: Site, g):
    gp = make_global(g["h"], g["alpha_tilde"] / eps)
    x0 = 1j * gp.h / gp.hprime
    return (gp, derive_kinematics(gp, x0 * (1 + eps / s1.var), s1.gamma),
            derive_kinematics(gp, x0 * (1 + eps / s2.var), s2.gamma))


def _conv_trig_coeffs(s1: Site, s2: Site, g):
    z1, z2 = s1.var, s2.var
    _distinct(z1, z2)
    A = 0.5 * (z1 + z2) / (z1 - z2)
    return CoefficientSet(A=A, B=A, C=0, D=A, E=A, F=0, G=0.25, H=s1.gamma / s2.gamma * z1 / (z1 - z2),
                          K=s2.gamma / s1.gamma * z2 / (z1 - z2), L=-0.25)


# twisted rational -------------------------------------------------------------

def _twisted_rational_path(eps, s1: Site, s2: Site, g):
    gp0 = make_global(g["h"], 1.0)
    h, hp = gp0.h, gp0.hprime
    gp = make_global(g["h"], 1j * eps * g["alpha_tilde"] / (hp - 1j * h))
    xs = [1 + eps * (hp - 1j * h) / hp * s.var for s in (s1, s2)]
    return gp, derive_kinematics(gp, xs[0], s1.gamma), derive_kinematics(gp, xs[1], s2.gamma)


def _twisted_rational_rescale(eps, g):
    gp = make_global(g["h"], 1.0)
    return 1j * gp.h * eps**2 / gp.hprime


def _twisted_rational_coeffs(s1: Site, s2: Site, g):
    y1, y2 = s1.var, s2.var
    _distinct(y1, y2)
    _distinct(y1, -y2, "y1 and -y2")
    g1, g2, at = s1.gamma, s2.gamma, g["alpha_tilde"]
    return _from_sums(
        plus=1 / (y1 * y1 - y2 * y2),
        minus=(y1 - y2) / (4 * y1 * y2 * (y1 + y2)),
        C=(2 * g1 * g2 / at) * 0.5 / (y1 + y2),
        F=-(at / (2 * g1 * g2 * y1 * y2)) * 0.5 / (y1 + y2),
        G=1 / (4 * y1 * y2),
        H=(g1 / (g2 * y2)) * 0.5 / (y1 - y2),
        K=(g2 / (g1 * y1)) * 0.5 / (y1 - y2),
    )


def _twisted_rational_rep(site: Site, g):
    """(a, b, c~, d~, q~) of the limit representation."""
    y, gam, at = site.var, site.gamma, g["alpha_tilde"]
    return np.array([gam, at / (2 * y * gam), -gam * y / at, 1 / (2 * gam), 1 / (2 * y)])


# twisted trigonometric ----------------------------------------------------------

def _twisted_trig_path(eps, s1: Site, s2: Site, g):
    gp = _big_h(eps, g["alpha"])
    return (gp, derive_kinematics(gp, 1 - eps / s1.var, s1.gamma),
            derive_kinematics(gp, 1 - eps / s2.var, s2.gamma))


def _twisted_trig_coeffs(s1: Site, s2: Site, g):
    y1, y2 = s1.var, s2.var
    _distinct(y1, y2)
    _distinct(y1, -y2, "y1 and -y2")
    g1, g2, al = s1.gamma, s2.gamma, g["alpha"]
    # 1/2 (A + B) = 1/2 (A + B + 1) - 1/2
    return _from_sums(
        plus=y1 * y1 / (y1 * y1 - y2 * y2) - 0.5,
        minus=-0.25 * (y1 - y2) / (y1 + y2),
        C=-(2 * g1 * g2 * y1 * y2 / al) * 0.5 / (y1 + y2),
        F=(al / (2 * g1 * g2)) * 0.5 / (y1 + y2),
        G=0.0,
        H=(y1 * g1 / g2) * 0.5 / (y1 - y2),
        K=(y2 * g2 / g1) * 0.5 / (y1 - y2),
    )


def _twisted_trig_rep(site: Site, g):
    y, gam, al = site.var, site.gamma, g["alpha"]
    return np.array([gam, al / (2 * gam * y), -gam * y / al, 1 / (2 * gam), 1 / (2 * y)])


# special trigonometric, h = infinity ---------------------------------------------------

def _special_inf_params(x, gamma, at):
    p = (gamma, -(at / (2 * gamma)) * (x - 1) / (x + 1), (2 * gamma / at) / (x - 1), x / (gamma * (x + 1)))
    return p, -(x - 1) / (x + 1), -4 * x / (x - 1) ** 2


def _special_inf_path(eps, s1: Site, s2: Site, g):
    gp = _big_h(eps, 0.5 * eps * g["alpha_tilde"])
    return gp, derive_kinematics(gp, s1.var, s1.gamma), derive_kinematics(gp, s2.var, s2.gamma)


def _special_inf_coeffs(s1: Site, s2: Site, g):
    p1, q1, z1 = _special_inf_params(s1.var, s1.gamma, g["alpha_tilde"])
    p2, q2, z2 = _special_inf_params(s2.var, s2.gamma, g["alpha_tilde"])
    return table2(z1, z2, q1, q2, p1, p2)


# special trigonometric, h = 0 ----------------------------------------------------

def _special_zero_path(eps, s1: Site, s2: Site, g):
    gp = make_global(eps, g["alpha"])
    xs = [-1j * (s.var - 1) / (eps * s.var) for s in (s1, s2)]
    return gp, derive_kinematics(gp, xs[0], s1.gamma), derive_kinematics(gp, xs[1], s2.gamma)


def _special_zero_coeffs(s1: Site, s2: Site, g):
    z1, z2 = s1.var, s2.var
    return table2(z1, z2, 1 / (z1 - 1), 1 / (z2 - 1),
                  (s1.gamma, 0, 0, 1 / s1.gamma), (s2.gamma, 0, 0, 1 / s2.gamma))


# special rational ------------------------------------------------------------

def _special_rational_path(eps, s1: Site, s2: Site, g):
    gp = make_global(eps * eps, g["alpha"])
    return (gp, derive_kinematics(gp, s1.var / eps, s1.gamma),
            derive_kinematics(gp, s2.var / eps, s2.gamma))


def _special_rational_coeffs(s1: Site, s2: Site, g):
    u1, u2 = s1.var, s2.var
    _distinct(u1, u2)
    return _from_sums(
        plus=1 / (u1 - u2),
        minus=(u1 - u2) / (4 * u1 * u2),
        C=0, F=0,
        G=(u1 + u2) / (4 * u1 * u2),
        H=(s1.gamma / s2.gamma) / (u1 - u2),
        K=(s2.gamma / s1.gamma) / (u1 - u2),
    )


def _ieps(eps, g):
    return 1j * eps


def _one(eps, g):
    return 1.0


LIMITS: dict[str, LimitFamily] = {
    "full_rational": LimitFamily("full_rational", RATIONAL, "x", {"alpha": 1.0},
                                 _full_rational_path, _ieps, _full_rational_coeffs),
    "conventional_rational": LimitFamily("conventional_rational", RATIONAL, "u",
                                         {"h": 0.3, "alpha": 1.0, "x0": 2 + 1j},
                                         _conv_rational_path, _conv_rational_rescale, _conv_rational_coeffs),
    "conventional_trigonometric": LimitFamily("conventional_trigonometric", TRIGONOMETRIC, "z~",
                                              {"h": 0.3, "alpha_tilde": 1.0},
                                              _conv_trig_path, _one, _conv_trig_coeffs),
    "twisted_rational": LimitFamily("twisted_rational", RATIONAL, "y", {"h": 0.3, "alpha_tilde": 1.0},
                                    _twisted_rational_path, _twisted_rational_rescale, _twisted_rational_coeffs,
                                    _twisted_rational_rep),
    "twisted_trigonometric": LimitFamily("twisted_trigonometric", TRIGONOMETRIC, "y", {"alpha": 1.0},
                                         _twisted_trig_path, _one, _twisted_trig_coeffs, _twisted_trig_rep),
    "special_trig_inf": LimitFamily("special_trig_inf", TRIGONOMETRIC, "x", {"alpha_tilde": 1.0},
                                    _special_inf_path, _one, _special_inf_coeffs),
    "special_trig_zero": LimitFamily("special_trig_zero", TRIGONOMETRIC, "z", {"alpha": 1.0},
                                     _special_zero_path, _one, _special_zero_coeffs),
    "special_rational": LimitFamily("special_rational", RATIONAL, "u", {"alpha": 1.0},
                                    _special_rational_path, _ieps, _special_rational_coeffs),
}


def family(name: str) -> LimitFamily:
    try:
        return LIMITS[name]
    except KeyError:
        raise ParameterError(f"unknown limit family {name!r}; choose from {', '.join(FAMILIES)}") from None


def _globals(fam: LimitFamily, g: dict | None) -> dict:
    out = dict(fam.globals_default)
    out.update(g or {})
    return out


def limit_coefficients(name: str, s1: Site, s2: Site, g: dict | None = None) -> CoefficientSet:
    fam = family(name)
    return fam.limit_coeffs(s1, s2, _globals(fam, g))


def limit_r(name: str, s1: Site, s2: Site, g: dict | None = None) -> np.ndarray:
    """16x16 limit r-matrix in the family's structural form."""
    fam = family(name)
    return table_operator(limit_coefficients(name, s1, s2, g), constant=fam.constant)


def rescaled_r(name: str, eps: float, s1: Site, s2: Site, g: dict | None = None) -> np.ndarray:
    """Full r-matrix on the family's path at ``eps``, times the family's rescaling."""
    fam = family(name)
    gg = _globals(fam, g)
    gp, k1, k2 = fam.path(eps, s1, s2, gg)
    return fam.rescale(eps, gg) * r_fund_table(gp, k1, k2).op.mat


@dataclass
class ConvergenceReport:
    family: str
    eps: list[float]
    errors: list[float]
    order: float
    exact: bool

    @property
    def passed(self) -> bool:
        return self.exact or self.order >= 0.9


def fit_order(eps_list, errors) -> float:
    """Least-squares slope of log(error) against log(eps)."""
    le, lr = np.log(np.asarray(eps_list, float)), np.log(np.asarray(errors, float))
    return float(np.polyfit(le, lr, 1)[0])


def convergence_check(name: str, eps_list=(1e-2, 1e-3, 1e-4), s1: Site | None = None, s2: Site | None = None,
                      g: dict | None = None, exact_floor: float = 1e-12) -> ConvergenceReport:
    if list(eps_list) != sorted(eps_list, reverse=True):
        raise ParameterError("eps_list must be decreasing")
    d1, d2 = default_sites(name)
    s1, s2 = s1 or d1, s2 or d2
    target = limit_r(name, s1, s2, g)
    errors = [max_abs(rescaled_r(name, e, s1, s2, g) - target) for e in eps_list]
    exact = max(errors) < exact_floor
    order = float("inf") if exact else fit_order(eps_list, errors)
    return ConvergenceReport(name, list(eps_list), errors, order, exact)


def default_sites(name: str) -> tuple[Site, Site]:
    table = {
        "full_rational": (Site(2.1 + 0.3j, 1.2), Site(3.7 - 0.4j, 0.8 + 0.1j)),
        "conventional_rational": (Site(2.1, 1.2), Site(3.7, 0.8 + 0.1j)),
        "conventional_trigonometric": (Site(1.3 + 0.2j, 1.2), Site(-0.7 + 0.9j, 0.8 + 0.1j)),
        "twisted_rational": (Site(1.3 + 0.2j, 1.2), Site(0.6 - 0.5j, 0.8 + 0.1j)),
        "twisted_trigonometric": (Site(1.3 + 0.2j, 1.2), Site(0.6 - 0.5j, 0.8 + 0.1j)),
        "special_trig_inf": (Site(2.1 + 0.3j, 1.2), Site(-1.7 + 0.9j, 0.8 + 0.1j)),
        "special_trig_zero": (Site(1.8 + 0.6j, 1.2), Site(-0.7 + 0.4j, 0.8 + 0.1j)),
        "special_rational": (Site(2.1 + 0.3j, 1.2), Site(3.7 - 0.4j, 0.8 + 0.1j)),
    }
    return table[name]


def limit_cybe_residual(name: str, sites: tuple[Site, Site, Site], g: dict | None = None) -> float:
    a, b, c = sites
    return max_abs(cybe_operator(limit_r(name, a, b, g), limit_r(name, a, c, g), limit_r(name, b, c, g)))


def twisted_parameter_match(y: complex, gamma: complex, alpha: complex) -> float:
    """Representation parameters (a, b, c~, d~, q~) of the two twisted limits at the same (y, gamma, alpha)."""
    s = Site(y, gamma)
    return max_abs(_twisted_rational_rep(s, {"alpha_tilde": alpha}) - _twisted_trig_rep(s, {"alpha": alpha}))


def twisted_rational_rep_numeric(eps: float, site: Site, g: dict | None = None) -> np.ndarray:
    """(a, b, c - a/(alpha~ eps), d - b/(alpha~ eps), i eps q / (h' - i h)) along the path."""
    fam = family("twisted_rational")
    gg = _globals(fam, g)
    gp, k, _ = fam.path(eps, site, Site(site.var + 1, 1.0), gg)
    at = gg["alpha_tilde"]
    qt = 1j * eps * k.q / (gp.hprime - 1j * gp.h)
    return np.array([k.a, k.b, k.c - k.a / (at * eps), k.d - k.b / (at * eps), qt])


# limit algebras -------------------------------------------------------------

@dataclass(frozen=True)
class LimitAlgebra:
    """Structure matrices of a limit as functions of the loop variable.

    ``derivative`` is ``"d/du"`` for rational families and ``"z d/dz"`` for
    trigonometric ones.  Twisted families carry the level exponents that
    untwist them and the untwisted constants.
    """

    W: Callable
    U: Callable
    V: Callable
    derivative: str
    untwist: dict | None = None
    W_bar: np.ndarray | None = None


def limit_algebra(name: str, g: dict | None = None) -> LimitAlgebra:
    fam = family(name)
    gg = _globals(fam, g)
    M = np.diag([1.0, -1.0]).astype(complex)
    zero = lambda v: np.zeros((2, 2), dtype=complex)
    if name == "full_rational":
        al = gg["alpha"]
        return LimitAlgebra(
            W=lambda u: np.array([[1j * u, 2 * al], [2 / al, -1j * u]]),
            U=lambda u: np.array([[0, -1j * al], [1j / al, 0]]) / (u * u - 4),
            V=lambda u: -u / (u * u - 4), derivative="d/du")
    if name in ("conventional_rational", "conventional_trigonometric"):
        return LimitAlgebra(W=lambda v: M, U=zero, V=lambda v: 0.0,
                            derivative="d/du" if fam.limit_type == RATIONAL else "z d/dz")
    if name == "twisted_rational":
        at = gg["alpha_tilde"]
        return LimitAlgebra(
            W=lambda u: np.array([[0, 2 * at], [2 * u / at, 0]]),
            U=lambda u: np.diag([-1.0, 1.0]) / (4 * u),
            V=lambda u: -1 / (2 * u), derivative="d/du",
            untwist={"Q": 0.25, "S": -0.25, "A": 0.5, "B": -0.5},
            W_bar=np.array([[0, 2 * at], [2 / at, 0]]))
    if name == "twisted_trigonometric":
        al = gg["alpha"]
        return LimitAlgebra(
            W=lambda z: np.array([[0, 2 * al], [2 * z / al, 0]]),
            U=lambda z: 0.25 * np.diag([-1.0, 1.0]).astype(complex),
            V=lambda z: -0.5, derivative="z d/dz",
            untwist={"Q": 0.25, "S": -0.25, "A": 0.5, "B": -0.5},
            W_bar=np.array([[0, 2 * al], [2 / al, 0]]))
    if name == "special_trig_inf":
        at = gg["alpha_tilde"]
        return LimitAlgebra(
            W=lambda z: np.array([[-1, at], [-z / at, 1]]),
            U=lambda z: 0.25 * z / (z - 1) * np.array([[-1, 0], [-2 / at, 1]]),
            V=lambda z: -0.5 * z / (z - 1), derivative="z d/dz")
    if name == "special_trig_zero":
        return LimitAlgebra(W=lambda z: (z - 1) * M, U=zero, V=lambda z: -z / (z - 1),
                            derivative="z d/dz", untwist={"A": 1, "B": -1}, W_bar=M)
    if name == "special_rational":
        return LimitAlgebra(W=lambda u: u * np.diag([-1.0, 1.0]).astype(complex), U=zero,
                            V=lambda u: -1 / u, derivative="d/du")
    raise ParameterError(name)


def untwisted_W(name: str, v: complex, g: dict | None = None) -> np.ndarray:
    """Apply the level redefinition to W at loop variable ``v``; should equal ``W_bar``."""
    alg = limit_algebra(name, g)
    if alg.untwist is None:
        raise ParameterError(f"{name} has no untwisting data")
    W = alg.W(v)
    if name == "special_trig_zero":
        return W / (v - 1)
    s = np.sqrt(complex(v))  # principal branch
    D = np.diag([np.sqrt(s), 1 / np.sqrt(s)])
    return D @ W @ np.linalg.inv(D) / s


def affine_residual(name: str, v: complex, g: dict | None = None, step: float = 1e-4) -> float:
    """``D W - [U, W] + V W`` with D = d/du or z d/dz, derivative by 4-point differences."""
    alg = limit_algebra(name, g)
    dW = (8 * (alg.W(v + step) - alg.W(v - step)) - (alg.W(v + 2 * step) - alg.W(v - 2 * step))) / (12 * step)
    if alg.derivative == "z d/dz":
        dW = v * dW
    W, U, V = alg.W(v), alg.U(v), alg.V(v)
    return max_abs(dW - (U @ W - W @ U) + V * W)


def limit_algebra_numeric(name: str, eps: float, site: Site, g: dict | None = None):
    """Rescaled (W, U, V) of the full algebra along the path, for families with a displayed rescaling.

    Returns ``(v, W, U, V)`` with v the family's loop variable at this point.
    """
    fam = family(name)
    gg = _globals(fam, g)
    gp, kin, _ = fam.path(eps, site, Site(site.var * 1.37 + 0.5, 1.0), gg)
    W = W_matrix(gp, kin.z)
    U, V = UV_matrices(gp, kin.z)
    if name == "full_rational":
        return site.var + 1 / site.var, W, 1j * eps * U, 1j * eps * V
    if name == "special_rational":
        return site.var, 1j * eps * W, 1j * eps * U, 1j * eps * V
    if name == "special_trig_inf":
        return -4 * kin.z / eps**2, W / eps, U, V
    if name == "special_trig_zero":
        return site.var, eps * W, U, V
    if name == "twisted_trigonometric":
        return site.var**2, W, U, V
    if name == "twisted_rational":
        R = np.array([[1, 0], [1 / (gg["alpha_tilde"] * eps), 1]])
        Ri = np.linalg.inv(R)
        f = 1j * gp.h * eps**2 / gp.hprime
        w = (gp.hprime - 1j * gp.h) / (1j * eps)
        return site.var**2, w * R @ W @ Ri, f * R @ U @ Ri, f * V
    raise ParameterError(f"{name} has no displayed algebra rescaling")


# degeneration graph ------------------------------------------------------------

POINTS = ("o+", "o-", "*+", "*-")

PARTITIONS: dict[str, tuple[frozenset, ...]] = {
    "T(h)": (frozenset({"o+"}), frozenset({"o-"}), frozenset({"*+"}), frozenset({"*-"})),
    "T(0)": (frozenset({"o+"}), frozenset({"o-"}), frozenset({"*+", "*-"})),
    "T(inf)": (frozenset({"o+"}), frozenset({"*-"}), frozenset({"o-", "*+"})),
    "R(full)": (frozenset({"o+", "o-"}), frozenset({"*+"}), frozenset({"*-"})),
    "T(twist)": (frozenset({"o+", "*+"}), frozenset({"o-", "*-"})),
    "R(def)": (frozenset({"o+", "o-"}), frozenset({"*+", "*-"})),
    "T(conv)": (frozenset({"o+", "*+", "*-"}), frozenset({"o-"})),
    "R(twist)": (frozenset({"*+"}), frozenset({"o+", "o-", "*-"})),
    "R(conv)": (frozenset(POINTS),),
}

NODE_FAMILY = {
    "T(h)": None, "T(0)": "special_trig_zero", "T(inf)": "special_trig_inf", "R(full)": "full_rational",
    "T(twist)": "twisted_trigonometric", "R(def)": "special_rational", "T(conv)": "conventional_trigonometric",
    "R(twist)": "twisted_rational", "R(conv)": "conventional_rational",
}

# covering arrows of the figure
ARROWS = {
    ("T(h)", "T(0)"), ("T(h)", "T(inf)"), ("T(h)", "R(full)"),
    ("T(0)", "R(def)"), ("T(0)", "T(conv)"),
    ("T(inf)", "T(twist)"), ("T(inf)", "R(twist)"), ("T(inf)", "T(conv)"),
    ("R(full)", "R(def)"), ("R(full)", "R(twist)"),
    ("T(twist)", "R(conv)"), ("T(conv)", "R(conv)"), ("R(twist)", "R(conv)"), ("R(def)", "R(conv)"),
}


def _relabelings():
    """Trivial permutations: o+ <-> o- and *+ <-> *- independently."""
    out = []
    for so, ss in itertools.product((False, True), repeat=2):
        m = {"o+": "o-" if so else "o+", "o-": "o+" if so else "o-",
             "*+": "*-" if ss else "*+", "*-": "*+" if ss else "*-"}
        out.append(m)
    return out


def _relabel(part, m):
    return frozenset(frozenset(m[p] for p in block) for block in part)


def _coarsens(fine, coarse) -> bool:
    """Every block of ``fine`` lies inside a block of ``coarse``."""
    return all(any(b <= c for c in coarse) for b in fine)


def refines_to(src: str, dst: str) -> bool:
    """Strict limit relation: some relabeling of dst is a strict coarsening of src."""
    fine = frozenset(PARTITIONS[src])
    for m in _relabelings():
        coarse = _relabel(PARTITIONS[dst], m)
        if coarse != fine and _coarsens(fine, coarse):
            return True
    return False


@dataclass(frozen=True)
class DegenerationGraph:
    nodes: tuple[str, ...]
    edges: frozenset
    covering: frozenset
    special_point_grouping: dict

    def successors(self, node: str) -> set[str]:
        return {b for a, b in self.edges if a == node}

    def is_rational(self, node: str) -> bool:
        return any({"o+", "o-"} <= blk for blk in self.special_point_grouping[node])


def degeneration_graph() -> DegenerationGraph:
    nodes = tuple(PARTITIONS)
    edges = frozenset((a, b) for a in nodes for b in nodes if a != b and refines_to(a, b))
    covering = frozenset((a, b) for a, b in edges
                         if not any((a, c) in edges and (c, b) in edges for c in nodes))
    return DegenerationGraph(nodes, edges, covering, dict(PARTITIONS))
