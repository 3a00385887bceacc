"""The deformed gl(2|2) loop algebra and its fundamental evaluation representation.

Generators are ``R^{ab}``, ``L^{ab}`` (symmetric, stored with ``a <= b``),
``Q^{ab}``, ``S^{ab}`` (first index fermionic, second bosonic), the central
element ``A`` and the derivation-like ``B``, each at an integer loop level.
The affine generators ``C`` and ``D`` appear only through :func:`cocycle` and
:func:`derivation_check`.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .params import (GlobalParams, Kinematics, PoleError, POLE_THRESHOLD, UV_matrices,
                     W_matrix, derive_kinematics, preferred_gamma, selfdual_points)
from .superlinalg import EVEN, ODD, V4, GradedOperator, max_abs, supercommutator

KINDS = ("R", "L", "Q", "S", "A", "B", "C", "D")

# epsilon^{12} = +1, indices 1, 2
EPS = {(1, 1): 0, (1, 2): 1, (2, 1): -1, (2, 2): 0}


def eps(i: int, j: int) -> int:
    return EPS[(i, j)]


class AlgebraError(ValueError):
    pass


@dataclass(frozen=True, order=True)
class Generator:
    """Basis element of gl(2|2) (no loop level)."""

    kind: str
    i: int = 0
    j: int = 0

    def __post_init__(self):
        if self.kind not in KINDS:
            raise AlgebraError(f"unknown generator kind {self.kind!r}")
        if self.kind in ("R", "L") and self.i > self.j:
            a, b = self.j, self.i
            object.__setattr__(self, "i", a)
            object.__setattr__(self, "j", b)

    @property
    def parity(self) -> int:
        return ODD if self.kind in ("Q", "S") else EVEN

    def __str__(self):
        if self.kind in ("A", "B", "C", "D"):
            return self.kind
        return f"{self.kind}{self.i}{self.j}"


def basis() -> list[Generator]:
    """The 16 generators of gl(2|2) in a fixed order."""
    out = [Generator("R", 1, 1), Generator("R", 1, 2), Generator("R", 2, 2),
           Generator("L", 1, 1), Generator("L", 1, 2), Generator("L", 2, 2)]
    out += [Generator("Q", a, b) for a in (1, 2) for b in (1, 2)]
    out += [Generator("S", a, b) for a in (1, 2) for b in (1, 2)]
    out += [Generator("A"), Generator("B")]
    return out


BASIS = basis()
INDEX = {g: n for n, g in enumerate(BASIS)}


@dataclass(frozen=True)
class GeneratorTerm:
    gen: Generator
    level: int = 0
    coefficient: complex = 1.0

    @property
    def kind(self) -> str:
        return self.gen.kind

    @property
    def parity(self) -> int:
        return self.gen.parity


def term(kind: str, i: int = 0, j: int = 0, level: int = 0, coefficient: complex = 1.0) -> GeneratorTerm:
    if kind in ("C", "D"):
        level = 0
    return GeneratorTerm(Generator(kind, i, j), level, coefficient)


class AlgebraElement:
    """Finite linear combination of level-graded generators."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        acc: dict[tuple[Generator, int], complex] = {}
        for key, c in (terms or {}).items():
            if c != 0:
                acc[key] = acc.get(key, 0) + c
        self.terms = {k: v for k, v in acc.items() if v != 0}

    @classmethod
    def of(cls, t: GeneratorTerm) -> "AlgebraElement":
        return cls({(t.gen, t.level): complex(t.coefficient)})

    def __add__(self, other: "AlgebraElement") -> "AlgebraElement":
        out = dict(self.terms)
        for k, v in other.terms.items():
            out[k] = out.get(k, 0) + v
        return AlgebraElement(out)

    def __sub__(self, other: "AlgebraElement") -> "AlgebraElement":
        return self + (-1) * other

    def __mul__(self, c) -> "AlgebraElement":
        return AlgebraElement({k: c * v for k, v in self.terms.items()})

    __rmul__ = __mul__

    def max_abs(self) -> float:
        return max((abs(v) for v in self.terms.values()), default=0.0)

    def shift(self, n: int) -> "AlgebraElement":
        return AlgebraElement({(g, lvl + n): v for (g, lvl), v in self.terms.items()})

    def __iter__(self):
        for (g, lvl), c in sorted(self.terms.items(), key=lambda kv: (INDEX.get(kv[0][0], 99), kv[0][1])):
            yield GeneratorTerm(g, lvl, c)

    def __repr__(self):
        parts = [f"({c:.6g}){g}_{lvl}" for (g, lvl), c in self.terms.items()]
        return " + ".join(parts) if parts else "0"


# structure constants ------------------------------------------------------

def _base_bracket(x: Generator, y: Generator, gp: GlobalParams) -> list[tuple[complex, Generator, int]]:
    """Bracket of level-0 generators as ``[(coef, gen, level_shift)]``."""
    kx, ky = x.kind, y.kind
    hinv = 1 / gp.h
    al = gp.alpha
    out: list[tuple[complex, Generator, int]] = []

    def sym(kind, a, b):
        return Generator(kind, a, b)

    # R and L: two sl(2)'s, R^{ab} = R^{ba}
    if kx == ky and kx in ("R", "L"):
        a, b, c, d = x.i, x.j, y.i, y.j
        return [(eps(b, c), sym(kx, a, d), 0), (eps(a, d), sym(kx, b, c), 0)]
    if kx == "R" and ky in ("Q", "S"):
        a, b, g_, d = x.i, x.j, y.i, y.j
        return [(0.5 * eps(b, d), Generator(ky, g_, a), 0), (0.5 * eps(a, d), Generator(ky, g_, b), 0)]
    if kx == "L" and ky in ("Q", "S"):
        a, b, g_, d = x.i, x.j, y.i, y.j
        return [(0.5 * eps(b, g_), Generator(ky, a, d), 0), (0.5 * eps(a, g_), Generator(ky, b, d), 0)]
    if ky in ("R", "L") and kx in ("Q", "S"):
        return [(-c, g, s) for c, g, s in _base_bracket(y, x, gp)]
    if kx in ("Q", "S") and ky in ("Q", "S"):
        a, b, g_, d = x.i, x.j, y.i, y.j
        e2 = eps(a, g_) * eps(b, d)
        A = Generator("A")
        if kx == "Q" and ky == "Q":
            return [(2 * al * e2, A, 0)]
        if kx == "S" and ky == "S":
            return [(-2 / al * e2, A, 1)]
        if kx == "S":  # {S, Q} = {Q, S}
            return _base_bracket(y, x, gp)
        return [(-eps(a, g_), Generator("R", b, d), 0),
                (eps(b, d), Generator("L", a, g_), 0),
                (-e2 * hinv, A, 1), (e2 * hinv, A, 0)]
    if kx == "B" and ky in ("Q", "S"):
        a, b = y.i, y.j
        Qg, Sg = Generator("Q", a, b), Generator("S", a, b)
        if ky == "Q":
            return [(hinv, Qg, 1), (-hinv, Qg, 0), (2 * al, Sg, 0)]
        return [(2 / al, Qg, 1), (-hinv, Sg, 1), (hinv, Sg, 0)]
    if ky == "B" and kx in ("Q", "S"):
        return [(-c, g, s) for c, g, s in _base_bracket(y, x, gp)]
    return []


def _canon(gen: Generator) -> Generator:
    return Generator(gen.kind, gen.i, gen.j)


def bracket(s: GeneratorTerm, t: GeneratorTerm, gp: GlobalParams) -> AlgebraElement:
    """Loop-level Lie superbracket ``[s, t]`` (graded)."""
    if s.kind in ("C", "D") or t.kind in ("C", "D"):
        raise AlgebraError("bracket covers the loop part only; use cocycle/derivation_check")
    out: dict[tuple[Generator, int], complex] = {}
    base = s.level + t.level
    cst = complex(s.coefficient) * complex(t.coefficient)
    for c, g, shift in _base_bracket(s.gen, t.gen, gp):
        if c == 0:
            continue
        key = (_canon(g), base + shift)
        out[key] = out.get(key, 0) + cst * c
    return AlgebraElement(out)


def bracket_elements(x: AlgebraElement, y: AlgebraElement, gp: GlobalParams) -> AlgebraElement:
    out = AlgebraElement()
    for s in x:
        for t in y:
            out = out + bracket(s, t, gp)
    return out


def structure_tensor(gp: GlobalParams) -> np.ndarray:
    """``c[i, j, k, s]`` with ``[X_i,m, X_j,n] = sum c[i,j,k,s] X_k,m+n+s``, s in {0, 1}."""
    n = len(BASIS)
    c = np.zeros((n, n, n, 2), dtype=complex)
    for i, x in enumerate(BASIS):
        for j, y in enumerate(BASIS):
            for t in bracket(GeneratorTerm(x), GeneratorTerm(y), gp):
                if not 0 <= t.level <= 1:
                    raise AlgebraError("level shift outside {0, 1}")
                c[i, j, INDEX[t.gen], t.level] += t.coefficient
    return c


PARITY = np.array([g.parity for g in BASIS])


def jacobi_tensor(gp: GlobalParams) -> np.ndarray:
    """Graded Jacobiator of every basis triple, level independent part.

    ``J[i, j, k, o, S]`` is the coefficient of ``X_o`` at level
    ``m + n + p + S`` in
    ``[X_i,[X_j,X_k]] - [[X_i,X_j],X_k] - (-1)^{|i||j|} [X_j,[X_i,X_k]]``.
    """
    c = structure_tensor(gp)
    n = len(BASIS)
    J = np.zeros((n, n, n, n, 3), dtype=complex)
    sign = np.where(np.outer(PARITY, PARITY) % 2 == 1, -1.0, 1.0)
    for s1 in range(2):
        for s2 in range(2):
            t1 = np.einsum("jkl,ilo->ijko", c[:, :, :, s1], c[:, :, :, s2])
            t2 = np.einsum("ijl,lko->ijko", c[:, :, :, s1], c[:, :, :, s2])
            t3 = np.einsum("ikl,jlo->ijko", c[:, :, :, s1], c[:, :, :, s2])
            J[..., s1 + s2] += t1 - t2 - sign[:, :, None, None] * t3
    return J


def jacobiator(x: GeneratorTerm, y: GeneratorTerm, z: GeneratorTerm, gp: GlobalParams) -> AlgebraElement:
    """Graded Jacobiator evaluated directly through :func:`bracket`."""
    X, Y, Z = (AlgebraElement.of(t) for t in (x, y, z))
    sign = -1 if x.parity * y.parity else 1
    return (bracket_elements(X, bracket_elements(Y, Z, gp), gp)
            - bracket_elements(bracket_elements(X, Y, gp), Z, gp)
            - sign * bracket_elements(Y, bracket_elements(X, Z, gp), gp))


def jacobi_residual(level_bound: int, gp: GlobalParams, samples: int = 0,
                    rng: np.random.Generator | None = None) -> float:
    """Max coefficient of the graded Jacobiator over all basis triples with
    levels in ``[-level_bound, level_bound]``.

    Every level triple is placed explicitly; additionally ``samples`` random
    triples are evaluated through :func:`bracket` and compared with the
    tensor evaluation.
    """
    if level_bound < 1:
        raise AlgebraError("level_bound must be >= 1")
    J = jacobi_tensor(gp)
    levels = range(-level_bound, level_bound + 1)
    worst = 0.0
    n = len(BASIS)
    lo = -3 * level_bound
    width = 6 * level_bound + 3
    for m, nn, p in itertools.product(levels, repeat=3):
        placed = np.zeros((n, n, n, n, width), dtype=complex)
        base = m + nn + p - lo
        placed[..., base:base + 3] = J
        worst = max(worst, float(np.max(np.abs(placed))))
    if samples:
        rng = rng or np.random.default_rng(0)
        for _ in range(samples):
            i, j, k = rng.integers(0, n, size=3)
            m, nn, p = rng.integers(-level_bound, level_bound + 1, size=3)
            direct = jacobiator(GeneratorTerm(BASIS[i], int(m)), GeneratorTerm(BASIS[j], int(nn)),
                                GeneratorTerm(BASIS[k], int(p)), gp)
            expected = {(BASIS[o], int(m + nn + p + S)): J[i, j, k, o, S]
                        for o in range(n) for S in range(3) if J[i, j, k, o, S] != 0}
            diff = AlgebraElement(direct.terms) - AlgebraElement(expected)
            worst = max(worst, diff.max_abs(), direct.max_abs())
    return worst


# representation -----------------------------------------------------------

def represent_base(gen: Generator, kin: Kinematics) -> GradedOperator:
    """4x4 action of a level-0 generator on (phi^1, phi^2, psi^1, psi^2)."""
    m = np.zeros((4, 4), dtype=complex)
    phi = {1: 0, 2: 1}
    psi = {1: 2, 2: 3}
    k = gen.kind
    if k == "R":
        a, b = gen.i, gen.j
        for c in (1, 2):
            m[phi[a], phi[c]] += 0.5 * eps(b, c)
            m[phi[b], phi[c]] += 0.5 * eps(a, c)
    elif k == "L":
        a, b = gen.i, gen.j
        for c in (1, 2):
            m[psi[a], psi[c]] += 0.5 * eps(b, c)
            m[psi[b], psi[c]] += 0.5 * eps(a, c)
    elif k == "Q":
        al, b = gen.i, gen.j
        for c in (1, 2):
            m[psi[al], phi[c]] += kin.a * eps(b, c)
            m[phi[b], psi[c]] += -kin.b * eps(al, c)
    elif k == "S":
        al, b = gen.i, gen.j
        for c in (1, 2):
            m[psi[al], phi[c]] += -kin.c * eps(b, c)
            m[phi[b], psi[c]] += kin.d * eps(al, c)
    elif k == "A":
        m = 0.5 * kin.q * np.eye(4)
    elif k == "B":
        m = 0.5 / kin.q * np.diag([-1, -1, 1, 1]).astype(complex)
    else:
        raise AlgebraError(f"{k} is not represented in the evaluation representation (C ~ 0)")
    return GradedOperator.on(V4, m, gen.parity)


def represent(t: GeneratorTerm, kin: Kinematics) -> GradedOperator:
    """``rho(J_n) = z^n rho(J)`` times the term coefficient."""
    return represent_base(t.gen, kin) * (complex(t.coefficient) * kin.z ** t.level)


def represent_element(x: AlgebraElement, kin: Kinematics) -> GradedOperator:
    out = GradedOperator.zero(V4)
    for t in x:
        op = represent(t, kin)
        out = GradedOperator.on(V4, out.mat + op.mat)
    return out


def homomorphism_residual(kin: Kinematics, levels: range = range(0, 1),
                          pairs: list[tuple[GeneratorTerm, GeneratorTerm]] | None = None) -> float:
    """Max of ``|[rho(s), rho(t)] - rho([s, t])|`` over generator pairs."""
    gp = kin.gp
    if pairs is None:
        pairs = [(GeneratorTerm(x, m), GeneratorTerm(y, n))
                 for x in BASIS for y in BASIS for m in levels for n in levels]
    worst = 0.0
    for s, t in pairs:
        lhs = supercommutator(represent(s, kin), represent(t, kin))
        rhs = represent_element(bracket(s, t, gp), kin)
        worst = max(worst, max_abs(lhs.mat - rhs.mat))
    return worst


# affine extension ---------------------------------------------------------

def _dxdz_data(gp: GlobalParams, x: complex, gamma_of_x):
    """Analytic x-derivatives of z, q and T for gamma = gamma_of_x(x) (value, log-derivative)."""
    h, hp, al = gp.h, gp.hprime, gp.alpha
    P = hp * x - 1j * h
    Q = h * x + 1j * hp
    PQ = P * Q
    dPQ = hp * Q + h * P
    s = x * x - 1
    z = 1j * x / PQ
    dz = 1j / PQ - 1j * x * dPQ / PQ**2
    q = -PQ / (hp * s)
    dq = -dPQ / (hp * s) + PQ * 2 * x / (hp * s * s)
    gamma, dlog_gamma = gamma_of_x(x)
    dgamma = gamma * dlog_gamma
    a, da = gamma, dgamma
    b = al * q / gamma
    db = al * (dq * gamma - q * dgamma) / gamma**2
    c = 1j * gamma / (al * P)
    dc = 1j * (dgamma * P - gamma * hp) / (al * P * P)
    D0 = x * P / (hp * s)
    dD0 = ((P + x * hp) * s - x * P * 2 * x) / (hp * s * s)
    d = D0 / gamma
    dd = (dD0 * gamma - D0 * dgamma) / gamma**2
    T = np.array([[a, -b], [-c, d]], dtype=complex)
    dT = np.array([[da, -db], [-dc, dd]], dtype=complex)
    return z, dz, q, dq, T, dT


def preferred_gamma_family(gp: GlobalParams, kin: Kinematics):
    """gamma(x) proportional to the preferred normalisation, equal to kin.gamma at kin.x."""
    scale = kin.gamma / preferred_gamma(gp, kin.x)

    def gamma_of_x(x):
        g = scale * preferred_gamma(gp, x)
        hp, h = gp.hprime, gp.h
        dlog = hp / (hp * x - 1j * h) - x / (x * x - 1)
        return g, dlog

    return gamma_of_x


def derivation_check(kin: Kinematics, gp: GlobalParams | None = None) -> dict[str, float]:
    """Residuals of the affine derivation relations at ``kin``.

    (i)   ``z dT/dz T^-1 - U`` along the preferred gamma family through kin;
    (ii)  ``(z/q) dq/dz - V``;
    (iii) ``z dW/dz - [U, W] + V W``.
    Also reports the gauge function ``f`` for constant gamma.
    """
    gp = gp or kin.gp
    z, dz, q, dq, T, dT = _dxdz_data(gp, kin.x, preferred_gamma_family(gp, kin))
    if abs(dz) < POLE_THRESHOLD:
        raise PoleError("dz/dx vanishes at this x", "x = x*")
    U, V = UV_matrices(gp, z)
    W = W_matrix(gp, z)
    zdT = z * dT / dz
    res_i = float(np.max(np.abs(zdT @ np.linalg.inv(T) - U)))
    res_ii = abs(z / q * dq / dz - V)
    zdW = z * np.array([[1 / gp.h, 0], [2 / gp.alpha, -1 / gp.h]])
    res_iii = float(np.max(np.abs(zdW - (U @ W - W @ U) + V * W)))
    # constant gamma: z dT/dz T^-1 = U + f W
    _, _, _, _, Tc, dTc = _dxdz_data(gp, kin.x, lambda x: (kin.gamma, 0.0))
    G = z * dTc / dz @ np.linalg.inv(Tc) - U
    f = G[0, 1] / W[0, 1]
    return {"zdT/dz T^-1 - U": res_i, "(z/q) dq/dz - V": res_ii,
            "z dW/dz - [U,W] + VW": res_iii, "f_constant_gamma": complex(f),
            "gauge_residual_constant_gamma": float(np.max(np.abs(G - f * W)))}


def analytic_derivatives(gp: GlobalParams, kin: Kinematics, preferred: bool = True):
    """``(dz/dx, dq/dx, dT/dx)`` at kin.x (gamma along the preferred family or constant)."""
    fam = preferred_gamma_family(gp, kin) if preferred else (lambda x: (kin.gamma, 0.0))
    z, dz, q, dq, T, dT = _dxdz_data(gp, kin.x, fam)
    return dz, dq, dT


# central extension --------------------------------------------------------

Laurent = dict  # power -> coefficient


def _lmul(f: Laurent, g: Laurent) -> Laurent:
    out: Laurent = {}
    for i, a in f.items():
        for j, b in g.items():
            out[i + j] = out.get(i + j, 0) + a * b
    return out


def _lderiv(f: Laurent) -> Laurent:
    return {n - 1: n * c for n, c in f.items() if n != 0}


def _res(f: Laurent) -> complex:
    """Residue at 0 of f(z) dz."""
    return complex(f.get(-1, 0))


def uv_taylor(gp: GlobalParams, order: int) -> tuple[np.ndarray, np.ndarray]:
    """Taylor coefficients about z = 0 of U(z) (shape (order+1, 2, 2)) and V(z).

    ``U = z / (z^2 + beta z + 1) * U0`` with ``beta = 4h^2 - 2``; the series
    converges for ``|z| < min |z*_pm|``.
    """
    h, al = gp.h, gp.alpha
    beta = 4 * h * h - 2
    # g(z) = 1 / (1 + beta z + z^2) = sum g_n z^n
    gser = np.zeros(order + 2, dtype=complex)
    gser[0] = 1
    for n in range(1, order + 2):
        gser[n] = -beta * gser[n - 1] - (gser[n - 2] if n >= 2 else 0)
    zg = np.concatenate([[0], gser[:order]])  # z * g(z)
    U0 = np.array([[-h * h, h * al], [-h / al, h * h]], dtype=complex)
    U = zg[:, None, None] * U0[None]
    # V = -z (z - 1 + 2h^2) g(z)
    c1 = 2 * h * h - 1
    vz = np.zeros(order + 1, dtype=complex)
    for n in range(order + 1):
        vz[n] = -(c1 * zg[n] + (zg[n - 1] if n >= 1 else 0))
    return U, vz


def contour_radius(gp: GlobalParams, fraction: float = 0.5) -> float:
    zp, zm, _, _ = selfdual_points(gp)
    bound = min(abs(zp), abs(zm), 1.0)
    if bound < POLE_THRESHOLD:
        raise PoleError("self-dual point at the origin, no admissible contour", "z*")
    return fraction * bound


def _contour_int(f: Laurent, g: Laurent, weight: np.ndarray, with_dg: bool, sign_w: float) -> complex:
    """Res_0 [ f dg + sign_w * f g w(z) dz/z ] with w given by Taylor coefficients."""
    total = 0j
    if with_dg:
        total += _res(_lmul(f, _lderiv(g)))
    if sign_w != 0:
        fg = _lmul(f, g)
        # coefficient of z^0 in fg * w
        for n, c in fg.items():
            if -n >= 0 and -n < len(weight):
                total += sign_w * c * weight[-n]
    return total


def cocycle(f: Laurent, s: GeneratorTerm, g: Laurent, t: GeneratorTerm, gp: GlobalParams) -> complex:
    """Coefficient of the central charge C in ``[f(z) s, g(z) t]``.

    Contour integrals are residues at z = 0 on a circle inside both self-dual
    points; U and V are replaced by their Taylor series there.
    """
    deg = max([-n for n in list(f) + list(g)] + [0]) * 2 + 4
    U, V = uv_taylor(gp, deg)
    x, y = s.gen, t.gen
    kx, ky = x.kind, y.kind
    if kx == ky and kx in ("R", "L"):
        a, b, c, d = x.i, x.j, y.i, y.j
        sym = eps(a, c) * eps(b, d) + eps(a, d) * eps(b, c)
        sign = -0.5 if kx == "R" else 0.5
        return sign * sym * _contour_int(f, g, V, True, 0)
    if kx in ("Q", "S") and ky in ("Q", "S"):
        if kx == "S" and ky == "Q":
            return cocycle(g, t, f, s, gp)
        e2 = eps(x.i, y.i) * eps(x.j, y.j)
        if kx == "Q" and ky == "Q":
            return e2 * _contour_int(f, g, U[:, 0, 1], False, 1.0)
        if kx == "S" and ky == "S":
            return e2 * _contour_int(f, g, U[:, 1, 0], False, -1.0)
        return e2 * _contour_int(f, g, U[:, 0, 0], True, -1.0)
    if kx == "A" and ky == "B":
        return -_contour_int(f, g, V, True, -1.0)
    if kx == "B" and ky == "A":
        return -cocycle(g, t, f, s, gp)
    return 0j


# Serre-Chevalley identification ---------------------------------------------

CARTAN = np.array([[2, -1, 0], [-1, 0, 1], [0, 1, -2]])


def chevalley_generators(kin: Kinematics) -> dict[str, GradedOperator]:
    rep = lambda k, i=0, j=0: represent_base(Generator(k, i, j), kin)
    h = kin.gp.h
    H1 = 2 * rep("R", 1, 2)
    H3 = -2 * rep("L", 1, 2)
    H2 = GradedOperator.on(V4, (-(kin.z - 1) / h * rep("A")).mat - 0.5 * H1.mat - 0.5 * H3.mat, EVEN)
    return {
        "H1": H1, "H2": H2, "H3": H3,
        "E1": -rep("R", 2, 2), "F1": rep("R", 1, 1),
        "E2": rep("Q", 1, 1), "F2": -rep("S", 2, 2),
        "E3": -rep("L", 2, 2), "F3": rep("L", 1, 1),
    }


def serre_chevalley_check(kin: Kinematics) -> dict[str, float]:
    g = chevalley_generators(kin)
    out: dict[str, float] = {}
    for j in range(1, 4):
        for k in range(1, 4):
            H, E, F = g[f"H{j}"], g[f"E{k}"], g[f"F{k}"]
            A = CARTAN[j - 1, k - 1]
            out[f"[H{j},E{k}]-A{j}{k}E{k}"] = max_abs(supercommutator(H, E).mat - A * E.mat)
            out[f"[H{j},F{k}]+A{j}{k}F{k}"] = max_abs(supercommutator(H, F).mat + A * F.mat)
    out["[E1,F1]-H1"] = max_abs(supercommutator(g["E1"], g["F1"]).mat - g["H1"].mat)
    out["{E2,F2}+H2"] = max_abs(supercommutator(g["E2"], g["F2"]).mat + g["H2"].mat)
    out["[E3,F3]+H3"] = max_abs(supercommutator(g["E3"], g["F3"]).mat + g["H3"].mat)
    out["[E1,E3]"] = max_abs(supercommutator(g["E1"], g["E3"]).mat)
    out["[F1,F3]"] = max_abs(supercommutator(g["F1"], g["F3"]).mat)
    out["E2E2"] = max_abs(g["E2"].mat @ g["E2"].mat)
    out["F2F2"] = max_abs(g["F2"].mat @ g["F2"].mat)
    for j in range(1, 4):
        for k in range(1, 4):
            if j != k:
                out[f"[E{j},F{k}]"] = max_abs(supercommutator(g[f"E{j}"], g[f"F{k}"]).mat)
    return out
