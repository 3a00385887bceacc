"""Z2-graded linear algebra on small dense complex matrices.

Conventions
-----------
* A graded operator acts on column vectors; ``mat[i, j]`` maps basis vector
  ``j`` of the input space to basis vector ``i`` of the output space.
* Tensor products use lexicographic basis order (first factor major) and the
  Koszul rule ``(A (x) B)(v (x) w) = (-1)^{|B||v|} (A v) (x) (B w)``.
  Inhomogeneous factors are handled entrywise, which is the same rule applied
  to each homogeneous component.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property

import numpy as np

EVEN = 0
ODD = 1

RTOL = 1e-9
ATOL = 1e-12


class GradingError(ValueError):
    """Raised for dimension or parity mismatches between operators."""


@dataclass(frozen=True)
class GradedSpace:
    """Finite dimensional super vector space given by the parities of its basis."""

    parities: tuple[int, ...]

    def __post_init__(self):
        if not self.parities:
            raise GradingError("a graded space needs at least one basis vector")
        if any(p not in (EVEN, ODD) for p in self.parities):
            raise GradingError(f"parities must be 0 or 1, got {self.parities}")

    @property
    def dim(self) -> int:
        return len(self.parities)

    @cached_property
    def parity_array(self) -> np.ndarray:
        return np.array(self.parities, dtype=np.int8)

    def tensor(self, other: "GradedSpace") -> "GradedSpace":
        return GradedSpace(tuple((p + q) % 2 for p in self.parities for q in other.parities))

    def power(self, n: int) -> "GradedSpace":
        out = self
        for _ in range(n - 1):
            out = out.tensor(self)
        return out


#: The fundamental space spanned by (phi^1, phi^2, psi^1, psi^2).
V4 = GradedSpace((EVEN, EVEN, ODD, ODD))


@dataclass(frozen=True, eq=False)
class GradedOperator:
    """Dense complex matrix between graded spaces.

    ``parity`` is the degree of the operator, or ``None`` if it is not known
    to be homogeneous.  Use :meth:`homogeneous_parts` to split a general
    operator.
    """

    mat: np.ndarray
    space_out: GradedSpace
    space_in: GradedSpace
    parity: int | None = None

    def __post_init__(self):
        mat = np.asarray(self.mat, dtype=complex)
        if mat.shape != (self.space_out.dim, self.space_in.dim):
            raise GradingError(
                f"matrix shape {mat.shape} does not match spaces "
                f"({self.space_out.dim}, {self.space_in.dim})"
            )
        mat.setflags(write=False)
        object.__setattr__(self, "mat", mat)

    @classmethod
    def on(cls, space: GradedSpace, mat, parity: int | None = None) -> "GradedOperator":
        return cls(np.asarray(mat, dtype=complex), space, space, parity)

    @classmethod
    def identity(cls, space: GradedSpace) -> "GradedOperator":
        return cls.on(space, np.eye(space.dim), EVEN)

    @classmethod
    def zero(cls, space: GradedSpace) -> "GradedOperator":
        return cls.on(space, np.zeros((space.dim, space.dim)), EVEN)

    @property
    def shape(self):
        return self.mat.shape

    def _entry_parity(self) -> np.ndarray:
        return (self.space_out.parity_array[:, None] + self.space_in.parity_array[None, :]) % 2

    def homogeneous_parts(self) -> tuple["GradedOperator", "GradedOperator"]:
        """Return the (even, odd) components."""
        ep = self._entry_parity()
        even = np.where(ep == 0, self.mat, 0)
        odd = np.where(ep == 1, self.mat, 0)
        return (
            GradedOperator(even, self.space_out, self.space_in, EVEN),
            GradedOperator(odd, self.space_out, self.space_in, ODD),
        )

    def detect_parity(self, atol: float = 0.0) -> int | None:
        """Degree of the operator if it is homogeneous (zero counts as even)."""
        ep = self._entry_parity()
        nz = np.abs(self.mat) > atol
        if not nz.any():
            return EVEN
        degrees = set(ep[nz].tolist())
        return degrees.pop() if len(degrees) == 1 else None

    def is_homogeneous(self, atol: float = 0.0) -> bool:
        if self.parity is None:
            return self.detect_parity(atol) is not None
        ep = self._entry_parity()
        return bool(np.all(np.abs(self.mat[ep != self.parity]) <= atol))

    # arithmetic -----------------------------------------------------------

    def _like(self, mat, parity) -> "GradedOperator":
        return GradedOperator(mat, self.space_out, self.space_in, parity)

    def _check_same(self, other: "GradedOperator"):
        if self.space_in != other.space_in or self.space_out != other.space_out:
            raise GradingError("operators act between different graded spaces")

    def __add__(self, other):
        if isinstance(other, GradedOperator):
            self._check_same(other)
            parity = self.parity if self.parity == other.parity else None
            return self._like(self.mat + other.mat, parity)
        return NotImplemented

    def __sub__(self, other):
        if isinstance(other, GradedOperator):
            self._check_same(other)
            parity = self.parity if self.parity == other.parity else None
            return self._like(self.mat - other.mat, parity)
        return NotImplemented

    def __neg__(self):
        return self._like(-self.mat, self.parity)

    def __mul__(self, scalar):
        if isinstance(scalar, GradedOperator):
            return NotImplemented
        return self._like(complex(scalar) * self.mat, self.parity)

    __rmul__ = __mul__

    def __truediv__(self, scalar):
        return self._like(self.mat / complex(scalar), self.parity)

    def __matmul__(self, other: "GradedOperator") -> "GradedOperator":
        if self.space_in != other.space_out:
            raise GradingError("cannot compose: inner spaces differ")
        parity = None
        if self.parity is not None and other.parity is not None:
            parity = (self.parity + other.parity) % 2
        return GradedOperator(self.mat @ other.mat, self.space_out, other.space_in, parity)

    def __repr__(self):
        return f"GradedOperator(dim={self.shape}, parity={self.parity})"


def kron_graded(A: GradedOperator, B: GradedOperator) -> GradedOperator:
    """Graded tensor product ``A (x) B`` with the Koszul sign rule."""
    pa_in = A.space_in.parity_array
    pb = (B.space_out.parity_array[:, None] + B.space_in.parity_array[None, :]) % 2
    # sign[(j), (k, l)] = (-1)^{|B_kl| |j|}
    sign = np.where((pa_in[:, None, None] * pb[None, :, :]) % 2 == 1, -1.0, 1.0)
    da_out, da_in = A.mat.shape
    db_out, db_in = B.mat.shape
    # T[i, k, j, l] = A[i, j] * B[k, l] * sign[j, k, l]
    T = np.einsum("ij,kl,jkl->ikjl", A.mat, B.mat, sign)
    mat = T.reshape(da_out * db_out, da_in * db_in)
    parity = None
    if A.parity is not None and B.parity is not None:
        parity = (A.parity + B.parity) % 2
    return GradedOperator(mat, A.space_out.tensor(B.space_out), A.space_in.tensor(B.space_in), parity)


def kron_chain(*ops: GradedOperator) -> GradedOperator:
    out = ops[0]
    for op in ops[1:]:
        out = kron_graded(out, op)
    return out


def graded_permutation(spaces: tuple[GradedSpace, ...], perm: tuple[int, ...]) -> GradedOperator:
    """Operator reordering tensor legs: ``v_0 (x) ... (x) v_{n-1}`` to
    ``v_{perm[0]} (x) ... (x) v_{perm[n-1]}`` with the Koszul sign of moving
    odd vectors past each other."""
    n = len(spaces)
    if sorted(perm) != list(range(n)):
        raise GradingError(f"{perm} is not a permutation of {n} legs")
    dims = [s.dim for s in spaces]
    out_spaces = [spaces[p] for p in perm]
    out_dims = [s.dim for s in out_spaces]
    total = int(np.prod(dims))
    mat = np.zeros((total, total))
    for idx in itertools.product(*(range(d) for d in dims)):
        par = [spaces[leg].parities[i] for leg, i in enumerate(idx)]
        sign = 1
        # inversions of the permutation among odd entries
        for a in range(n):
            for b in range(a + 1, n):
                if perm.index(a) > perm.index(b) and par[a] and par[b]:
                    sign = -sign
        new_idx = tuple(idx[p] for p in perm)
        col = np.ravel_multi_index(idx, dims)
        row = np.ravel_multi_index(new_idx, out_dims)
        mat[row, col] = sign
    sp_in = spaces[0]
    for s in spaces[1:]:
        sp_in = sp_in.tensor(s)
    sp_out = out_spaces[0]
    for s in out_spaces[1:]:
        sp_out = sp_out.tensor(s)
    return GradedOperator(mat, sp_out, sp_in, EVEN)


def graded_swap(V: GradedSpace, W: GradedSpace) -> GradedOperator:
    """``P (v (x) w) = (-1)^{|v||w|} w (x) v``."""
    return graded_permutation((V, W), (1, 0))


def embed_legs(op: GradedOperator, legs: tuple[int, int], n: int,
               space: GradedSpace = V4) -> GradedOperator:
    """Place a two-leg operator on legs ``(i, j)`` (1-based, i < j) of an
    ``n``-fold tensor power of ``space``; identity on all other legs."""
    i, j = legs
    if not (1 <= i < j <= n):
        raise GradingError(f"legs {legs} out of range for {n} legs")
    two = space.tensor(space)
    if op.space_in != two or op.space_out != two:
        raise GradingError("operator must act on space (x) space")
    rest = [leg for leg in range(1, n + 1) if leg not in (i, j)]
    full = op
    for _ in rest:
        full = kron_graded(full, GradedOperator.identity(space))
    order = (i - 1, j - 1, *[leg - 1 for leg in rest])
    spaces = (space,) * n
    # Pi maps the standard leg order to ``order``
    Pi = graded_permutation(spaces, order)
    Pinv = GradedOperator(Pi.mat.T, Pi.space_in, Pi.space_out, EVEN)
    return GradedOperator(Pinv.mat @ full.mat @ Pi.mat, full.space_in, full.space_in, op.parity)


def supercommutator(A: GradedOperator, B: GradedOperator, atol: float = 0.0) -> GradedOperator:
    """``AB - (-1)^{|A||B|} BA`` for homogeneous operators."""
    pa = A.parity if A.parity is not None else A.detect_parity(atol)
    pb = B.parity if B.parity is not None else B.detect_parity(atol)
    if pa is None or pb is None:
        raise GradingError("supercommutator needs homogeneous operands")
    sign = -1.0 if (pa * pb) % 2 else 1.0
    return GradedOperator(A.mat @ B.mat - sign * (B.mat @ A.mat), A.space_out, B.space_in, (pa + pb) % 2)


def commutator(A: GradedOperator, B: GradedOperator) -> GradedOperator:
    return GradedOperator(A.mat @ B.mat - B.mat @ A.mat, A.space_out, B.space_in)


def max_abs(x) -> float:
    """Max-abs entry norm used for every residual."""
    if isinstance(x, GradedOperator):
        x = x.mat
    arr = np.asarray(x)
    return float(np.max(np.abs(arr))) if arr.size else 0.0


def allclose(a, b, rtol: float = RTOL, atol: float = ATOL) -> bool:
    if isinstance(a, GradedOperator):
        a = a.mat
    if isinstance(b, GradedOperator):
        b = b.mat
    return bool(np.allclose(a, b, rtol=rtol, atol=atol))
