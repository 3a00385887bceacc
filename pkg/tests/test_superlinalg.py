import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gl22r.superlinalg import (EVEN, ODD, V4, GradedOperator, GradedSpace, GradingError, embed_legs,
                               graded_permutation, graded_swap, kron_chain, kron_graded, max_abs,
                               supercommutator)

V11 = GradedSpace((EVEN, ODD))


def op11(mat, parity=None):
    return GradedOperator.on(V11, np.array(mat, dtype=complex), parity)


def basis_vec(space, i):
    v = np.zeros(space.dim, dtype=complex)
    v[i] = 1
    return v


def test_koszul_sign_hand_case():
    # odd B acting past an odd vector picks up a minus sign
    sigma = op11([[0, 1], [1, 0]], ODD)
    one = GradedOperator.identity(V11)
    AB = kron_graded(one, sigma).mat
    odd_odd = np.kron(basis_vec(V11, 1), basis_vec(V11, 1))
    odd_even = np.kron(basis_vec(V11, 1), basis_vec(V11, 0))
    assert np.allclose(AB @ odd_odd, -odd_even)
    even_odd = np.kron(basis_vec(V11, 0), basis_vec(V11, 1))
    assert np.allclose(AB @ even_odd, np.kron(basis_vec(V11, 0), basis_vec(V11, 0)))


def test_graded_product_rule():
    # (A (x) B)(C (x) D) = (-1)^{|B||C|} AC (x) BD
    rng = np.random.default_rng(1)
    ops = []
    for parity in (ODD, ODD, ODD, EVEN):
        m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        even, odd = GradedOperator.on(V4, m).homogeneous_parts()
        ops.append(odd if parity else even)
    A, B, C, D = ops
    lhs = kron_graded(A, B).mat @ kron_graded(C, D).mat
    rhs = -kron_graded(A @ C, B @ D).mat
    assert max_abs(lhs - rhs) < 1e-12


def test_swap_is_involution_and_signs():
    P = graded_swap(V11, V11).mat
    assert np.allclose(P @ P, np.eye(4))
    # psi (x) psi -> - psi (x) psi
    v = np.kron(basis_vec(V11, 1), basis_vec(V11, 1))
    assert np.allclose(P @ v, -v)


def test_swap_conjugation_exchanges_factors():
    rng = np.random.default_rng(2)
    a, b = (GradedOperator.on(V4, rng.normal(size=(4, 4))).homogeneous_parts()[1] for _ in range(2))
    P = graded_swap(V4, V4).mat
    lhs = P @ kron_graded(a, b).mat @ P
    # both odd: P (a (x) b) P = - b (x) a
    assert max_abs(lhs + kron_graded(b, a).mat) < 1e-12


def test_embed_legs_matches_kron_on_adjacent_legs():
    rng = np.random.default_rng(3)
    m = rng.normal(size=(16, 16))
    op = GradedOperator.on(V4.tensor(V4), m).homogeneous_parts()[0]
    full = embed_legs(op, (1, 2), 3).mat
    assert max_abs(full - kron_graded(op, GradedOperator.identity(V4)).mat) < 1e-14


def test_embed_legs_outer_pair_from_product():
    rng = np.random.default_rng(4)
    a = GradedOperator.on(V4, rng.normal(size=(4, 4))).homogeneous_parts()[1]
    b = GradedOperator.on(V4, rng.normal(size=(4, 4))).homogeneous_parts()[1]
    placed = embed_legs(kron_graded(a, b), (1, 3), 3).mat
    direct = kron_chain(a, GradedOperator.identity(V4), b).mat
    assert max_abs(placed - direct) < 1e-12


def test_supercommutator_of_odd_is_anticommutator():
    a = op11([[0, 1], [0, 0]], ODD)
    b = op11([[0, 0], [1, 0]], ODD)
    assert np.allclose(supercommutator(a, b).mat, np.eye(2))


def test_errors():
    with pytest.raises(GradingError):
        GradedSpace(())
    with pytest.raises(GradingError):
        GradedSpace((0, 2))
    with pytest.raises(GradingError):
        GradedOperator.on(V4, np.eye(3))
    with pytest.raises(GradingError):
        graded_permutation((V4, V4), (0, 0))
    with pytest.raises(GradingError):
        embed_legs(GradedOperator.identity(V4.tensor(V4)), (2, 1), 3)
    with pytest.raises(GradingError):
        supercommutator(GradedOperator.on(V4, np.ones((4, 4))), GradedOperator.identity(V4))


@settings(max_examples=40, deadline=None)
@given(st.permutations([0, 1, 2]))
def test_permutation_inverse(perm):
    P = graded_permutation((V11, V11, V11), tuple(perm)).mat
    inv = tuple(int(i) for i in np.argsort(perm))
    Q = graded_permutation((V11, V11, V11), inv).mat
    assert np.allclose(Q @ P, np.eye(8))


def test_detect_parity():
    even, odd = GradedOperator.on(V4, np.arange(16).reshape(4, 4)).homogeneous_parts()
    assert even.detect_parity() == EVEN and odd.detect_parity() == ODD
    assert GradedOperator.on(V4, np.ones((4, 4))).detect_parity() is None
