import numpy as np
import pytest

from gl22r.params import ParameterError, global_from_k
from gl22r.rmatrix import coefficients
from gl22r.suites import sample_point
from gl22r.superlinalg import max_abs
from gl22r.symmetries import (OMEGA, conjugate_site, conjugation_operator, duality, invert_z,
                              statistics_flip, statistics_flip_literal, supertranspose, verify_conjugation,
                              verify_duality, verify_inversion, verify_selfdual, verify_statistics_flip)

VERIFIERS = [verify_conjugation, verify_inversion, verify_statistics_flip, verify_duality]


@pytest.mark.parametrize("verify", VERIFIERS, ids=lambda f: f.__name__)
def test_symmetry_relations(rng, verify):
    for _ in range(10):
        gp, (k1, k2) = sample_point(rng, 2)
        res = verify(gp, k1, k2)
        bad = {k: v for k, v in res.items() if v > 1e-11}
        assert not bad


def test_selfdual_point_map(rng):
    for _ in range(10):
        y1, y2 = (rng.uniform(0.6, 1.6) * np.exp(1j * rng.uniform(0.1, 1.4)) for _ in range(2))
        res = verify_selfdual(y1, y2, 0.9 + 0.2j, 1.1 - 0.3j, 0.7 + 0.1j)
        assert max(res.values()) < 1e-11


def test_supertranspose_antihomomorphism():
    # (XY)^ST = (-1)^{|X||Y|} Y^ST X^ST for homogeneous X, Y
    rng = np.random.default_rng(5)
    par = np.array([0, 0, 1, 1])
    odd_mask = (par[:, None] + par[None, :]) % 2 == 1
    X = np.where(odd_mask, rng.normal(size=(4, 4)), 0)
    Y = np.where(odd_mask, rng.normal(size=(4, 4)), 0)
    assert max_abs(supertranspose(X @ Y) + supertranspose(Y) @ supertranspose(X)) < 1e-13
    E = np.where(~odd_mask, rng.normal(size=(4, 4)), 0)
    assert max_abs(supertranspose(E @ X) - supertranspose(X) @ supertranspose(E)) < 1e-13


def test_conjugation_operator_preserves_supercommutators():
    rng = np.random.default_rng(6)
    par = np.array([0, 0, 1, 1])
    odd_mask = (par[:, None] + par[None, :]) % 2 == 1
    X = np.where(odd_mask, rng.normal(size=(4, 4)), 0)
    Y = np.where(odd_mask, rng.normal(size=(4, 4)), 0)
    lhs = conjugation_operator(X @ Y + Y @ X)
    cx, cy = conjugation_operator(X), conjugation_operator(Y)
    assert max_abs(lhs - (cx @ cy + cy @ cx)) < 1e-13
    assert np.allclose(OMEGA @ OMEGA, -np.eye(4))


def test_group_orders(gp, sites):
    k = sites[0]
    kk = conjugate_site(gp, conjugate_site(gp, k))
    assert abs(kk.x - k.x) <= 4 * np.finfo(float).eps * abs(k.x)
    zz = invert_z(gp, invert_z(gp, k))
    assert abs(zz.z - k.z) <= 1e-14 * abs(k.z)
    ff = statistics_flip(gp, statistics_flip(gp, k))
    assert abs(ff.gamma - k.gamma) < 1e-13
    g4 = duality(duality(duality(duality(gp))))
    assert abs(g4.k - gp.k) <= 4 * np.finfo(float).eps * abs(gp.k)


def test_statistics_flip_literal_sign_is_off(gp, sites):
    k1, k2, _ = sites
    # C' = F fails unless a relative sign is included
    assert max(statistics_flip_literal(gp, k1, k2).values()) > 1e-3


def test_conjugation_double_map_not_identity_on_gamma(gp, sites):
    k1, k2, _ = sites
    kk = conjugate_site(gp, conjugate_site(gp, k1))
    assert abs(kk.gamma + k1.gamma) < 1e-12
    assert max_abs(coefficients(gp, kk, k2).C + coefficients(gp, k1, k2).C) < 1e-12


def test_duality_requires_nondegenerate_k():
    with pytest.raises(ParameterError):
        duality(global_from_k(1.0))
