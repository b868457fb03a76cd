import math

import numpy as np
import pytest

from skewtmix.linalg import (
    NotPositiveDefiniteError,
    SpdMatrix,
    cholesky,
    log_det,
    quad_form,
    solve,
    sqrt_spd,
)

CASE2_SCALE = np.array([[0.7, 0.3], [0.3, 3.0]])


def random_spd(rng, d):
    # Wishart-style construction with a jitter to keep conditioning sane
    a = rng.standard_normal((d, d + 2))
    return a @ a.T / (d + 2) + 0.05 * np.eye(d)


class TestCholesky:
    def test_identity(self):
        for d in (1, 2, 5):
            assert np.allclose(cholesky(np.eye(d)), np.eye(d), atol=1e-15)

    def test_case2_roundtrip(self):
        low = cholesky(CASE2_SCALE)
        assert np.max(np.abs(low @ low.T - CASE2_SCALE)) < 1e-14

    def test_indefinite_rejected(self):
        with pytest.raises(NotPositiveDefiniteError, match="not positive definite"):
            SpdMatrix(np.array([[1.0, 2.0], [2.0, 1.0]]))

    def test_symmetrizes_input(self):
        skewed = CASE2_SCALE + np.array([[0.0, 1e-13], [-1e-13, 0.0]])
        m = SpdMatrix(skewed)
        assert np.array_equal(m.entries, m.entries.T)


class TestLogDet:
    def test_identity(self):
        assert log_det(np.eye(3)) == pytest.approx(0.0, abs=1e-14)

    def test_case2(self):
        assert log_det(CASE2_SCALE) == pytest.approx(math.log(2.01), rel=1e-12)

    def test_scalar(self):
        assert log_det(np.array([[1.5]])) == pytest.approx(math.log(1.5), rel=1e-14)

    def test_matches_eigenvalues(self):
        rng = np.random.default_rng(11)
        for d in range(1, 7):
            s = random_spd(rng, d)
            assert log_det(s) == pytest.approx(np.sum(np.log(np.linalg.eigvalsh(s))), abs=1e-8)


class TestSolve:
    def test_identity(self):
        b = np.array([1.0, -2.0, 3.0])
        assert np.allclose(solve(np.eye(3), b), b, atol=1e-15)

    def test_diagonal(self):
        assert np.allclose(solve(np.diag([2.0, 4.0]), np.array([2.0, 4.0])), [1.0, 1.0])

    def test_residual_random(self):
        rng = np.random.default_rng(5)
        s = random_spd(rng, 4)
        b = rng.standard_normal(4)
        x = solve(s, b)
        assert np.linalg.norm(s @ x - b) <= 1e-10 * np.linalg.norm(b)

    def test_batched(self):
        rng = np.random.default_rng(6)
        s = random_spd(rng, 3)
        b = rng.standard_normal((50, 3))
        x = solve(s, b)
        assert np.max(np.abs(b - x @ s)) < 1e-9

    def test_dimension_mismatch(self):
        with pytest.raises(ValueError, match="dimension mismatch"):
            solve(np.eye(2), np.ones(3))


class TestQuadForm:
    def test_identity(self):
        z = np.array([1.0, 2.0, 2.0])
        assert quad_form(np.eye(3), z) == pytest.approx(9.0, abs=1e-14)

    def test_zero(self):
        assert quad_form(CASE2_SCALE, np.zeros(2)) == 0.0

    def test_case2_value(self):
        # explicit 2x2 inverse: (1,0) row gives 3/det
        assert quad_form(CASE2_SCALE, np.array([1.0, 0.0])) == pytest.approx(3.0 / 2.01, rel=1e-12)

    def test_matches_explicit_inverse(self):
        rng = np.random.default_rng(21)
        for d in range(1, 7):
            s = random_spd(rng, d)
            z = rng.standard_normal(d)
            assert quad_form(s, z) == pytest.approx(z @ np.linalg.inv(s) @ z, abs=1e-8)

    def test_nonnegative(self):
        rng = np.random.default_rng(3)
        s = random_spd(rng, 5)
        for _ in range(20):
            assert quad_form(s, rng.standard_normal(5)) >= 0.0


class TestSqrtSpd:
    def test_identity(self):
        assert np.allclose(sqrt_spd(np.eye(4)).entries, np.eye(4), atol=1e-12)

    def test_diagonal(self):
        assert np.allclose(sqrt_spd(np.diag([4.0, 9.0])).entries, np.diag([2.0, 3.0]), atol=1e-12)

    def test_case2_roundtrip(self):
        m = sqrt_spd(CASE2_SCALE).entries
        assert np.max(np.abs(m @ m - CASE2_SCALE)) < 1e-10

    def test_commutes(self):
        rng = np.random.default_rng(9)
        for d in (2, 4, 6):
            s = random_spd(rng, d)
            m = sqrt_spd(s).entries
            assert np.max(np.abs(m @ s - s @ m)) <= 1e-10

    def test_symmetric(self):
        rng = np.random.default_rng(13)
        s = random_spd(rng, 5)
        m = sqrt_spd(s).entries
        assert np.array_equal(m, m.T)
