"""
Tests for operator norm, matrix absolute value and spectral functions.
"""

import math

import numpy as np
import pytest

from app.errors import NegativeSpectrum, NotHermitian
from app.linalg.matrix import ComplexMatrix
from app.linalg.spectral import (
    adjoint_abs,
    gram,
    lambda_max,
    lambda_min,
    matrix_abs,
    operator_norm,
    spectral_function,
)


def ginibre(rng, n):
    return ComplexMatrix(rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n)))


class TestOperatorNorm:
    def test_nilpotent(self):
        assert operator_norm(ComplexMatrix([[0, 1], [0, 0]])) == pytest.approx(1.0)

    def test_diagonal(self):
        assert operator_norm(ComplexMatrix.diag([3, -4j])) == pytest.approx(4.0)

    def test_zero(self):
        assert operator_norm(ComplexMatrix.zeros(3)) == 0.0

    def test_rectangular(self):
        assert operator_norm(ComplexMatrix([[3, 4]])) == pytest.approx(5.0)

    def test_matches_singular_values(self, rng):
        for n in (1, 2, 5):
            m = ginibre(rng, n)
            expected = np.linalg.svd(m.data, compute_uv=False)[0]
            assert operator_norm(m) == pytest.approx(expected, rel=1e-10)

    def test_jacobi_kernel(self, rng, monkeypatch):
        """OMLAB_EIGEN=jacobi routes the kernels through the Jacobi solver."""
        m = ginibre(rng, 4)
        lapack = operator_norm(m)
        monkeypatch.setenv("OMLAB_EIGEN", "jacobi")
        assert operator_norm(m) == pytest.approx(lapack, rel=1e-10)

    def test_adjoint_has_the_same_norm(self):
        rng = np.random.default_rng(31)
        for k in range(500):
            n = 1 + k % 6
            m = ginibre(rng, n)
            norm = operator_norm(m)
            assert abs(norm - operator_norm(ComplexMatrix(m.data.conj().T))) <= 1e-10 * (1 + norm), k

    def test_dominates_sampled_vectors(self):
        rng = np.random.default_rng(37)
        m = ginibre(rng, 5)
        norm = operator_norm(m)
        x = rng.standard_normal((5, 200)) + 1j * rng.standard_normal((5, 200))
        x /= np.linalg.norm(x, axis=0)
        images = np.linalg.norm(m.data @ x, axis=0)
        assert np.all(images <= norm + 1e-10 * (1 + norm))
        assert images.max() >= 0.5 * norm


class TestMatrixAbs:
    def test_rank_one_rows(self):
        t1 = ComplexMatrix([[1, 1], [0, 0]])
        expected = ComplexMatrix(np.array([[1, 1], [1, 1]]) / math.sqrt(2))
        assert matrix_abs(t1).allclose(expected, 1e-12)

    def test_adjoint_abs(self):
        t = ComplexMatrix([[0, 1], [0, 0]])
        assert matrix_abs(t).allclose(ComplexMatrix.diag([0, 1]), 1e-12)
        assert adjoint_abs(t).allclose(ComplexMatrix.diag([1, 0]), 1e-12)

    def test_square_recovers_gram(self, rng):
        for n in (1, 2, 3, 6):
            m = ginibre(rng, n)
            a = matrix_abs(m)
            assert (a @ a).allclose(gram(m), 1e-8)
            assert lambda_min(a) >= -1e-12

    def test_positive_matrix_is_its_own_abs(self):
        p = ComplexMatrix([[2, 1j], [-1j, 2]])
        assert matrix_abs(p).allclose(p, 1e-12)


class TestSpectralFunction:
    def test_square_root(self):
        root = spectral_function(ComplexMatrix.diag([4, 9]), math.sqrt)
        assert root.allclose(ComplexMatrix.diag([2, 3]), 1e-12)

    def test_power_zero_is_identity(self):
        assert spectral_function(ComplexMatrix.zeros(2), lambda x: x**0.0).allclose(ComplexMatrix.identity(2), 1e-12)

    def test_rounding_negatives_are_clamped(self):
        out = spectral_function(ComplexMatrix.diag([1.0, -1e-12]), math.sqrt)
        assert out.allclose(ComplexMatrix.diag([1.0, 0.0]), 1e-12)

    def test_negative_spectrum_rejected(self):
        with pytest.raises(NegativeSpectrum):
            spectral_function(ComplexMatrix.diag([1, -1]), math.sqrt)

    def test_non_hermitian_rejected(self):
        with pytest.raises(NotHermitian):
            spectral_function(ComplexMatrix([[1, 1], [0, 1]]), math.sqrt)

    @pytest.mark.parametrize("t", [0.0, 0.25, 0.5, 1.0])
    def test_complementary_powers_multiply_back(self, rng, t):
        """P^t P^(1-t) = P for positive P."""
        g = ginibre(rng, 4)
        p = gram(g)
        left = spectral_function(p, lambda x: x**t)
        right = spectral_function(p, lambda x: x ** (1 - t))
        assert (left @ right).allclose(p, 1e-8)

    def test_extreme_eigenvalues(self):
        h = ComplexMatrix([[2, 1], [1, 2]])
        assert lambda_max(h) == pytest.approx(3.0)
        assert lambda_min(h) == pytest.approx(1.0)
