"""
Tests for the Hermitian eigensolvers (cyclic Jacobi and LAPACK).
"""

import numpy as np
import pytest

from app.constants import EigenMethod
from app.errors import NotHermitian, NotSquare
from app.linalg.eigen import hermitian_eigen
from app.linalg.matrix import ComplexMatrix

METHODS = [EigenMethod.JACOBI, EigenMethod.LAPACK]


def random_hermitian(rng, n):
    g = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
    return ComplexMatrix((g + g.conj().T) / 2)


def assert_decomposition_invariants(m, decomp, tol=1e-10):
    v = decomp.vectors.data
    n = m.rows
    frob = m.frobenius_norm()
    assert np.all(np.diff(decomp.values) <= 0), "eigenvalues must be descending"
    assert np.linalg.norm(v.conj().T @ v - np.eye(n)) <= tol * n
    assert np.linalg.norm(decomp.reconstruct().data - m.data) <= tol * (1 + frob)


@pytest.mark.parametrize("method", METHODS)
class TestWorkedExamples:
    """Small matrices with known spectra."""

    def test_real_symmetric(self, method):
        decomp = hermitian_eigen(ComplexMatrix([[2, 1], [1, 2]]), method=method)
        assert decomp.values == pytest.approx([3.0, 1.0], abs=1e-12)

    def test_pauli_y(self, method):
        decomp = hermitian_eigen(ComplexMatrix([[0, -1j], [1j, 0]]), method=method)
        assert decomp.values == pytest.approx([1.0, -1.0], abs=1e-12)
        assert_decomposition_invariants(ComplexMatrix([[0, -1j], [1j, 0]]), decomp)

    def test_diagonal_is_sorted(self, method):
        decomp = hermitian_eigen(ComplexMatrix.diag([1, -2, 5]), method=method)
        assert decomp.values == pytest.approx([5.0, 1.0, -2.0])
        assert decomp.max_value == pytest.approx(5.0)
        assert decomp.min_value == pytest.approx(-2.0)

    def test_zero_and_scalar(self, method):
        assert hermitian_eigen(ComplexMatrix.zeros(3), method=method).values == pytest.approx([0, 0, 0])
        assert hermitian_eigen(ComplexMatrix([[4.5]]), method=method).values == pytest.approx([4.5])

    def test_repeated_eigenvalues(self, method):
        m = ComplexMatrix([[1, 1, 1], [1, 1, 1], [1, 1, 1]])
        decomp = hermitian_eigen(m, method=method)
        assert decomp.values == pytest.approx([3.0, 0.0, 0.0], abs=1e-12)
        assert_decomposition_invariants(m, decomp)

    def test_rejects_non_hermitian(self, method):
        with pytest.raises(NotHermitian):
            hermitian_eigen(ComplexMatrix([[0, 1], [0, 0]]), method=method)

    def test_rejects_non_square(self, method):
        with pytest.raises(NotSquare):
            hermitian_eigen(ComplexMatrix.zeros(2, 3), method=method)

    def test_tolerates_rounding_asymmetry(self, method):
        m = ComplexMatrix([[1, 2 + 1e-13], [2, 1]])
        assert hermitian_eigen(m, method=method).values == pytest.approx([3.0, -1.0], abs=1e-10)


class TestRandomSpectra:
    """Invariants on random Hermitian matrices and agreement between backends."""

    @pytest.mark.parametrize("n", [1, 2, 3, 5, 8, 16])
    def test_jacobi_invariants(self, rng, n):
        for _ in range(5):
            m = random_hermitian(rng, n)
            assert_decomposition_invariants(m, hermitian_eigen(m, method=EigenMethod.JACOBI))

    @pytest.mark.parametrize("n", [2, 4, 7])
    def test_backends_agree(self, rng, n):
        for _ in range(5):
            m = random_hermitian(rng, n)
            jacobi = hermitian_eigen(m, method=EigenMethod.JACOBI).values
            lapack = hermitian_eigen(m, method=EigenMethod.LAPACK).values
            assert np.max(np.abs(jacobi - lapack)) <= 1e-10 * (1 + m.frobenius_norm())

    def test_default_method_is_jacobi(self, rng):
        m = random_hermitian(rng, 4)
        assert np.array_equal(hermitian_eigen(m).values, hermitian_eigen(m, method="jacobi").values)

    @pytest.mark.slow
    def test_kernel_health_campaign(self):
        """500 Hermitian samples up to dimension 16 on both backends."""
        rng = np.random.default_rng(7)
        for k in range(500):
            m = random_hermitian(rng, 1 + k % 16)
            for method in METHODS:
                assert_decomposition_invariants(m, hermitian_eigen(m, method=method))
