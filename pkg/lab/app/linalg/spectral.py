# lab/app/linalg/spectral.py
"""
Spectral kernels: operator norm, matrix absolute value, functions of
positive matrices and extreme eigenvalues.

Negative eigenvalues of numerically PSD matrices (T*T, f inputs) are
clamped to zero before any function is applied.
"""

from __future__ import annotations

from typing import Callable

import numpy as np

from app.constants import EigenMethod, KernelConfig, Tolerance
from app.errors import NegativeSpectrum, NotHermitian
from app.linalg.eigen import EigenDecomposition, hermitian_eigen
from app.linalg.matrix import ComplexMatrix, adjoint, hermitian_defect

RealFunction = Callable[[float], float]


def _kernel_eigen(h: ComplexMatrix, method: EigenMethod | None) -> EigenDecomposition:
    return hermitian_eigen(h, method=method or KernelConfig.get_eigen_method())


def gram(m: ComplexMatrix) -> ComplexMatrix:
    """m* m, i.e. |m|^2."""
    d = m.data
    return ComplexMatrix(d.conj().T @ d)


def lambda_max(h: ComplexMatrix, method: EigenMethod | None = None) -> float:
    return _kernel_eigen(h, method).max_value


def lambda_min(h: ComplexMatrix, method: EigenMethod | None = None) -> float:
    return _kernel_eigen(h, method).min_value


def operator_norm(m: ComplexMatrix, method: EigenMethod | None = None) -> float:
    """||m|| = sqrt(lambda_max(m* m)), clamped at 0."""
    return float(np.sqrt(max(lambda_max(gram(m), method), 0.0)))


def _apply(decomp: EigenDecomposition, values: np.ndarray) -> ComplexMatrix:
    v = decomp.vectors.data
    return ComplexMatrix((v * values) @ v.conj().T)


def matrix_abs(m: ComplexMatrix, method: EigenMethod | None = None) -> ComplexMatrix:
    """|m| = (m* m)^(1/2)."""
    m.require_square()
    decomp = _kernel_eigen(gram(m), method)
    return _apply(decomp, np.sqrt(np.clip(decomp.values, 0.0, None)))


def spectral_function(m: ComplexMatrix, f: RealFunction, method: EigenMethod | None = None) -> ComplexMatrix:
    """
    f(m) for Hermitian PSD m: V diag(f(max(lambda_i, 0))) V*.

    Raises NotHermitian if m is not Hermitian within 1e-8 and NegativeSpectrum
    if an eigenvalue is below -1e-8 * (1 + ||m||).
    """
    m.require_square()
    frob = m.frobenius_norm()
    if hermitian_defect(m) > Tolerance.PSD * (1.0 + frob):
        raise NotHermitian("spectral_function needs a Hermitian argument")
    d = m.data
    decomp = _kernel_eigen(ComplexMatrix((d + d.conj().T) / 2.0), method)
    scale = max(abs(decomp.max_value), abs(decomp.min_value))
    if decomp.min_value < -Tolerance.PSD * (1.0 + scale):
        raise NegativeSpectrum(f"lambda_min = {decomp.min_value:.3e}")
    clamped = np.clip(decomp.values, 0.0, None)
    mapped = np.fromiter((f(float(x)) for x in clamped), dtype=np.float64, count=clamped.size)
    return _apply(decomp, mapped)


def adjoint_abs(m: ComplexMatrix, method: EigenMethod | None = None) -> ComplexMatrix:
    """|m*| = (m m*)^(1/2)."""
    return matrix_abs(adjoint(m), method)
