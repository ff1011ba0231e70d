"""Dense complex linear algebra kernels."""

from app.linalg.eigen import EigenDecomposition, hermitian_eigen
from app.linalg.matrix import ComplexMatrix, adjoint, hermitian_defect, imag_part, is_hermitian, real_part
from app.linalg.radius import (
    has_real_spectrum_2x2,
    numerical_radius,
    radius_2x2_real,
    radius_2x2_real_exact,
    spectral_radius_2x2_nonneg,
    spectral_radius_hermitian,
)
from app.linalg.spectral import (
    adjoint_abs,
    gram,
    lambda_max,
    lambda_min,
    matrix_abs,
    operator_norm,
    spectral_function,
)

__all__ = [
    "ComplexMatrix",
    "EigenDecomposition",
    "adjoint",
    "adjoint_abs",
    "gram",
    "has_real_spectrum_2x2",
    "hermitian_defect",
    "hermitian_eigen",
    "imag_part",
    "is_hermitian",
    "lambda_max",
    "lambda_min",
    "matrix_abs",
    "numerical_radius",
    "operator_norm",
    "radius_2x2_real",
    "radius_2x2_real_exact",
    "real_part",
    "spectral_function",
    "spectral_radius_2x2_nonneg",
    "spectral_radius_hermitian",
]
