"""
Constants and enums for the operator-matrix verification lab.

This module centralizes every tolerance, default and enum so that kernels,
the inequality catalog, the samplers and the CLI agree on one table.
"""

import os
from enum import Enum


# ============================================================================
# Tolerances
# ============================================================================


class Tolerance:
    """
    The single constants table for numerical tolerances.

    All tolerances are relative with an additive 1 guard: a quantity q is
    compared against tol * (1 + |scale|).
    """

    # Kernel-level checks (Hermitian defect, unitarity, reconstruction)
    KERNEL = 1e-10

    # Default tolerance for inequality verdicts
    CHECK = 1e-8

    # Jacobi eigensolver
    JACOBI_OFFDIAG = 1e-13
    JACOBI_MAX_SWEEPS = 100

    # Spectral positivity (PSD preconditions, class membership)
    PSD = 1e-8

    # Cauchy-Schwarz sampler margin
    WITNESS = 1e-10

    # Numerical radius refinement
    GOLDEN_WIDTH = 1e-12
    FLAT_GRID = 1e-12

    # f(x) * g(x) = x audit for function pairs
    FUNCTION_PAIR = 1e-10

    @staticmethod
    def get_check_tolerance() -> float:
        """Get the default check tolerance from OMLAB_TOL or use the table value."""
        try:
            value = float(os.getenv("OMLAB_TOL", str(Tolerance.CHECK)))
        except ValueError:
            return Tolerance.CHECK
        return value if value > 0 else Tolerance.CHECK


# ============================================================================
# Enums
# ============================================================================


class EigenMethod(str, Enum):
    """Hermitian eigensolver backends."""

    JACOBI = "jacobi"
    LAPACK = "lapack"


class MatrixClass(str, Enum):
    """Random matrix classes produced by the samplers."""

    GINIBRE = "ginibre"
    HERMITIAN = "hermitian"
    PSD = "psd"
    POSITIVE_BLOCK = "positive_block"
    ACCRETIVE = "accretive"
    ACCRETIVE_DISSIPATIVE = "accretive_dissipative"
    NORMAL = "normal"
    SQUARE_ZERO = "square_zero"
    POSITIVE_HERMITIAN_OFFDIAG = "positive_hermitian_offdiag"


class Applicability(str, Enum):
    """Operator classes an inequality requires of the assembled block matrix."""

    ANY = "any"
    HERMITIAN = "hermitian"
    POSITIVE = "positive"
    ACCRETIVE_DISSIPATIVE = "accretive_dissipative"
    POSITIVE_HERMITIAN_OFFDIAG = "positive_hermitian_offdiag"


class CheckKind(str, Enum):
    """How lhs and rhs are compared."""

    UPPER = "le"  # lhs <= rhs
    EQUALITY = "eq"  # lhs == rhs


# ============================================================================
# Kernel configuration
# ============================================================================


class KernelConfig:
    """Eigensolver selection for the norm / abs / spectral-function kernels."""

    DEFAULT_METHOD = EigenMethod.LAPACK

    @staticmethod
    def get_eigen_method() -> EigenMethod:
        """Get the kernel eigensolver from OMLAB_EIGEN or use the default."""
        raw = os.getenv("OMLAB_EIGEN", KernelConfig.DEFAULT_METHOD.value).lower()
        try:
            return EigenMethod(raw)
        except ValueError:
            return KernelConfig.DEFAULT_METHOD


class RadiusConfig:
    """Numerical radius grid settings."""

    DEFAULT_RESOLUTION = 720
    COARSE_STRIDE = 8  # fine grid points per coarse cell


# ============================================================================
# Campaign configuration
# ============================================================================


class SearchConfig:
    """Sharpness search defaults."""

    DEFAULT_RESTARTS = 50
    DEFAULT_ITERATIONS = 2000
    SIGMA_START = 0.5  # times scale
    SIGMA_END = 1e-4  # times scale
    STEP_GROW = 1.5  # on an accepted proposal
    STEP_SHRINK = 1.5 ** -0.25  # on a rejection; balances STEP_GROW at a 1/5 success rate
    MIN_STEP_FACTOR = 1e-10


class SweepConfig:
    """Sweep campaign defaults."""

    DEFAULT_TRIALS = 1000
    DEFAULT_SEED = 42
    DEFAULT_BLOCK_DIM = 2
    CAMPAIGN_BLOCK_DIMS = (1, 2, 3, 4)
    PAIR_TRIALS = 10000  # random pairs for the false triangle campaign

    @staticmethod
    def get_worker_count() -> int:
        """Get the sweep thread count from OMLAB_WORKERS (default 1)."""
        try:
            return max(1, int(os.getenv("OMLAB_WORKERS", "1")))
        except ValueError:
            return 1


# ============================================================================
# CLI
# ============================================================================


class ExitCode:
    """Process exit codes of the command-line front end."""

    OK = 0
    INPUT_ERROR = 1
    VIOLATION = 2


class ReportFormat:
    """Report formatting."""

    SIGNIFICANT_DIGITS = 17
    CSV_SUFFIX = ".csv"


# ============================================================================
# Error messages
# ============================================================================


class ErrorMessage:
    """Standard error messages."""

    EMPTY_MATRIX = "Matrix must have at least one row and one column"
    NON_FINITE = "Matrix entries must be finite (no NaN or Inf)"
    NOT_SQUARE = "Matrix must be square"
    NOT_HERMITIAN = "Matrix is not Hermitian within tolerance"
    NO_CONVERGENCE = "Jacobi eigensolver did not converge within the sweep cap"
    NEGATIVE_SPECTRUM = "Matrix has a negative eigenvalue beyond tolerance"
    NEGATIVE_ENTRY = "Entries must be nonnegative"
    ODD_DIMENSION = "Block partition needs an even dimension"
    NONPOSITIVE_SCALE = "Congruence scale t must be positive"
    NOT_PSD_INPUT = "Diagonal operators must be positive semidefinite"
    NOT_APPLICABLE = "Inequality does not apply to this operator class"
    UNKNOWN_CHECK = "Unknown inequality id"
    DIMENSION_MISMATCH = "Matrix dimensions are incompatible"
    INVALID_FUNCTION_PAIR = "Function pair violates f(x) * g(x) = x"
