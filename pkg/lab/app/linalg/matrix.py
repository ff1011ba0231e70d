# lab/app/linalg/matrix.py
"""
Dense complex matrix carrier.

ComplexMatrix wraps a read-only complex128 ndarray. Every instance is
non-empty and finite, so downstream kernels never re-validate entries.
"""

from __future__ import annotations

from typing import Iterable, Sequence

import numpy as np

from app.errors import DimensionMismatch, EmptyMatrix, NonFiniteEntry, NotSquare

Scalar = complex | float | int


class ComplexMatrix:
    """Immutable dense complex matrix (row-major complex128 storage)."""

    __slots__ = ("_data",)

    def __init__(self, data: np.ndarray | Sequence[Sequence[Scalar]]):
        arr = np.array(data, dtype=np.complex128)
        if arr.ndim != 2:
            raise DimensionMismatch(f"expected a 2-D array, got {arr.ndim}-D")
        if arr.shape[0] == 0 or arr.shape[1] == 0:
            raise EmptyMatrix()
        if not np.all(np.isfinite(arr)):
            raise NonFiniteEntry()
        arr.setflags(write=False)
        self._data = arr

    # ------------------------------------------------------------------
    # Constructors
    # ------------------------------------------------------------------

    @classmethod
    def identity(cls, n: int) -> ComplexMatrix:
        return cls(np.eye(n, dtype=np.complex128))

    @classmethod
    def zeros(cls, rows: int, cols: int | None = None) -> ComplexMatrix:
        return cls(np.zeros((rows, rows if cols is None else cols), dtype=np.complex128))

    @classmethod
    def diag(cls, values: Iterable[Scalar]) -> ComplexMatrix:
        return cls(np.diag(np.asarray(list(values), dtype=np.complex128)))

    @classmethod
    def from_pairs(cls, pairs: Sequence[Sequence[Sequence[float]]]) -> ComplexMatrix:
        """Build from nested [[re, im], ...] rows (Matrix JSON layout)."""
        arr = np.asarray(pairs, dtype=np.float64)
        if arr.ndim != 3 or arr.shape[-1] != 2:
            raise DimensionMismatch("entries must be [re, im] pairs")
        return cls(arr[..., 0] + 1j * arr[..., 1])

    # ------------------------------------------------------------------
    # Shape and access
    # ------------------------------------------------------------------

    @property
    def data(self) -> np.ndarray:
        """Read-only view of the underlying array."""
        return self._data

    @property
    def rows(self) -> int:
        return self._data.shape[0]

    @property
    def cols(self) -> int:
        return self._data.shape[1]

    @property
    def shape(self) -> tuple[int, int]:
        return self._data.shape

    @property
    def entries(self) -> np.ndarray:
        """Row-major flat copy of the entries."""
        return self._data.reshape(-1).copy()

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols

    def require_square(self) -> int:
        if not self.is_square:
            raise NotSquare(f"shape {self.shape}")
        return self.rows

    def is_real(self) -> bool:
        return bool(np.all(self._data.imag == 0.0))

    def __getitem__(self, key):
        return self._data[key]

    def to_pairs(self) -> list[list[list[float]]]:
        return [[[float(z.real), float(z.imag)] for z in row] for row in self._data]

    # ------------------------------------------------------------------
    # Arithmetic
    # ------------------------------------------------------------------

    def _coerce(self, other: ComplexMatrix) -> np.ndarray:
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        if other.shape != self.shape:
            raise DimensionMismatch(f"{self.shape} vs {other.shape}")
        return other._data

    def __add__(self, other: ComplexMatrix) -> ComplexMatrix:
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return ComplexMatrix(self._data + rhs)

    def __sub__(self, other: ComplexMatrix) -> ComplexMatrix:
        rhs = self._coerce(other)
        if rhs is NotImplemented:
            return NotImplemented
        return ComplexMatrix(self._data - rhs)

    def __neg__(self) -> ComplexMatrix:
        return ComplexMatrix(-self._data)

    def __matmul__(self, other: ComplexMatrix) -> ComplexMatrix:
        if not isinstance(other, ComplexMatrix):
            return NotImplemented
        if self.cols != other.rows:
            raise DimensionMismatch(f"{self.shape} @ {other.shape}")
        return ComplexMatrix(self._data @ other._data)

    def __mul__(self, scalar: Scalar) -> ComplexMatrix:
        if isinstance(scalar, ComplexMatrix):
            return NotImplemented
        return ComplexMatrix(self._data * complex(scalar))

    __rmul__ = __mul__

    def __truediv__(self, scalar: Scalar) -> ComplexMatrix:
        return ComplexMatrix(self._data / complex(scalar))

    # ------------------------------------------------------------------
    # Norms and comparison
    # ------------------------------------------------------------------

    def frobenius_norm(self) -> float:
        return float(np.linalg.norm(self._data))

    def allclose(self, other: ComplexMatrix, tol: float) -> bool:
        """Frobenius distance within tol * (1 + ||self||_F)."""
        if other.shape != self.shape:
            return False
        return bool(np.linalg.norm(self._data - other._data) <= tol * (1.0 + self.frobenius_norm()))

    def __repr__(self) -> str:
        return f"ComplexMatrix({self.rows}x{self.cols}, {np.array2string(self._data, precision=6)})"


def adjoint(m: ComplexMatrix) -> ComplexMatrix:
    """Conjugate transpose; an exact involution."""
    return ComplexMatrix(m.data.conj().T)


def real_part(m: ComplexMatrix) -> ComplexMatrix:
    """Hermitian real part (m + m*) / 2."""
    m.require_square()
    d = m.data
    return ComplexMatrix((d + d.conj().T) / 2.0)


def imag_part(m: ComplexMatrix) -> ComplexMatrix:
    """Hermitian imaginary part (m - m*) / 2i."""
    m.require_square()
    d = m.data
    return ComplexMatrix((d - d.conj().T) / 2j)


def hermitian_defect(m: ComplexMatrix) -> float:
    """||m - m*||_F."""
    m.require_square()
    d = m.data
    return float(np.linalg.norm(d - d.conj().T))


def is_hermitian(m: ComplexMatrix, tol: float) -> bool:
    return m.is_square and hermitian_defect(m) <= tol * (1.0 + m.frobenius_norm())
