# lab/app/blocks/block.py
"""
2x2 operator matrices [[T11, T12], [T21, T22]] with square blocks of one
common dimension n.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from app.constants import Tolerance
from app.errors import DimensionMismatch, OddDimension
from app.linalg.matrix import ComplexMatrix, is_hermitian


@dataclass(frozen=True)
class Block2x2:
    t11: ComplexMatrix
    t12: ComplexMatrix
    t21: ComplexMatrix
    t22: ComplexMatrix

    def __post_init__(self):
        n = self.t11.require_square()
        for name in ("t12", "t21", "t22"):
            block: ComplexMatrix = getattr(self, name)
            if block.shape != (n, n):
                raise DimensionMismatch(f"{name} is {block.rows}x{block.cols}, t11 is {n}x{n}")

    @property
    def block_dim(self) -> int:
        return self.t11.rows

    @property
    def dim(self) -> int:
        return 2 * self.block_dim

    def blocks(self) -> tuple[ComplexMatrix, ComplexMatrix, ComplexMatrix, ComplexMatrix]:
        """(T11, T12, T21, T22) in natural order."""
        return self.t11, self.t12, self.t21, self.t22

    @classmethod
    def scalar(cls, a: complex, b: complex, c: complex, d: complex) -> Block2x2:
        """1x1 blocks, i.e. the 2x2 matrix [[a, b], [c, d]]."""
        return cls(*(ComplexMatrix([[z]]) for z in (a, b, c, d)))


def partition(m: ComplexMatrix) -> Block2x2:
    """Split a 2n x 2n matrix into four contiguous n x n blocks."""
    size = m.require_square()
    if size % 2:
        raise OddDimension(f"dimension {size}")
    n = size // 2
    d = m.data
    return Block2x2(
        t11=ComplexMatrix(d[:n, :n]),
        t12=ComplexMatrix(d[:n, n:]),
        t21=ComplexMatrix(d[n:, :n]),
        t22=ComplexMatrix(d[n:, n:]),
    )


def assemble(b: Block2x2) -> ComplexMatrix:
    return ComplexMatrix(np.block([[b.t11.data, b.t12.data], [b.t21.data, b.t22.data]]))


def diagonal_part(b: Block2x2) -> Block2x2:
    """[[T11, O], [O, T22]]."""
    zero = ComplexMatrix.zeros(b.block_dim)
    return Block2x2(b.t11, zero, zero, b.t22)


def antidiagonal_part(b: Block2x2) -> Block2x2:
    """[[O, T12], [T21, O]]."""
    zero = ComplexMatrix.zeros(b.block_dim)
    return Block2x2(zero, b.t12, b.t21, zero)


def has_hermitian_offdiagonal(b: Block2x2, tol: float = Tolerance.KERNEL) -> bool:
    return is_hermitian(b.t12, tol)
