# lab/app/blocks/cartesian.py
from __future__ import annotations

from dataclasses import dataclass

from app.blocks.block import Block2x2, assemble, partition
from app.linalg.matrix import ComplexMatrix, imag_part, real_part


@dataclass(frozen=True)
class CartesianBlocks:
    """Blocks of Re T = [[A11, A12], [A21, A22]] and Im T = [[B11, B12], [B21, B22]]."""

    a11: ComplexMatrix
    a12: ComplexMatrix
    a21: ComplexMatrix
    a22: ComplexMatrix
    b11: ComplexMatrix
    b12: ComplexMatrix
    b21: ComplexMatrix
    b22: ComplexMatrix

    @property
    def real(self) -> Block2x2:
        return Block2x2(self.a11, self.a12, self.a21, self.a22)

    @property
    def imag(self) -> Block2x2:
        return Block2x2(self.b11, self.b12, self.b21, self.b22)

    def reassemble(self) -> ComplexMatrix:
        """A + iB."""
        return ComplexMatrix(assemble(self.real).data + 1j * assemble(self.imag).data)


def cartesian(b: Block2x2) -> CartesianBlocks:
    """A = (T + T*) / 2 and B = (T - T*) / 2i on the full matrix, then partitioned."""
    full = assemble(b)
    a = partition(real_part(full))
    im = partition(imag_part(full))
    return CartesianBlocks(
        a11=a.t11,
        a12=a.t12,
        a21=a.t21,
        a22=a.t22,
        b11=im.t11,
        b12=im.t12,
        b21=im.t21,
        b22=im.t22,
    )
