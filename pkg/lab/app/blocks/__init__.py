"""2x2 operator matrices: partition, Cartesian blocks, classes, positivity."""

from app.blocks.block import (
    Block2x2,
    antidiagonal_part,
    assemble,
    diagonal_part,
    has_hermitian_offdiagonal,
    partition,
)
from app.blocks.cartesian import CartesianBlocks, cartesian
from app.blocks.classify import OperatorClass, classify
from app.blocks.positivity import WitnessRecord, cauchy_schwarz_witness, congruence_scale

__all__ = [
    "Block2x2",
    "CartesianBlocks",
    "OperatorClass",
    "WitnessRecord",
    "antidiagonal_part",
    "assemble",
    "cartesian",
    "cauchy_schwarz_witness",
    "classify",
    "congruence_scale",
    "diagonal_part",
    "has_hermitian_offdiagonal",
    "partition",
]
