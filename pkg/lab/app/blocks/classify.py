# lab/app/blocks/classify.py
"""
Operator class membership with graded slacks.

A slack >= 0 means the defining spectral condition holds; slacks are
reported for non-members too so searches can rank near-members.
"""

from __future__ import annotations

from dataclasses import dataclass

from app.constants import Applicability, Tolerance
from app.linalg.matrix import ComplexMatrix, hermitian_defect, imag_part, real_part
from app.linalg.spectral import lambda_min, operator_norm


@dataclass(frozen=True)
class OperatorClass:
    hermitian: bool
    positive: bool
    accretive: bool
    dissipative: bool
    min_real_eig: float  # lambda_min(Re m)
    min_imag_eig: float  # lambda_min(Im m)
    hermitian_defect: float

    @property
    def accretive_dissipative(self) -> bool:
        return self.accretive and self.dissipative

    def admits(self, applicability: Applicability, hermitian_offdiagonal: bool = False) -> bool:
        """Whether an inequality with this applicability may be evaluated."""
        if applicability is Applicability.ANY:
            return True
        if applicability is Applicability.HERMITIAN:
            return self.hermitian
        if applicability is Applicability.POSITIVE:
            return self.positive
        if applicability is Applicability.ACCRETIVE_DISSIPATIVE:
            return self.accretive_dissipative
        if applicability is Applicability.POSITIVE_HERMITIAN_OFFDIAG:
            return self.positive and hermitian_offdiagonal
        raise ValueError(f"unknown applicability {applicability!r}")

    def to_flags(self) -> dict[str, bool | float]:
        return {
            "hermitian": self.hermitian,
            "positive": self.positive,
            "accretive": self.accretive,
            "dissipative": self.dissipative,
            "accretive_dissipative": self.accretive_dissipative,
            "min_real_eig": self.min_real_eig,
            "min_imag_eig": self.min_imag_eig,
        }


def classify(m: ComplexMatrix) -> OperatorClass:
    m.require_square()
    defect = hermitian_defect(m)
    hermitian = defect <= Tolerance.KERNEL * (1.0 + m.frobenius_norm())

    guard = Tolerance.PSD * (1.0 + operator_norm(m))
    min_re = lambda_min(real_part(m))
    min_im = lambda_min(imag_part(m))
    accretive = min_re >= -guard
    dissipative = min_im >= -guard

    # for Hermitian m, Re m is m up to rounding
    positive = hermitian and accretive

    return OperatorClass(
        hermitian=hermitian,
        positive=positive,
        accretive=accretive,
        dissipative=dissipative,
        min_real_eig=min_re,
        min_imag_eig=min_im,
        hermitian_defect=defect,
    )
