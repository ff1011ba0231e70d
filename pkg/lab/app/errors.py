"""
Exception hierarchy for the lab.

Every error named by an operation contract is its own class so callers can
catch precisely; value-type errors also derive from ValueError.
"""

from app.constants import ErrorMessage


class LabError(Exception):
    """Root of all lab errors."""

    default_message = "Lab error"

    def __init__(self, detail: str | None = None):
        message = self.default_message if detail is None else f"{self.default_message}: {detail}"
        super().__init__(message)
        self.detail = detail


class EmptyMatrix(LabError, ValueError):
    default_message = ErrorMessage.EMPTY_MATRIX


class NonFiniteEntry(LabError, ValueError):
    default_message = ErrorMessage.NON_FINITE


class NotSquare(LabError, ValueError):
    default_message = ErrorMessage.NOT_SQUARE


class DimensionMismatch(LabError, ValueError):
    default_message = ErrorMessage.DIMENSION_MISMATCH


class NotHermitian(LabError, ValueError):
    default_message = ErrorMessage.NOT_HERMITIAN


class NoConvergence(LabError, RuntimeError):
    default_message = ErrorMessage.NO_CONVERGENCE


class NegativeSpectrum(LabError, ValueError):
    default_message = ErrorMessage.NEGATIVE_SPECTRUM


class NegativeEntry(LabError, ValueError):
    default_message = ErrorMessage.NEGATIVE_ENTRY


class OddDimension(LabError, ValueError):
    default_message = ErrorMessage.ODD_DIMENSION


class NonpositiveScale(LabError, ValueError):
    default_message = ErrorMessage.NONPOSITIVE_SCALE


class NotPSDInput(LabError, ValueError):
    default_message = ErrorMessage.NOT_PSD_INPUT


class NotApplicable(LabError, ValueError):
    default_message = ErrorMessage.NOT_APPLICABLE


class UnknownCheck(LabError, KeyError):
    default_message = ErrorMessage.UNKNOWN_CHECK

    def __str__(self) -> str:
        # KeyError would repr() the message
        return self.args[0] if self.args else self.default_message


class InvalidFunctionPair(LabError, ValueError):
    default_message = ErrorMessage.INVALID_FUNCTION_PAIR
