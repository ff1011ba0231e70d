# lab/app/models.py
from __future__ import annotations

import math
from typing import TYPE_CHECKING, Any, Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from app.blocks.block import Block2x2, partition
from app.constants import ErrorMessage
from app.linalg.matrix import ComplexMatrix

if TYPE_CHECKING:
    from app.catalog.results import CheckResult


class MatrixPayload(BaseModel):
    """Matrix JSON: row-major [re, im] pairs."""

    model_config = ConfigDict(allow_inf_nan=False)

    rows: int = Field(..., ge=1, description="Number of rows")
    cols: int = Field(..., ge=1, description="Number of columns")
    data: List[List[List[float]]] = Field(..., description="Row-major [re, im] entries")

    @field_validator("data")
    @classmethod
    def validate_pairs(cls, v: List[List[List[float]]]) -> List[List[List[float]]]:
        for row in v:
            for entry in row:
                if len(entry) != 2:
                    raise ValueError("each entry must be a [re, im] pair")
                if not all(math.isfinite(x) for x in entry):
                    raise ValueError(ErrorMessage.NON_FINITE)
        return v

    @model_validator(mode="after")
    def validate_shape(self) -> "MatrixPayload":
        if len(self.data) != self.rows:
            raise ValueError(f"data has {len(self.data)} rows, expected {self.rows}")
        for i, row in enumerate(self.data):
            if len(row) != self.cols:
                raise ValueError(f"row {i} has {len(row)} entries, expected {self.cols}")
        return self

    def to_matrix(self) -> ComplexMatrix:
        return ComplexMatrix.from_pairs(self.data)

    @classmethod
    def from_matrix(cls, m: ComplexMatrix) -> "MatrixPayload":
        return cls(rows=m.rows, cols=m.cols, data=m.to_pairs())


class BlockPayload(BaseModel):
    """Block JSON: four square Matrix JSON blocks of one dimension."""

    t11: MatrixPayload
    t12: MatrixPayload
    t21: MatrixPayload
    t22: MatrixPayload

    @model_validator(mode="after")
    def validate_block_dims(self) -> "BlockPayload":
        n = self.t11.rows
        for name in ("t11", "t12", "t21", "t22"):
            block: MatrixPayload = getattr(self, name)
            if block.rows != n or block.cols != n:
                raise ValueError(f"{name} is {block.rows}x{block.cols}, blocks must all be {n}x{n}")
        return self

    def to_block(self) -> Block2x2:
        return Block2x2(
            t11=self.t11.to_matrix(),
            t12=self.t12.to_matrix(),
            t21=self.t21.to_matrix(),
            t22=self.t22.to_matrix(),
        )

    @classmethod
    def from_block(cls, b: Block2x2) -> "BlockPayload":
        return cls(
            t11=MatrixPayload.from_matrix(b.t11),
            t12=MatrixPayload.from_matrix(b.t12),
            t21=MatrixPayload.from_matrix(b.t21),
            t22=MatrixPayload.from_matrix(b.t22),
        )


def load_operand(raw: Dict[str, Any], as_block: bool) -> Block2x2 | ComplexMatrix:
    """
    Parse Matrix JSON or Block JSON.

    Block JSON always yields a Block2x2; a full matrix is partitioned only
    when `as_block` is set.
    """
    if "t11" in raw:
        return BlockPayload.model_validate(raw).to_block()
    m = MatrixPayload.model_validate(raw).to_matrix()
    return partition(m) if as_block else m


# ============================================================================
# Reports
# ============================================================================


class PairedResult(BaseModel):
    """Second half of a two-sided statement."""

    kind: str
    lhs: float
    rhs: float
    slack: float
    holds: bool


class CheckReport(BaseModel):
    """Verdict of one check on one input with one parameter setting."""

    id: str
    statement: str
    applicable: bool
    lhs: Optional[float] = None
    rhs: Optional[float] = None
    slack: Optional[float] = None
    holds: Optional[bool] = None
    params: Dict[str, float] = Field(default_factory=dict)
    kind: Optional[str] = None
    tol: float
    expected_falsifiable: bool = False
    paired: Optional[PairedResult] = None

    @property
    def violated(self) -> bool:
        """An applicable, non-probe check that fails."""
        return self.applicable and not self.expected_falsifiable and self.holds is False

    @property
    def worst_slack(self) -> Optional[float]:
        if self.slack is None:
            return None
        if self.paired is None:
            return self.slack
        return min(self.slack, self.paired.slack)

    @classmethod
    def not_applicable(
        cls, check_id: str, statement: str, params: Dict[str, float], tol: float, expected_falsifiable: bool
    ) -> "CheckReport":
        return cls(
            id=check_id,
            statement=statement,
            applicable=False,
            params=params,
            tol=tol,
            expected_falsifiable=expected_falsifiable,
        )

    @classmethod
    def from_result(
        cls,
        check_id: str,
        statement: str,
        params: Dict[str, float],
        result: "CheckResult",
        expected_falsifiable: bool,
    ) -> "CheckReport":
        paired = None
        if result.paired is not None:
            p = result.paired
            paired = PairedResult(kind=p.kind.value, lhs=p.lhs, rhs=p.rhs, slack=p.slack, holds=p.holds)
        return cls(
            id=check_id,
            statement=statement,
            applicable=True,
            lhs=result.lhs,
            rhs=result.rhs,
            slack=result.slack,
            holds=result.holds,
            params=params,
            kind=result.kind.value,
            tol=result.tol,
            expected_falsifiable=expected_falsifiable,
            paired=paired,
        )


class CheckCampaignReport(BaseModel):
    """Output of `omlab check`: every requested check on one input."""

    block: bool
    dim: int
    tol: float
    results: List[CheckReport]

    @property
    def violated(self) -> bool:
        return any(r.violated for r in self.results)


class WitnessPayload(BaseModel):
    """Input achieving the smallest slack for an id."""

    matrix: MatrixPayload
    params: Dict[str, float] = Field(default_factory=dict)
    slack: float
    trial: Optional[int] = None


class IdSummary(BaseModel):
    """Per-id aggregate over a sweep."""

    id: str
    statement: str
    expected_falsifiable: bool = False
    count: int = 0
    applicable: int = 0
    violations: int = 0
    min_slack: Optional[float] = None
    mean_slack: Optional[float] = None
    worst_witness: Optional[WitnessPayload] = None


class SweepReport(BaseModel):
    """Output of `omlab sweep`."""

    matrix_class: str
    block_dim: int
    trials: int
    seed: int
    tol: float
    checks: List[IdSummary] = Field(default_factory=list)
    probes: List[IdSummary] = Field(default_factory=list)

    @property
    def violated(self) -> bool:
        return any(s.violations > 0 for s in self.checks)


class SharpnessReport(BaseModel):
    """Output of `omlab sharpness`: the best witness over all restarts."""

    check_id: str
    matrix_class: str
    block_dim: int
    restarts: int
    iterations: int
    seed: int
    slack: float
    params: Dict[str, float] = Field(default_factory=dict)
    restart_slacks: List[float] = Field(default_factory=list)
    witness: MatrixPayload


class RadiusReport(BaseModel):
    """Output of `omlab radius`."""

    omega: float
    norm: float
    real_norm: float
    imag_norm: float
    classes: Dict[str, Any]
    closed_form: Optional[float] = None
    closed_form_exact: Optional[float] = None
    closed_form_applies: Optional[bool] = None
    closed_form_difference: Optional[float] = None
