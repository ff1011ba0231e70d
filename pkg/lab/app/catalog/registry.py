# lab/app/catalog/registry.py
"""
The inequality registry: stable ids, readable statements, applicability,
parameter grids and evaluators.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Callable

from app.blocks.block import Block2x2, has_hermitian_offdiagonal
from app.blocks.classify import OperatorClass, classify
from app.catalog import checks
from app.catalog.checks import Operand, whole
from app.catalog.results import CheckResult, power_pair
from app.constants import Applicability, Tolerance
from app.errors import UnknownCheck
from app.models import CheckReport

BlockEvaluator = Callable[..., CheckResult]

T_GRID = tuple({"t": t} for t in (0.0, 0.25, 0.5, 0.75, 1.0))
PAIR_GRID = tuple({"t": t} for t in (0.3, 0.5, 0.7))
CIRCULANT_GRID = tuple({"t": t} for t in (0.0, 0.5, 1.0))


@dataclass(frozen=True)
class InequalityCheck:
    id: str
    statement: str
    applicability: Applicability
    evaluator: BlockEvaluator
    expected_falsifiable: bool = False
    parameter_grid: tuple[dict[str, float], ...] = field(default=({},))
    whole_matrix: bool = False  # depends on T only, not on its partition

    def evaluate(self, b: Operand, tol: float | None = None, **params: Any) -> CheckResult:
        """Evaluate without re-checking applicability."""
        return self.evaluator(b, tol=tol, **params)

    def is_applicable(self, b: Operand, operator_class: OperatorClass | None = None) -> bool:
        if self.applicability is Applicability.ANY:
            return True
        oc = operator_class if operator_class is not None else classify(whole(b))
        offdiag_hermitian = isinstance(b, Block2x2) and has_hermitian_offdiagonal(b)
        return oc.admits(self.applicability, offdiag_hermitian)


def _thm1_fg(b: Block2x2, t: float, tol: float | None = None) -> CheckResult:
    return checks.check_thm1_fg.unchecked(b, power_pair(t), tol=tol)


def _thm2(b: Block2x2, t: float, tol: float | None = None) -> CheckResult:
    return checks.check_thm2.unchecked(b, power_pair(t), tol=tol)


def _circulant(b: Block2x2, t: float, tol: float | None = None) -> CheckResult:
    return checks.check_circulant_equality(b.t11, b.t12, t=t, tol=tol)


def _false_triangle(b: Block2x2, tol: float | None = None) -> CheckResult:
    return checks.probe_false_triangle_abs(b.t11, b.t12, tol=tol)


def _entry(check_id: str, statement: str, fn: BlockEvaluator, **kwargs: Any) -> InequalityCheck:
    return InequalityCheck(
        id=check_id,
        statement=statement,
        applicability=fn.applicability,  # type: ignore[attr-defined]
        evaluator=fn.unchecked,  # type: ignore[attr-defined]
        **kwargs,
    )


@lru_cache(maxsize=1)
def _build() -> tuple[InequalityCheck, ...]:
    c = checks
    return (
        _entry("norm_radius_equiv", "||T||/2 <= w(T) <= ||T||", c.check_norm_radius_equiv, whole_matrix=True),
        _entry("real_imag", "max(||Re T||, ||Im T||) <= w(T)", c.check_real_imag_parts, whole_matrix=True),
        _entry("shebr_lower", "max(w(X), w(W), w(Y+Z)/2, w(Y-Z)/2) <= w(T)", c.check_shebr_lower),
        _entry("shebr_upper", "w(T) <= max(w(X), w(W)) + (w(Y+Z) + w(Y-Z))/2", c.check_shebr_upper),
        _entry("pinching", "max(w(diag T), w(antidiag T)) <= w(T)", c.check_pinching),
        _entry("lemma04", "||A12|| <= w(T)", c.check_lemma04),
        _entry("thm06", "(1/4) || |T12|^2 + |T21*|^2 || <= w^2(T)", c.check_thm06),
        _entry("thm08", "|| |T12|^2 + |T21*|^2 || <= w^2(T), T accretive-dissipative", c.check_thm08),
        _entry("eq8", "2 ||A12|| <= ||T||, T positive", c.check_eq8),
        _entry("eq09", "||T|| <= ||A11|| + ||A22||, T positive", c.check_eq09),
        _entry("hiro", "||T|| <= ||T11 + T22||, T positive with Hermitian T12", c.check_hiro),
        _entry("w12_arith", "w(T12) <= ||A11 + A22 + B11 + B22|| / 2, T accretive-dissipative", c.check_w12_arith),
        _entry("w12_geom", "w(T12) <= sqrt(||A11 + B11|| ||A22 + B22||), T accretive-dissipative", c.check_w12_geom),
        _entry("alpha_beta", "max(alpha, beta) <= w(T)", c.check_alpha_beta),
        _entry("cor_2max", "2 max(||A12||, ||B12||) <= w(T), T accretive-dissipative", c.check_corollary_2max),
        _entry(
            "spectral_norm_bound",
            "||T|| <= r([||Aij||]) + r([||Bij||])",
            c.check_spectral_norm_bound,
        ),
        _entry("eqr", "r(T) <= r([||Tij||]), T Hermitian", c.check_eqr),
        _entry(
            "thm1",
            "||T|| <= weighted bound in |Tij|^(2t), |Tij*|^(2(1-t))",
            c.check_thm1,
            parameter_grid=T_GRID,
        ),
        InequalityCheck(
            id="thm1_fg",
            statement="||T|| <= weighted bound in f(|Tij|^2), g(|Tij*|^2), f(x)g(x) = x",
            applicability=Applicability.ANY,
            evaluator=_thm1_fg,
            parameter_grid=PAIR_GRID,
        ),
        InequalityCheck(
            id="thm2",
            statement="||T|| <= sum bound in f^2(|Tij|), g^2(|Tij*|), f(x)g(x) = x",
            applicability=Applicability.ANY,
            evaluator=_thm2,
            parameter_grid=PAIR_GRID,
        ),
        InequalityCheck(
            id="circulant_eq",
            statement="max(||T1 + T2||, ||T1 - T2||) = ||[[T1, T2], [T2, T1]]||",
            applicability=Applicability.ANY,
            evaluator=_circulant,
            parameter_grid=CIRCULANT_GRID,
        ),
        InequalityCheck(
            id="probe_false_triangle_abs",
            statement="||T1 + T2|| <= || |T1| + |T2| || (false in general)",
            applicability=Applicability.ANY,
            evaluator=_false_triangle,
            expected_falsifiable=True,
        ),
        _entry(
            "probe_thm1_printed",
            "||T|| <= weighted bound with adjoint pairs (T11*, T21*), (T22*, T12*) (false in general)",
            c.probe_thm1_printed,
            expected_falsifiable=True,
            parameter_grid=({"t": 0.5},),
        ),
        _entry(
            "ad_cartesian_norm",
            "||T||^2 <= ||Re T||^2 + ||Im T||^2, T accretive-dissipative",
            c.check_ad_cartesian_norm,
            whole_matrix=True,
        ),
        _entry(
            "ad_norm_bound",
            "||T|| <= sqrt((||A11|| + ||A22||)^2 + (||B11|| + ||B22||)^2), T accretive-dissipative",
            c.check_ad_norm_bound,
        ),
    )


def registry() -> list[InequalityCheck]:
    """All checks in a stable order."""
    return list(_build())


def get_check(check_id: str) -> InequalityCheck:
    for check in _build():
        if check.id == check_id:
            return check
    raise UnknownCheck(check_id)


def run_check(
    check: InequalityCheck,
    b: Operand,
    tol: float | None = None,
    params: dict[str, float] | None = None,
    operator_class: OperatorClass | None = None,
) -> CheckReport:
    """Evaluate one check when applicable; a non-applicable input yields an empty verdict."""
    params = dict(params or {})
    tol = Tolerance.get_check_tolerance() if tol is None else tol
    if not check.is_applicable(b, operator_class):
        return CheckReport.not_applicable(check.id, check.statement, params, tol, check.expected_falsifiable)
    result = check.evaluate(b, tol=tol, **params)
    return CheckReport.from_result(check.id, check.statement, params, result, check.expected_falsifiable)
