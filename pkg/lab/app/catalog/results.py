# lab/app/catalog/results.py
"""
Check outcomes and the f(x) g(x) = x function pairs used by the
function-pair norm bounds.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable

from app.constants import CheckKind, Tolerance
from app.errors import InvalidFunctionPair

RealFunction = Callable[[float], float]

AUDIT_GRID: tuple[float, ...] = (0.0, 1e-3, 1e-1, 1.0, 10.0, 1e3)


@dataclass(frozen=True)
class CheckResult:
    """
    lhs compared against rhs, slack = rhs - lhs.

    An upper bound holds when slack >= -tol * (1 + |rhs|); an equality holds
    when |slack| <= tol * (1 + |rhs|). A paired result (the second half of
    a two-sided statement) must hold as well.
    """

    lhs: float
    rhs: float
    tol: float
    kind: CheckKind = CheckKind.UPPER
    paired: CheckResult | None = None

    @property
    def slack(self) -> float:
        return self.rhs - self.lhs

    @property
    def margin(self) -> float:
        return self.tol * (1.0 + abs(self.rhs))

    @property
    def primary_holds(self) -> bool:
        if self.kind is CheckKind.EQUALITY:
            return abs(self.slack) <= self.margin
        return self.slack >= -self.margin

    @property
    def holds(self) -> bool:
        return self.primary_holds and (self.paired is None or self.paired.holds)

    @property
    def worst_slack(self) -> float:
        """Smallest slack across the primary and paired results."""
        if self.paired is None:
            return self.slack
        return min(self.slack, self.paired.worst_slack)


@dataclass(frozen=True)
class FunctionPair:
    """Nonnegative f, g on [0, inf) with f(x) g(x) = x, audited on AUDIT_GRID."""

    f: RealFunction
    g: RealFunction
    label: str
    params: dict[str, float] = field(default_factory=dict)

    def __post_init__(self):
        for x in AUDIT_GRID:
            fx, gx = self.f(x), self.g(x)
            if not (math.isfinite(fx) and math.isfinite(gx)) or fx < 0 or gx < 0:
                raise InvalidFunctionPair(f"{self.label}: f or g negative or non-finite at x = {x}")
            if abs(fx * gx - x) > Tolerance.FUNCTION_PAIR * (1.0 + x):
                raise InvalidFunctionPair(f"{self.label}: f(x) g(x) = {fx * gx!r} at x = {x}")


def power_pair(t: float) -> FunctionPair:
    """f(x) = x^t, g(x) = x^(1 - t), 0 <= t <= 1 (0^0 = 1)."""
    if not 0.0 <= t <= 1.0:
        raise InvalidFunctionPair(f"power exponent t = {t} outside [0, 1]")
    return FunctionPair(
        f=lambda x: x**t,
        g=lambda x: x ** (1.0 - t),
        label=f"power(t={t})",
        params={"t": t},
    )
