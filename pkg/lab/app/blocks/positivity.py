# lab/app/blocks/positivity.py
"""
Positivity tools for 2x2 operator matrices: congruence scaling and the
sampled Cauchy-Schwarz characterisation of [[A, C*], [C, B]] >= O.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from app.blocks.block import Block2x2
from app.constants import Tolerance
from app.errors import DimensionMismatch, NonpositiveScale, NotPSDInput
from app.linalg.matrix import ComplexMatrix, hermitian_defect
from app.linalg.spectral import lambda_min, operator_norm


@dataclass(frozen=True)
class WitnessRecord:
    """Unit vectors x, y with |<Cx, y>|^2 > <Ax, x><By, y>; slack is negative."""

    x: np.ndarray
    y: np.ndarray
    slack: float
    trial: int


def congruence_scale(b: Block2x2, t: float) -> Block2x2:
    """D T D with D = diag(sqrt(t) I, I / sqrt(t)), i.e. (t T11, T12, T21, T22 / t)."""
    if not math.isfinite(t) or t <= 0:
        raise NonpositiveScale(f"t = {t}")
    return Block2x2(b.t11 * t, b.t12, b.t21, b.t22 / t)


def _require_psd(m: ComplexMatrix, name: str) -> None:
    m.require_square()
    if hermitian_defect(m) > Tolerance.PSD * (1.0 + m.frobenius_norm()):
        raise NotPSDInput(f"{name} is not Hermitian")
    if lambda_min(m) < -Tolerance.PSD * (1.0 + operator_norm(m)):
        raise NotPSDInput(f"{name} has a negative eigenvalue")


def random_unit_vectors(rng: np.random.Generator, count: int, dim: int) -> np.ndarray:
    """Rows are independent uniformly distributed unit vectors in C^dim."""
    z = rng.standard_normal((count, dim)) + 1j * rng.standard_normal((count, dim))
    norms = np.linalg.norm(z, axis=1, keepdims=True)
    return z / norms


def cauchy_schwarz_witness(
    a: ComplexMatrix,
    b: ComplexMatrix,
    c: ComplexMatrix,
    trials: int,
    seed: int,
) -> WitnessRecord | None:
    """
    Search for a violation of |<Cx, y>|^2 <= <Ax, x><By, y>.

    A violation proves [[A, C*], [C, B]] is not positive. No violation is
    only evidence of positivity; classify on the assembled matrix decides.
    """
    if trials <= 0:
        raise ValueError("trials must be positive")
    _require_psd(a, "a")
    _require_psd(b, "b")
    if c.shape != (b.rows, a.rows):
        raise DimensionMismatch(f"c is {c.rows}x{c.cols}, expected {b.rows}x{a.rows}")

    rng = np.random.default_rng(seed)
    xs = random_unit_vectors(rng, trials, a.rows)
    ys = random_unit_vectors(rng, trials, b.rows)

    # <Mu, v> = v* M u, one row per trial
    ax = np.einsum("ki,ki->k", xs.conj(), xs @ a.data.T).real
    by = np.einsum("ki,ki->k", ys.conj(), ys @ b.data.T).real
    cxy = np.einsum("ki,ki->k", ys.conj(), xs @ c.data.T)

    bound = ax * by
    slack = bound - np.abs(cxy) ** 2
    violating = np.flatnonzero(slack < -Tolerance.WITNESS * (1.0 + np.abs(bound)))
    if violating.size == 0:
        return None
    k = int(violating[0])
    return WitnessRecord(x=xs[k].copy(), y=ys[k].copy(), slack=float(slack[k]), trial=k)
