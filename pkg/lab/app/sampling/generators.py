# lab/app/sampling/generators.py
"""
Seeded random matrices for every operator class the catalog needs, and the
projections that pull a perturbed matrix back into its class.

All samples are 2n x 2n so they partition into n x n blocks.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

import numpy as np

from app.constants import Applicability, MatrixClass, SweepConfig
from app.linalg.matrix import ComplexMatrix

Generator = Callable[[np.random.Generator, int], np.ndarray]

SEED_MODULUS = 2**64


@dataclass(frozen=True)
class SampleSpec:
    matrix_class: MatrixClass
    block_dim: int = SweepConfig.DEFAULT_BLOCK_DIM
    scale: float = 1.0
    seed: int = SweepConfig.DEFAULT_SEED

    def __post_init__(self):
        object.__setattr__(self, "matrix_class", MatrixClass(self.matrix_class))
        if self.block_dim < 1:
            raise ValueError(f"block_dim must be positive, got {self.block_dim}")
        if not math.isfinite(self.scale) or self.scale <= 0:
            raise ValueError(f"scale must be positive, got {self.scale}")

    @property
    def dim(self) -> int:
        return 2 * self.block_dim


def seed_entropy(seed: int) -> int:
    """Map any integer seed onto the nonnegative 64-bit range SeedSequence accepts."""
    return seed % SEED_MODULUS


def trial_rng(seed: int, index: int) -> np.random.Generator:
    """Independent stream for trial / restart `index` of a seeded campaign."""
    return np.random.default_rng(np.random.SeedSequence([seed_entropy(seed), index]))


# ----------------------------------------------------------------------
# Constructions
# ----------------------------------------------------------------------


def complex_normal(rng: np.random.Generator, shape: tuple[int, ...]) -> np.ndarray:
    """i.i.d. standard complex normal entries (E|z|^2 = 1)."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / math.sqrt(2.0)


def _hermitian_part(d: np.ndarray) -> np.ndarray:
    return (d + d.conj().T) / 2.0


def _skew_part(d: np.ndarray) -> np.ndarray:
    """Im d as a Hermitian matrix, (d - d*) / 2i."""
    return (d - d.conj().T) / 2j


def _ginibre(rng: np.random.Generator, dim: int) -> np.ndarray:
    return complex_normal(rng, (dim, dim))


def _hermitian(rng: np.random.Generator, dim: int) -> np.ndarray:
    return _hermitian_part(_ginibre(rng, dim))


def _psd(rng: np.random.Generator, dim: int) -> np.ndarray:
    g = _ginibre(rng, dim)
    return _hermitian_part(g @ g.conj().T)


def _accretive(rng: np.random.Generator, dim: int) -> np.ndarray:
    return _psd(rng, dim) + 1j * _hermitian(rng, dim)


def _accretive_dissipative(rng: np.random.Generator, dim: int) -> np.ndarray:
    return _psd(rng, dim) + 1j * _psd(rng, dim)


def haar_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Q from QR of a Ginibre matrix, phases fixed so the law is Haar."""
    q, r = np.linalg.qr(_ginibre(rng, dim))
    d = np.diag(r)
    return q * (d / np.abs(d))


def _normal(rng: np.random.Generator, dim: int) -> np.ndarray:
    u = haar_unitary(rng, dim)
    eigenvalues = complex_normal(rng, (dim,))
    return (u * eigenvalues) @ u.conj().T


def _square_zero_from(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    """x y* after removing the x-component of y, so that (x y*)^2 = O."""
    xx = np.vdot(x, x).real
    if xx > 0:
        y = y - x * (np.vdot(x, y) / xx)
    return np.outer(x, y.conj())


def _square_zero(rng: np.random.Generator, dim: int) -> np.ndarray:
    x = complex_normal(rng, (dim,))
    y = complex_normal(rng, (dim,))
    return _square_zero_from(x, y)


def _shift_positive(m: np.ndarray, extra: float) -> np.ndarray:
    low = float(np.linalg.eigvalsh(m)[0])
    return m + (max(-low, 0.0) + extra) * np.eye(m.shape[0])


def _positive_hermitian_offdiag(rng: np.random.Generator, dim: int) -> np.ndarray:
    n = dim // 2
    x, y, w = (_hermitian(rng, n) for _ in range(3))
    m = np.block([[x, y], [y, w]])
    return _shift_positive(m, abs(float(rng.standard_normal())))


_GENERATORS: dict[MatrixClass, Generator] = {
    MatrixClass.GINIBRE: _ginibre,
    MatrixClass.HERMITIAN: _hermitian,
    MatrixClass.PSD: _psd,
    MatrixClass.POSITIVE_BLOCK: _psd,
    MatrixClass.ACCRETIVE: _accretive,
    MatrixClass.ACCRETIVE_DISSIPATIVE: _accretive_dissipative,
    MatrixClass.NORMAL: _normal,
    MatrixClass.SQUARE_ZERO: _square_zero,
    MatrixClass.POSITIVE_HERMITIAN_OFFDIAG: _positive_hermitian_offdiag,
}


def draw(matrix_class: MatrixClass, block_dim: int, rng: np.random.Generator, scale: float = 1.0) -> ComplexMatrix:
    """One 2n x 2n sample from an existing generator stream."""
    return ComplexMatrix(_GENERATORS[MatrixClass(matrix_class)](rng, 2 * block_dim) * scale)


def sample(spec: SampleSpec) -> ComplexMatrix:
    """Deterministic sample for a spec."""
    rng = np.random.default_rng(seed_entropy(spec.seed))
    return draw(spec.matrix_class, spec.block_dim, rng, spec.scale)


# ----------------------------------------------------------------------
# Projections
# ----------------------------------------------------------------------


def _clamp_psd(h: np.ndarray) -> np.ndarray:
    values, vectors = np.linalg.eigh(_hermitian_part(h))
    return (vectors * np.clip(values, 0.0, None)) @ vectors.conj().T


def _project_normal(d: np.ndarray) -> np.ndarray:
    values, vectors = np.linalg.eig(d)
    q, _ = np.linalg.qr(vectors)
    return (q * values) @ q.conj().T


def _project_square_zero(d: np.ndarray) -> np.ndarray:
    u, s, vh = np.linalg.svd(d)
    return _square_zero_from(u[:, 0] * s[0], vh[0].conj())


def _project_positive_hermitian_offdiag(d: np.ndarray) -> np.ndarray:
    n = d.shape[0] // 2
    x = _hermitian_part(d[:n, :n])
    y = _hermitian_part((d[:n, n:] + d[n:, :n]) / 2.0)
    w = _hermitian_part(d[n:, n:])
    return _shift_positive(np.block([[x, y], [y, w]]), 0.0)


_PROJECTIONS: dict[MatrixClass, Callable[[np.ndarray], np.ndarray]] = {
    MatrixClass.GINIBRE: lambda d: d,
    MatrixClass.HERMITIAN: _hermitian_part,
    MatrixClass.PSD: _clamp_psd,
    MatrixClass.POSITIVE_BLOCK: _clamp_psd,
    MatrixClass.ACCRETIVE: lambda d: _clamp_psd(_hermitian_part(d)) + 1j * _skew_part(d),
    MatrixClass.ACCRETIVE_DISSIPATIVE: lambda d: _clamp_psd(_hermitian_part(d)) + 1j * _clamp_psd(_skew_part(d)),
    MatrixClass.NORMAL: _project_normal,
    MatrixClass.SQUARE_ZERO: _project_square_zero,
    MatrixClass.POSITIVE_HERMITIAN_OFFDIAG: _project_positive_hermitian_offdiag,
}


def project(matrix_class: MatrixClass, m: ComplexMatrix) -> ComplexMatrix:
    """Nearby member of the class (symmetrise, clamp eigenvalues or rebuild)."""
    return ComplexMatrix(_PROJECTIONS[MatrixClass(matrix_class)](np.array(m.data)))


_DEFAULT_CLASS: dict[Applicability, MatrixClass] = {
    Applicability.ANY: MatrixClass.GINIBRE,
    Applicability.HERMITIAN: MatrixClass.HERMITIAN,
    Applicability.POSITIVE: MatrixClass.PSD,
    Applicability.ACCRETIVE_DISSIPATIVE: MatrixClass.ACCRETIVE_DISSIPATIVE,
    Applicability.POSITIVE_HERMITIAN_OFFDIAG: MatrixClass.POSITIVE_HERMITIAN_OFFDIAG,
}


def default_class(applicability: Applicability) -> MatrixClass:
    """Sampler class whose members always satisfy the applicability."""
    return _DEFAULT_CLASS[applicability]
