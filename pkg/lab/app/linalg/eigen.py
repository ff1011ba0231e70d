# lab/app/linalg/eigen.py
"""
Hermitian eigensolvers.

Two backends share one contract (descending real eigenvalues, unitary
eigenvector matrix):
  - cyclic complex Jacobi with unitary 2x2 rotations, small and verifiable;
  - LAPACK through numpy.linalg.eigh, used by the kernels for speed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from app.constants import EigenMethod, Tolerance
from app.errors import NoConvergence, NotHermitian
from app.linalg.matrix import ComplexMatrix, hermitian_defect


@dataclass(frozen=True)
class EigenDecomposition:
    values: np.ndarray  # real, sorted descending
    vectors: ComplexMatrix  # columns are unit eigenvectors

    def reconstruct(self) -> ComplexMatrix:
        v = self.vectors.data
        return ComplexMatrix((v * self.values) @ v.conj().T)

    @property
    def max_value(self) -> float:
        return float(self.values[0])

    @property
    def min_value(self) -> float:
        return float(self.values[-1])


def _off_diagonal_mass(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.linalg.norm(off))


def _jacobi(a: np.ndarray, frob: float) -> tuple[np.ndarray, np.ndarray]:
    """
    Cyclic complex Jacobi on a Hermitian copy `a`.

    For the pivot (p, q) the phase u = a_pq / |a_pq| is absorbed into column q,
    leaving a real symmetric 2x2 problem solved by the classical rotation.
    The combined unitary acting on columns (p, q) is
        J = [[c, s], [-s * conj(u), c * conj(u)]].
    """
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    threshold = Tolerance.JACOBI_OFFDIAG * (1.0 + frob)

    for _sweep in range(Tolerance.JACOBI_MAX_SWEEPS):
        if _off_diagonal_mass(a) <= threshold:
            return a, v
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                h = abs(apq)
                if h == 0.0:
                    continue
                u = apq / h
                app = a[p, p].real
                aqq = a[q, q].real
                tau = (aqq - app) / (2.0 * h)
                t = (1.0 if tau >= 0.0 else -1.0) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                rot = np.array([[c, s], [-s * u.conjugate(), c * u.conjugate()]], dtype=np.complex128)

                idx = [p, q]
                a[:, idx] = a[:, idx] @ rot
                a[idx, :] = rot.conj().T @ a[idx, :]
                a[p, q] = 0.0
                a[q, p] = 0.0
                a[p, p] = app - t * h
                a[q, q] = aqq + t * h
                v[:, idx] = v[:, idx] @ rot

    if _off_diagonal_mass(a) <= threshold:
        return a, v
    raise NoConvergence(f"off-diagonal mass {_off_diagonal_mass(a):.3e} after {Tolerance.JACOBI_MAX_SWEEPS} sweeps")


def hermitian_eigen(m: ComplexMatrix, method: EigenMethod = EigenMethod.JACOBI) -> EigenDecomposition:
    """
    Eigendecomposition of a Hermitian matrix.

    Raises NotHermitian when ||m - m*||_F exceeds 1e-10 * (1 + ||m||_F), and
    NoConvergence when the Jacobi sweep cap is reached.
    """
    m.require_square()
    frob = m.frobenius_norm()
    defect = hermitian_defect(m)
    if defect > Tolerance.KERNEL * (1.0 + frob):
        raise NotHermitian(f"||m - m*||_F = {defect:.3e}")

    d = m.data
    # exact Hermitian copy so both backends see the same input
    herm = (d + d.conj().T) / 2.0

    if EigenMethod(method) is EigenMethod.LAPACK:
        values, vectors = np.linalg.eigh(herm)
    else:
        diag, vectors = _jacobi(herm.copy(), frob)
        values = np.diag(diag).real.copy()

    order = np.argsort(values, kind="stable")[::-1]
    return EigenDecomposition(values=np.asarray(values, dtype=np.float64)[order], vectors=ComplexMatrix(vectors[:, order]))
