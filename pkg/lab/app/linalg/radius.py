# lab/app/linalg/radius.py
"""
Numerical radius and spectral radius kernels.

omega(T) is computed as max over theta of lambda_max(Re(e^{i theta} T)):
a uniform theta grid (batched eigvalsh, closed form for 2x2) locates the
local maxima, and those that can still beat the grid maximum are refined
by golden-section search.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np

from app.constants import KernelConfig, RadiusConfig, Tolerance
from app.errors import NegativeEntry, NotHermitian
from app.linalg.eigen import hermitian_eigen
from app.linalg.matrix import ComplexMatrix, hermitian_defect, imag_part, real_part

INV_PHI = (math.sqrt(5) - 1) / 2  # 1 / phi
INV_PHI_SQUARE = (3 - math.sqrt(5)) / 2  # 1 / phi^2


def golden_section_max(f: Callable[[float], float], a: float, b: float, width: float) -> tuple[float, float]:
    """
    Golden-section search for the maximum of f on [a, b].

    Returns (x, f(x)) for the best point evaluated once the bracket is
    narrower than `width`.
    """
    a, b = min(a, b), max(a, b)
    h = b - a
    if h <= width:
        x = (a + b) / 2
        return x, f(x)

    n = int(math.ceil(math.log(width / h) / math.log(INV_PHI)))
    c = a + INV_PHI_SQUARE * h
    d = a + INV_PHI * h
    yc = f(c)
    yd = f(d)

    for _ in range(n - 1):
        if yc > yd:
            b = d
            d, yd = c, yc
            h = INV_PHI * h
            c = a + INV_PHI_SQUARE * h
            yc = f(c)
        else:
            a = c
            c, yc = d, yd
            h = INV_PHI * h
            d = a + INV_PHI * h
            yd = f(d)

    return (c, yc) if yc > yd else (d, yd)


def _grid_local_maxima(values: np.ndarray) -> list[int]:
    """Indices i with f[i] > f[i-1] and f[i] >= f[i+1], cyclically."""
    prev = np.roll(values, 1)
    nxt = np.roll(values, -1)
    idx = np.flatnonzero((values > prev) & (values >= nxt))
    best = int(np.argmax(values))
    if best not in idx:
        idx = np.append(idx, best)
    return [int(i) for i in idx]


def _top_eigenvalues(re: np.ndarray, im: np.ndarray, thetas: np.ndarray) -> np.ndarray:
    """lambda_max(cos(theta) re - sin(theta) im) for every theta."""
    stack = np.cos(thetas)[:, None, None] * re - np.sin(thetas)[:, None, None] * im
    if re.shape[0] == 2:
        a = stack[:, 0, 0].real
        d = stack[:, 1, 1].real
        return (a + d) / 2 + np.hypot((a - d) / 2, np.abs(stack[:, 0, 1]))
    return np.linalg.eigvalsh(stack)[:, -1]


def _sample_grid(re: np.ndarray, im: np.ndarray, thetas: np.ndarray, lipschitz: float) -> np.ndarray:
    """
    f on the uniform grid, -inf where it provably stays below the grid maximum.

    Every COARSE_STRIDE-th point is evaluated first. A coarse cell is filled
    in unless both of its ends plus lipschitz * (half the cell + one step)
    fall short of the coarse maximum; points of a skipped cell and their
    refinement brackets then lie below that maximum.
    """
    resolution = thetas.size
    step = 2.0 * np.pi / resolution
    grid = np.full(resolution, -np.inf)
    coarse = np.arange(0, resolution, RadiusConfig.COARSE_STRIDE)
    grid[coarse] = _top_eigenvalues(re, im, thetas[coarse])
    top = float(grid[coarse].max())

    ends = np.append(coarse[1:], resolution)
    reach = np.maximum(grid[coarse], grid[ends % resolution]) + lipschitz * ((ends - coarse) * step / 2 + step)
    fine = [np.arange(start + 1, end) for start, end, keep in zip(coarse, ends, reach >= top) if keep and end > start + 1]
    if fine:
        idx = np.concatenate(fine)
        grid[idx] = _top_eigenvalues(re, im, thetas[idx])
    return grid


def numerical_radius(m: ComplexMatrix, resolution: int = RadiusConfig.DEFAULT_RESOLUTION) -> float:
    """
    omega(m) = sup over unit x of |<m x, x>|.

    f(theta) = lambda_max(cos(theta) Re m - sin(theta) Im m) is sampled on
    `resolution` points of [0, 2 pi); every grid-local maximum that can still
    beat the grid maximum is refined by golden-section search down to
    theta-width 1e-12. |f'| <= ||m||, which bounds what an unrefined point or
    a skipped grid cell can reach. A flat grid (circular numerical range
    centred at 0) returns the grid value directly.
    """
    if resolution < 3:
        raise ValueError("resolution must be at least 3")
    m.require_square()
    if m.shape == (1, 1):
        return float(abs(m.data[0, 0]))
    re = real_part(m).data
    im = imag_part(m).data
    lipschitz = float(np.linalg.norm(m.data, 2))

    thetas = np.arange(resolution) * (2.0 * np.pi / resolution)
    grid = _sample_grid(re, im, thetas, lipschitz)
    known = grid[np.isfinite(grid)]
    top = float(known.max())
    if known.size == resolution and float(top - known.min()) <= Tolerance.FLAT_GRID * (1.0 + abs(top)):
        return max(top, 0.0)

    def f(theta: float) -> float:
        return float(_top_eigenvalues(re, im, np.array([theta]))[0])

    step = 2.0 * np.pi / resolution
    best = top
    for i in _grid_local_maxima(grid):
        if grid[i] + lipschitz * step < top:
            continue
        centre = float(thetas[i])
        _, value = golden_section_max(f, centre - step, centre + step, Tolerance.GOLDEN_WIDTH)
        best = max(best, value)
    return max(best, 0.0)


def radius_2x2_real(a: float, b: float, c: float, d: float) -> float:
    """
    Closed form (|a + d| + sqrt((a - d)^2 + (b + c)^2)) / 2, as written.

    Equals omega([[a, b], [c, d]]) only when the matrix has real spectrum;
    see has_real_spectrum_2x2 and radius_2x2_real_exact.
    """
    return (abs(a + d) + math.sqrt((a - d) ** 2 + (b + c) ** 2)) / 2


def has_real_spectrum_2x2(a: float, b: float, c: float, d: float) -> bool:
    """Discriminant (a - d)^2 + 4bc >= 0."""
    return (a - d) ** 2 + 4 * b * c >= 0


def radius_2x2_real_exact(a: float, b: float, c: float, d: float) -> float:
    """
    omega of a real 2x2 matrix from its elliptical numerical range.

    The range is an axis-aligned ellipse centred at (a + d) / 2 with
    horizontal semi-axis h = sqrt((a - d)^2 + (b + c)^2) / 2 and vertical
    semi-axis v = |b - c| / 2.
    """
    centre = (a + d) / 2
    h = math.sqrt((a - d) ** 2 + (b + c) ** 2) / 2
    v = abs(b - c) / 2
    best = abs(centre) + h
    if v > h:
        gap = v * v - h * h
        u = h * centre / gap
        if abs(u) <= 1:
            best = max(best, v * math.sqrt(1 + centre * centre / gap))
    return best


def spectral_radius_2x2_nonneg(a: float, b: float, c: float, d: float) -> float:
    """Perron root ((a + d) + sqrt((a - d)^2 + 4bc)) / 2 of a nonnegative 2x2 matrix."""
    if min(a, b, c, d) < 0:
        raise NegativeEntry(f"({a}, {b}, {c}, {d})")
    return ((a + d) + math.sqrt((a - d) ** 2 + 4 * b * c)) / 2


def spectral_radius_hermitian(m: ComplexMatrix) -> float:
    """max |lambda_i| of a Hermitian matrix."""
    m.require_square()
    if hermitian_defect(m) > Tolerance.KERNEL * (1.0 + m.frobenius_norm()):
        raise NotHermitian("spectral_radius_hermitian")
    decomp = hermitian_eigen(m, method=KernelConfig.get_eigen_method())
    return max(abs(decomp.max_value), abs(decomp.min_value))
