# lab/app/catalog/checks.py
"""
Executable norm and numerical-radius inequalities for 2x2 operator matrices.

Block naming: T = [[T1, T2], [T3, T4]] = [[X, Y], [Z, W]] with Cartesian
parts Re T = [[A11, A12], [A21, A22]] and Im T = [[B11, B12], [B21, B22]].

Every check takes a Block2x2 (pair checks take two matrices) and returns a
CheckResult. Checks restricted to an operator class raise NotApplicable
when called directly on a matrix outside it.
"""

from __future__ import annotations

import functools
import math
from typing import Callable

import numpy as np

from app.blocks.block import Block2x2, antidiagonal_part, assemble, diagonal_part, has_hermitian_offdiagonal
from app.blocks.cartesian import cartesian
from app.blocks.classify import classify
from app.catalog.results import CheckResult, FunctionPair, RealFunction, power_pair
from app.constants import Applicability, CheckKind, Tolerance
from app.errors import NotApplicable
from app.linalg.matrix import ComplexMatrix, adjoint, imag_part, real_part
from app.linalg.radius import numerical_radius, spectral_radius_2x2_nonneg, spectral_radius_hermitian
from app.linalg.spectral import gram, operator_norm, spectral_function

Evaluator = Callable[..., CheckResult]


def _tol(tol: float | None) -> float:
    return Tolerance.get_check_tolerance() if tol is None else tol


def _upper(lhs: float, rhs: float, tol: float | None, paired: CheckResult | None = None) -> CheckResult:
    return CheckResult(lhs=float(lhs), rhs=float(rhs), tol=_tol(tol), kind=CheckKind.UPPER, paired=paired)


Operand = Block2x2 | ComplexMatrix


def whole(x: Operand) -> ComplexMatrix:
    """The full matrix behind a block or plain operand."""
    return assemble(x) if isinstance(x, Block2x2) else x


def admits(x: Operand, applicability: Applicability) -> bool:
    if applicability is Applicability.ANY:
        return True
    offdiag_hermitian = isinstance(x, Block2x2) and has_hermitian_offdiagonal(x)
    return classify(whole(x)).admits(applicability, offdiag_hermitian)


def requires(applicability: Applicability) -> Callable[[Evaluator], Evaluator]:
    """
    Guard an evaluator with its operator-class precondition.

    The unguarded evaluator stays reachable as `.unchecked` for callers that
    have already classified the input.
    """

    def decorate(fn: Evaluator) -> Evaluator:
        @functools.wraps(fn)
        def checked(b: Operand, *args, **kwargs) -> CheckResult:
            if not admits(b, applicability):
                raise NotApplicable(f"{fn.__name__} needs {applicability.value}")
            return fn(b, *args, **kwargs)

        checked.applicability = applicability  # type: ignore[attr-defined]
        checked.unchecked = fn  # type: ignore[attr-defined]
        return checked

    return decorate


# ----------------------------------------------------------------------
# Helpers
# ----------------------------------------------------------------------


@functools.lru_cache(maxsize=1024)
def _omega_of(shape: tuple[int, int], raw: bytes) -> float:
    return numerical_radius(ComplexMatrix(np.frombuffer(raw, dtype=np.complex128).reshape(shape)))


def _omega(m: ComplexMatrix) -> float:
    # the same T, X, W recur across checks of one sample
    return _omega_of(m.shape, m.data.tobytes())


def _norm(m: ComplexMatrix) -> float:
    return operator_norm(m)


def _abs_fn(m: ComplexMatrix, fn: RealFunction) -> ComplexMatrix:
    """fn(|m|^2) = fn(m* m)."""
    return spectral_function(gram(m), fn)


def _adj_abs_fn(m: ComplexMatrix, fn: RealFunction) -> ComplexMatrix:
    """fn(|m*|^2) = fn(m m*)."""
    return spectral_function(gram(adjoint(m)), fn)


def _sum_norm(p: ComplexMatrix, q: ComplexMatrix) -> float:
    return _norm(p + q)


def _perron_of_norms(b: Block2x2) -> float:
    """r([[||T1||, ||T2||], [||T3||, ||T4||]])."""
    return spectral_radius_2x2_nonneg(*(_norm(x) for x in b.blocks()))


# ----------------------------------------------------------------------
# Norm / numerical radius equivalence
# ----------------------------------------------------------------------


@requires(Applicability.ANY)
def check_norm_radius_equiv(b: Operand, tol: float | None = None) -> CheckResult:
    """||T|| / 2 <= omega(T), paired with omega(T) <= ||T||."""
    t = whole(b)
    w = _omega(t)
    n = _norm(t)
    return _upper(n / 2, w, tol, paired=_upper(w, n, tol))


@requires(Applicability.ANY)
def check_real_imag_parts(b: Operand, tol: float | None = None) -> CheckResult:
    """max(||Re T||, ||Im T||) <= omega(T)."""
    t = whole(b)
    lhs = max(_norm(real_part(t)), _norm(imag_part(t)))
    return _upper(lhs, _omega(t), tol)


# ----------------------------------------------------------------------
# Numerical radius of operator matrices
# ----------------------------------------------------------------------


@requires(Applicability.ANY)
def check_shebr_lower(b: Block2x2, tol: float | None = None) -> CheckResult:
    """max(w(X), w(W), w(Y + Z) / 2, w(Y - Z) / 2) <= w(T)."""
    x, y, z, w = b.blocks()
    lhs = max(_omega(x), _omega(w), _omega(y + z) / 2, _omega(y - z) / 2)
    return _upper(lhs, _omega(assemble(b)), tol)


@requires(Applicability.ANY)
def check_shebr_upper(b: Block2x2, tol: float | None = None) -> CheckResult:
    """w(T) <= max(w(X), w(W)) + (w(Y + Z) + w(Y - Z)) / 2."""
    x, y, z, w = b.blocks()
    rhs = max(_omega(x), _omega(w)) + (_omega(y + z) + _omega(y - z)) / 2
    return _upper(_omega(assemble(b)), rhs, tol)


@requires(Applicability.ANY)
def check_pinching(b: Block2x2, tol: float | None = None) -> CheckResult:
    """max(w(diag part), w(antidiagonal part)) <= w(T)."""
    lhs = max(_omega(assemble(diagonal_part(b))), _omega(assemble(antidiagonal_part(b))))
    return _upper(lhs, _omega(assemble(b)), tol)


@requires(Applicability.ANY)
def check_lemma04(b: Block2x2, tol: float | None = None) -> CheckResult:
    """||A12|| <= w(T)."""
    parts = cartesian(b)
    return _upper(_norm(parts.a12), _omega(assemble(b)), tol)


def _offdiagonal_square_sum(b: Block2x2) -> float:
    """|| |T2|^2 + |T3*|^2 ||."""
    return _norm(gram(b.t12) + gram(adjoint(b.t21)))


@requires(Applicability.ANY)
def check_thm06(b: Block2x2, tol: float | None = None) -> CheckResult:
    """(1/4) || |T2|^2 + |T3*|^2 || <= w^2(T)."""
    w = _omega(assemble(b))
    return _upper(_offdiagonal_square_sum(b) / 4, w * w, tol)


@requires(Applicability.ACCRETIVE_DISSIPATIVE)
def check_thm08(b: Block2x2, tol: float | None = None) -> CheckResult:
    """|| |T2|^2 + |T3*|^2 || <= w^2(T) for accretive-dissipative T."""
    w = _omega(assemble(b))
    return _upper(_offdiagonal_square_sum(b), w * w, tol)


@requires(Applicability.ACCRETIVE_DISSIPATIVE)
def check_w12_arith(b: Block2x2, tol: float | None = None) -> CheckResult:
    """w(T2) <= (1/2) ||A11 + A22 + B11 + B22||."""
    p = cartesian(b)
    return _upper(_omega(b.t12), _norm(p.a11 + p.a22 + p.b11 + p.b22) / 2, tol)


@requires(Applicability.ACCRETIVE_DISSIPATIVE)
def check_w12_geom(b: Block2x2, tol: float | None = None) -> CheckResult:
    """w(T2) <= sqrt(||A11 + B11|| ||A22 + B22||)."""
    p = cartesian(b)
    return _upper(_omega(b.t12), math.sqrt(_norm(p.a11 + p.b11) * _norm(p.a22 + p.b22)), tol)


def _offdiagonal_parts_bound(d11: ComplexMatrix, d12: ComplexMatrix, d22: ComplexMatrix) -> float:
    """max(||D11||, ||D22||, ||D12 + D12*|| / 2, ||D12 - D12*|| / 2)."""
    d12_adj = adjoint(d12)
    return max(_norm(d11), _norm(d22), _norm(d12 + d12_adj) / 2, _norm(d12 - d12_adj) / 2)


@requires(Applicability.ANY)
def check_alpha_beta(b: Block2x2, tol: float | None = None) -> CheckResult:
    """max(alpha, beta) <= w(T), alpha from the blocks of Re T and beta from Im T."""
    p = cartesian(b)
    alpha = _offdiagonal_parts_bound(p.a11, p.a12, p.a22)
    beta = _offdiagonal_parts_bound(p.b11, p.b12, p.b22)
    return _upper(max(alpha, beta), _omega(assemble(b)), tol)


@requires(Applicability.ACCRETIVE_DISSIPATIVE)
def check_corollary_2max(b: Block2x2, tol: float | None = None) -> CheckResult:
    """2 max(||A12||, ||B12||) <= w(T)."""
    p = cartesian(b)
    return _upper(2 * max(_norm(p.a12), _norm(p.b12)), _omega(assemble(b)), tol)


# ----------------------------------------------------------------------
# Operator norm of operator matrices
# ----------------------------------------------------------------------


@requires(Applicability.POSITIVE)
def check_eq8(b: Block2x2, tol: float | None = None) -> CheckResult:
    """2 ||A12|| <= ||T|| for positive T."""
    p = cartesian(b)
    return _upper(2 * _norm(p.a12), _norm(assemble(b)), tol)


@requires(Applicability.POSITIVE)
def check_eq09(b: Block2x2, tol: float | None = None) -> CheckResult:
    """||T|| <= ||A11|| + ||A22|| for positive T."""
    p = cartesian(b)
    return _upper(_norm(assemble(b)), _norm(p.a11) + _norm(p.a22), tol)


@requires(Applicability.POSITIVE_HERMITIAN_OFFDIAG)
def check_hiro(b: Block2x2, tol: float | None = None) -> CheckResult:
    """||T|| <= ||T1 + T4|| for positive T with Hermitian T2."""
    return _upper(_norm(assemble(b)), _sum_norm(b.t11, b.t22), tol)


@requires(Applicability.ANY)
def check_spectral_norm_bound(b: Block2x2, tol: float | None = None) -> CheckResult:
    """||T|| <= r(norm matrix of Re T) + r(norm matrix of Im T)."""
    p = cartesian(b)
    rhs = _perron_of_norms(p.real) + _perron_of_norms(p.imag)
    return _upper(_norm(assemble(b)), rhs, tol)


@requires(Applicability.HERMITIAN)
def check_eqr(b: Block2x2, tol: float | None = None) -> CheckResult:
    """r(T) <= r([[||T1||, ||T2||], [||T3||, ||T4||]]) for Hermitian T."""
    return _upper(spectral_radius_hermitian(assemble(b)), _perron_of_norms(b), tol)


def _weighted_bound(b: Block2x2, pair: FunctionPair) -> float:
    """
    (1/2) max(||f(|T1|^2) + f(|T3|^2)||, ||f(|T4|^2) + f(|T2|^2)||)
    + (1/2) max(||g(|T1*|^2) + g(|T2*|^2)||, ||g(|T4*|^2) + g(|T3*|^2)||).
    """
    t1, t2, t3, t4 = b.blocks()
    f1, f2, f3, f4 = (_abs_fn(x, pair.f) for x in (t1, t2, t3, t4))
    g1, g2, g3, g4 = (_adj_abs_fn(x, pair.g) for x in (t1, t2, t3, t4))
    right = max(_sum_norm(f1, f3), _sum_norm(f4, f2))
    left = max(_sum_norm(g1, g2), _sum_norm(g4, g3))
    return (right + left) / 2


def _require_unit_interval(t: float) -> None:
    if not 0.0 <= t <= 1.0:
        raise ValueError(f"t = {t} outside [0, 1]")


@requires(Applicability.ANY)
def check_thm1_fg(b: Block2x2, pair: FunctionPair, tol: float | None = None) -> CheckResult:
    """||T|| <= weighted bound built from f(|Ti|^2) and g(|Ti*|^2)."""
    return _upper(_norm(assemble(b)), _weighted_bound(b, pair), tol)


@requires(Applicability.ANY)
def check_thm1(b: Block2x2, t: float, tol: float | None = None) -> CheckResult:
    """||T|| <= weighted bound with |Ti|^(2t) and |Ti*|^(2(1 - t))."""
    _require_unit_interval(t)
    return _upper(_norm(assemble(b)), _weighted_bound(b, power_pair(t)), tol)


@requires(Applicability.ANY)
def probe_thm1_printed(b: Block2x2, t: float, tol: float | None = None) -> CheckResult:
    """
    The weighted bound with the adjoint sides paired (T1*, T3*) and (T4*, T2*).

    Fails on T = [[1, 1], [0, 0]] at t = 1/2.
    """
    _require_unit_interval(t)
    t1, t2, t3, t4 = b.blocks()
    power = lambda x: x**t  # noqa: E731
    co_power = lambda x: x ** (1.0 - t)  # noqa: E731
    right = max(
        _sum_norm(_abs_fn(t1, power), _abs_fn(t3, power)),
        _sum_norm(_abs_fn(t4, power), _abs_fn(t2, power)),
    )
    left = max(
        _sum_norm(_adj_abs_fn(t1, co_power), _adj_abs_fn(t3, co_power)),
        _sum_norm(_adj_abs_fn(t4, co_power), _adj_abs_fn(t2, co_power)),
    )
    return _upper(_norm(assemble(b)), (right + left) / 2, tol)


@requires(Applicability.ANY)
def check_thm2(b: Block2x2, pair: FunctionPair, tol: float | None = None) -> CheckResult:
    """
    ||T|| <= (1/2)(||f^2(|T1|) + f^2(|T3|)|| + ||g^2(|T1*|) + g^2(|T2*|)||
                  + ||f^2(|T2|) + f^2(|T4|)|| + ||g^2(|T3*|) + g^2(|T4*|)||).
    """
    f_sq = lambda x: pair.f(math.sqrt(x)) ** 2  # noqa: E731
    g_sq = lambda x: pair.g(math.sqrt(x)) ** 2  # noqa: E731
    t1, t2, t3, t4 = b.blocks()
    f1, f2, f3, f4 = (_abs_fn(x, f_sq) for x in (t1, t2, t3, t4))
    g1, g2, g3, g4 = (_adj_abs_fn(x, g_sq) for x in (t1, t2, t3, t4))
    rhs = (_sum_norm(f1, f3) + _sum_norm(g1, g2) + _sum_norm(f2, f4) + _sum_norm(g3, g4)) / 2
    return _upper(_norm(assemble(b)), rhs, tol)


def check_circulant_equality(
    t1: ComplexMatrix, t2: ComplexMatrix, t: float = 0.5, tol: float | None = None
) -> CheckResult:
    """
    max(||T1 + T2||, ||T1 - T2||) = ||[[T1, T2], [T2, T1]]||, paired with
    ||[[T1, T2], [T2, T1]]|| <= (1/2)(|| |T1|^(2t) + |T2|^(2t) || + || |T1*|^(2(1-t)) + |T2*|^(2(1-t)) ||).
    """
    _require_unit_interval(t)
    norm_block = _norm(assemble(Block2x2(t1, t2, t2, t1)))
    lhs = max(_norm(t1 + t2), _norm(t1 - t2))

    power = lambda x: x**t  # noqa: E731
    co_power = lambda x: x ** (1.0 - t)  # noqa: E731
    bound = (
        _sum_norm(_abs_fn(t1, power), _abs_fn(t2, power))
        + _sum_norm(_adj_abs_fn(t1, co_power), _adj_abs_fn(t2, co_power))
    ) / 2
    return CheckResult(
        lhs=lhs,
        rhs=norm_block,
        tol=_tol(tol),
        kind=CheckKind.EQUALITY,
        paired=_upper(norm_block, bound, tol),
    )


def probe_false_triangle_abs(t1: ComplexMatrix, t2: ComplexMatrix, tol: float | None = None) -> CheckResult:
    """||T1 + T2|| <= || |T1| + |T2| ||, which fails in general."""
    half = lambda x: math.sqrt(x)  # noqa: E731
    rhs = _sum_norm(_abs_fn(t1, half), _abs_fn(t2, half))
    return _upper(_norm(t1 + t2), rhs, tol)


@requires(Applicability.ACCRETIVE_DISSIPATIVE)
def check_ad_cartesian_norm(b: Operand, tol: float | None = None) -> CheckResult:
    """||T||^2 <= ||Re T||^2 + ||Im T||^2 for accretive-dissipative T."""
    t = whole(b)
    n = _norm(t)
    return _upper(n * n, _norm(real_part(t)) ** 2 + _norm(imag_part(t)) ** 2, tol)


@requires(Applicability.ACCRETIVE_DISSIPATIVE)
def check_ad_norm_bound(b: Block2x2, tol: float | None = None) -> CheckResult:
    """||T|| <= sqrt((||A11|| + ||A22||)^2 + (||B11|| + ||B22||)^2)."""
    p = cartesian(b)
    rhs = math.hypot(_norm(p.a11) + _norm(p.a22), _norm(p.b11) + _norm(p.b22))
    return _upper(_norm(assemble(b)), rhs, tol)
