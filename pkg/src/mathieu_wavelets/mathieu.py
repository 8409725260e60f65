"""First-kind Mathieu functions of odd integer order.

The angular equation y'' + (a - 2q cos 2w) y = 0 has 2pi-periodic solutions
only for special values of ``a``.  For odd order nu these are

    ce_nu(w, q) = sum_l A_{2l+1} cos((2l+1) w)     with a = a_nu(q),
    se_nu(w, q) = sum_l B_{2l+1} sin((2l+1) w)     with a = b_nu(q),

and the harmonic coefficients satisfy a three-term recurrence that turns
the eigenproblem into a symmetric tridiagonal matrix with diagonal
(1 +/- q, 9, 25, ...) and off-diagonal q (+q on the first entry for the
cosine family, -q for the sine family).  Coefficient vectors are stored
unit-norm with the dominant entry positive, which makes the square
integral over a period equal to pi and matches the q -> 0 trigonometric
limits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .errors import (
    ConvergenceError,
    InvalidOrderError,
    ParameterError,
    ParityError,
    TruncationError,
)
from .tridiagonal import eigenvector, kth_eigenvalue, residual_norm

EVEN = "even"   # cosine family, characteristic value a_nu(q)
ODD = "odd"     # sine family, characteristic value b_nu(q)

_TAIL_RATIO = 1e-12          # tail-decay bound relative to max |c|
_STABILITY_RTOL = 1e-10      # |a_N - a_{N+10}| <= tol * max(1, |a|)
_MAX_MATRIX_ORDER = 20000


@dataclass(frozen=True)
class OrderParameterPair:
    """The (nu, q) pair selecting one member of the Mathieu family."""

    nu: int
    q: float

    def __post_init__(self):
        if not isinstance(self.nu, (int, np.integer)) or self.nu < 1 or self.nu % 2 == 0:
            raise InvalidOrderError(f"order must be a positive odd integer, got {self.nu!r}")
        q = float(self.q)
        if not math.isfinite(q):
            raise ParameterError(f"elliptic parameter must be finite, got {self.q!r}")
        if q < 0.0:
            raise ParameterError(f"negative elliptic parameter {q!r} is not supported")
        object.__setattr__(self, "q", q)


@dataclass(frozen=True)
class CharacteristicValue:
    """Eigenvalue a_nu(q) (even kind) or b_nu(q) (odd kind)."""

    a: float
    pair: OrderParameterPair
    kind: str
    matrix_order: int


@dataclass(frozen=True, eq=False)
class CoefficientVector:
    """Unit-norm harmonic coefficients c_l = A_{2l+1} (or B_{2l+1})."""

    parity: str
    coeffs: np.ndarray
    pair: OrderParameterPair
    a: float

    def __len__(self) -> int:
        return int(self.coeffs.size)


def _check_kind(kind: str) -> str:
    if kind not in (EVEN, ODD):
        raise ParameterError(f"kind must be {EVEN!r} or {ODD!r}, got {kind!r}")
    return kind


def _system(q: float, kind: str, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Tridiagonal truncation of the odd-harmonic recurrence."""
    d = (2.0 * np.arange(n) + 1.0) ** 2
    d[0] = 1.0 + q if kind == EVEN else 1.0 - q
    e = np.full(n - 1, q)
    return d, e


def default_matrix_order(pair: OrderParameterPair) -> int:
    """Empirical starting truncation order for (nu, q)."""
    k = (pair.nu + 1) // 2
    return max(25, k + math.ceil(2.0 * pair.q) + 15)


def characteristic_value(pair: OrderParameterPair, kind: str = EVEN,
                         n_matrix: int | None = None) -> CharacteristicValue:
    """Characteristic value of order nu: a_nu(q) for ``kind="even"``, b_nu(q) for ``"odd"``.

    The k-th smallest eigenvalue (k = (nu+1)/2) of the truncated recurrence
    matrix is accepted once enlarging the truncation from N to N+10 moves it
    by less than 1e-10 * max(1, |a|); otherwise N is doubled.
    """
    _check_kind(kind)
    k = (pair.nu + 1) // 2
    if n_matrix is not None and n_matrix < k + 8:
        raise ParameterError(
            f"matrix order {n_matrix} too small for order {pair.nu}; need at least {k + 8}")
    n = n_matrix if n_matrix is not None else default_matrix_order(pair)

    while True:
        d, e = _system(pair.q, kind, n)
        a_n = kth_eigenvalue(d, e, k)
        d10, e10 = _system(pair.q, kind, n + 10)
        a_n10 = kth_eigenvalue(d10, e10, k)
        if abs(a_n - a_n10) <= _STABILITY_RTOL * max(1.0, abs(a_n10)):
            return CharacteristicValue(a=a_n10, pair=pair, kind=kind, matrix_order=n + 10)
        n *= 2
        if n > _MAX_MATRIX_ORDER:
            raise ConvergenceError(
                f"characteristic value did not stabilise up to matrix order {n}")


def fourier_coefficients(pair: OrderParameterPair, a: CharacteristicValue,
                         length: int | None = None) -> CoefficientVector:
    """Harmonic coefficient vector belonging to a characteristic value.

    Unit 2-norm, dominant coefficient c_{(nu-1)/2} positive.  With
    ``length=None`` the vector is trimmed at the tail-decay bound
    |c_{L-1}| < 1e-12 * max|c|; an explicit ``length`` that cuts into
    the tail raises ``TruncationError`` carrying a workable length.
    """
    if a.pair != pair:
        raise ParameterError("characteristic value belongs to a different (nu, q) pair")
    kind = _check_kind(a.kind)
    k = (pair.nu + 1) // 2

    order = max(a.matrix_order, (length or 0) + 10)
    d, e = _system(pair.q, kind, order)
    v = eigenvector(d, e, a.a)
    if v[k - 1] < 0.0:
        v = -v

    vmax = float(np.max(np.abs(v)))
    big = np.nonzero(np.abs(v) >= _TAIL_RATIO * vmax)[0]
    auto = max(int(big[-1]) + 2, k + 1)
    if auto > order:
        raise ConvergenceError(
            f"coefficient tail did not decay within matrix order {order}")

    if length is None:
        length = auto
    elif length < auto:
        raise TruncationError(
            f"length {length} cuts into the coefficient tail; need about {auto}",
            suggested_length=auto)
    c = v[:length].copy()

    vec = CoefficientVector(parity=kind, coeffs=c, pair=pair, a=a.a)
    res = recurrence_residual(vec)
    if res > 1e-8 * float(np.max(np.abs(c))):
        raise ConvergenceError(f"recurrence residual {res:.3e} too large at order {order}")
    return vec


def recurrence_residual(vec: CoefficientVector) -> float:
    """Max absolute row residual of the three-term recurrence."""
    c = vec.coeffs
    q = vec.pair.q
    a = vec.a
    sign = -1.0 if vec.parity == EVEN else 1.0
    ext = np.concatenate([c, [0.0]])
    rows = np.empty(c.size)
    rows[0] = (a - 1.0 + sign * q) * c[0] - q * ext[1]
    if c.size > 1:
        m = 2.0 * np.arange(1, c.size) + 1.0
        rows[1:] = (a - m * m) * c[1:] - q * (c[:-1] + ext[2:])
    return float(np.max(np.abs(rows)))


def eval_ce(vec: CoefficientVector, w) -> float | np.ndarray:
    """Elliptic cosine ce_nu(w, q) from its harmonic series."""
    if vec.parity != EVEN:
        raise ParityError("eval_ce needs an even (cosine) coefficient vector")
    m = 2.0 * np.arange(len(vec)) + 1.0
    wa = np.asarray(w, dtype=float)
    out = np.cos(np.multiply.outer(wa, m)) @ vec.coeffs
    return float(out) if np.isscalar(w) or wa.ndim == 0 else out


def eval_se(vec: CoefficientVector, w) -> float | np.ndarray:
    """Elliptic sine se_nu(w, q) from its harmonic series."""
    if vec.parity != ODD:
        raise ParityError("eval_se needs an odd (sine) coefficient vector")
    m = 2.0 * np.arange(len(vec)) + 1.0
    wa = np.asarray(w, dtype=float)
    out = np.sin(np.multiply.outer(wa, m)) @ vec.coeffs
    return float(out) if np.isscalar(w) or wa.ndim == 0 else out


def _eval_series(vec: CoefficientVector, w):
    return eval_ce(vec, w) if vec.parity == EVEN else eval_se(vec, w)


def ode_residual(vec: CoefficientVector, a: float, q: float, grid) -> float:
    """Max over the grid of |y'' + (a - 2q cos 2w) y| with y'' taken term-wise."""
    w = np.atleast_1d(np.asarray(grid, dtype=float))
    if w.size == 0:
        raise ParameterError("residual grid must not be empty")
    m = 2.0 * np.arange(len(vec)) + 1.0
    phase = np.multiply.outer(w, m)
    basis = np.cos(phase) if vec.parity == EVEN else np.sin(phase)
    y = basis @ vec.coeffs
    ypp = -(basis @ (vec.coeffs * m * m))
    return float(np.max(np.abs(ypp + (a - 2.0 * q * np.cos(2.0 * w)) * y)))


def orthogonality_integral(f: CoefficientVector, g: CoefficientVector,
                           n_quad: int | None = None) -> float:
    """Integral of f(w) g(w) over one full period [0, 2pi).

    Periodic trapezoid rule: exact (to roundoff) for these trigonometric
    integrands once n_quad exceeds the highest combined harmonic.
    """
    if f.pair.q != g.pair.q:
        raise ParameterError(
            f"operands use different elliptic parameters ({f.pair.q} vs {g.pair.q})")
    min_quad = 4 * max(len(f), len(g))
    if n_quad is None:
        n_quad = max(64, min_quad)
    elif n_quad < min_quad:
        raise ParameterError(f"n_quad={n_quad} below the spectral-exactness bound {min_quad}")
    w = 2.0 * np.pi * np.arange(n_quad) / n_quad
    return float(np.sum(_eval_series(f, w) * _eval_series(g, w)) * (2.0 * np.pi / n_quad))


@lru_cache(maxsize=256)
def cached_coefficients(nu: int, q: float, kind: str = EVEN) -> CoefficientVector:
    """Memoised solve-then-expand, shared by the filter and CLI layers."""
    pair = OrderParameterPair(nu, q)
    a = characteristic_value(pair, kind)
    return fourier_coefficients(pair, a)
