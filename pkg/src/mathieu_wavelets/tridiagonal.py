"""Eigenpairs of real symmetric tridiagonal matrices.

Eigenvalues are located by bisection on the Sturm sequence count and
eigenvectors by inverse iteration with a partially pivoted tridiagonal
solve.  Both are O(n) per probe, need no external linear algebra, and give
machine-precision results for the well separated spectra this package
works with.
"""

from __future__ import annotations

import numpy as np

from .errors import ConvergenceError

_EPS = np.finfo(float).eps


def sturm_count(diag: np.ndarray, off: np.ndarray, x: float) -> int:
    """Number of eigenvalues of tridiag(diag, off) strictly below ``x``.

    Counts non-positive values of the sequence of leading-principal-minor
    ratios.  Zero pivots are nudged to a tiny negative value, the usual
    guard that keeps the recurrence finite without changing the count.
    """
    pivmin = _EPS * max(1.0, float(np.max(np.abs(off), initial=0.0)) ** 2) * 1e-10
    pivmin = max(pivmin, 1e-300)
    count = 0
    p = 1.0
    for i in range(diag.size):
        e2 = off[i - 1] * off[i - 1] if i > 0 else 0.0
        p = (diag[i] - x) - (e2 / p if e2 != 0.0 else 0.0)
        if abs(p) < pivmin:
            p = -pivmin
        if p < 0.0:
            count += 1
    return count


def kth_eigenvalue(diag: np.ndarray, off: np.ndarray, k: int) -> float:
    """k-th smallest eigenvalue (1-based) via Sturm bisection.

    The Gershgorin interval brackets the whole spectrum; bisection then
    narrows it until the bracket width reaches a few ulps.
    """
    d = np.asarray(diag, dtype=float)
    e = np.asarray(off, dtype=float)
    n = d.size
    if not 1 <= k <= n:
        raise ValueError(f"eigenvalue index {k} outside 1..{n}")
    radius = np.zeros(n)
    if n > 1:
        radius[:-1] += np.abs(e)
        radius[1:] += np.abs(e)
    lo = float(np.min(d - radius))
    hi = float(np.max(d + radius))
    # a little headroom so the count at the ends is 0 and n
    span = max(hi - lo, 1.0)
    lo -= _EPS * span
    hi += _EPS * span
    for _ in range(200):
        tol = 4.0 * _EPS * max(1.0, abs(lo), abs(hi))
        if hi - lo <= tol:
            break
        mid = 0.5 * (lo + hi)
        if mid <= lo or mid >= hi:
            break
        if sturm_count(d, e, mid) >= k:
            hi = mid
        else:
            lo = mid
    else:
        raise ConvergenceError("bisection failed to close the eigenvalue bracket")
    return 0.5 * (lo + hi)


def _solve_shifted(diag: np.ndarray, off: np.ndarray, shift: float,
                   rhs: np.ndarray) -> np.ndarray:
    """Solve (T - shift*I) x = rhs by Gaussian elimination with row swaps.

    The factorisation keeps two superdiagonals, as pivoting pushes fill-in
    one band up.  Near-singular pivots (the whole point of inverse
    iteration) are replaced by a tiny value of matching scale.
    """
    n = diag.size
    dd = diag - shift
    dl = np.concatenate([off, [0.0]]).astype(float)
    du = np.concatenate([off, [0.0]]).astype(float)
    du2 = np.zeros(n)
    x = np.asarray(rhs, dtype=float).copy()
    scale = max(1.0, float(np.max(np.abs(dd))), float(np.max(np.abs(off), initial=0.0)))
    pivmin = _EPS * scale * 1e-3

    for i in range(n - 1):
        if abs(dd[i]) >= abs(dl[i]):
            if abs(dd[i]) < pivmin:
                dd[i] = pivmin
            fact = dl[i] / dd[i]
            dd[i + 1] -= fact * du[i]
            x[i + 1] -= fact * x[i]
            du2[i] = 0.0
        else:
            # swap rows i and i+1
            fact = dd[i] / dl[i]
            dd[i] = dl[i]
            du[i], dd[i + 1] = dd[i + 1], du[i] - fact * dd[i + 1]
            du2[i] = du[i + 1]
            du[i + 1] = -fact * du[i + 1]
            x[i], x[i + 1] = x[i + 1], x[i] - fact * x[i + 1]

    if abs(dd[n - 1]) < pivmin:
        dd[n - 1] = pivmin
    x[n - 1] /= dd[n - 1]
    if n > 1:
        if abs(dd[n - 2]) < pivmin:
            dd[n - 2] = pivmin
        x[n - 2] = (x[n - 2] - du[n - 2] * x[n - 1]) / dd[n - 2]
    for i in range(n - 3, -1, -1):
        if abs(dd[i]) < pivmin:
            dd[i] = pivmin
        x[i] = (x[i] - du[i] * x[i + 1] - du2[i] * x[i + 2]) / dd[i]
    return x


def eigenvector(diag: np.ndarray, off: np.ndarray, eigval: float,
                iterations: int = 4) -> np.ndarray:
    """Unit eigenvector for an already-located eigenvalue, by inverse iteration."""
    d = np.asarray(diag, dtype=float)
    e = np.asarray(off, dtype=float)
    n = d.size
    v = np.full(n, 1.0 / np.sqrt(n))
    for _ in range(iterations):
        v = _solve_shifted(d, e, eigval, v)
        norm = float(np.linalg.norm(v))
        if not np.isfinite(norm) or norm == 0.0:
            raise ConvergenceError("inverse iteration produced a degenerate vector")
        v /= norm
    res = residual_norm(d, e, eigval, v)
    if res > 1e-8 * max(1.0, abs(eigval)):
        raise ConvergenceError(
            f"inverse iteration stalled: residual {res:.3e} at eigenvalue {eigval!r}")
    return v


def residual_norm(diag: np.ndarray, off: np.ndarray, eigval: float,
                  vec: np.ndarray) -> float:
    """Max-norm of T v - eigval v for a unit vector v."""
    n = diag.size
    r = (diag - eigval) * vec
    if n > 1:
        r[:-1] += off * vec[1:]
        r[1:] += off * vec[:-1]
    return float(np.max(np.abs(r)))
