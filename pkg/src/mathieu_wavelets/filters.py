"""Smoothing and detail filters of the Mathieu multiresolution analysis.

Closed forms, for odd order nu and elliptic parameter q:

    H_nu(w) = -exp(j nu w/2) ce_nu(w/2, q) / ce_nu(0, q)
    G_nu(w) = -exp(j (nu-2)(w-pi)/2) ce_nu((w-pi)/2, q) / ce_nu(0, q)

and the matching coefficient banks

    h_l = -sqrt(2) A_{|2l-nu|}   / (2 ce_nu(0, q))
    g_l =  sqrt(2) (-1)^l A_{|2l+nu-2|} / (2 ce_nu(0, q)),

where A_m are the harmonic coefficients of ce_nu.  Every exported quantity
is a ratio A/ce(0), so the arbitrary normalisation of the coefficient
vector cancels.  The leading minus sign (H(0) = -1 rather than +1) is kept
as is; ``FilterBank.positive_normalized`` flips h for consumers that need
sum(h) = +sqrt(2).  Note the convention bridge between the two layers: the
transform (1/sqrt(2)) sum h_l e^{-jwl} equals conj(H_nu(w)), and the same
sum over g_l equals -G_nu(w).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .errors import DegenerateNormalizationError, ParameterError
from .mathieu import EVEN, cached_coefficients, eval_ce

SQRT2 = math.sqrt(2.0)

DEFAULT_THRESHOLD = 1e-10


@dataclass(frozen=True, eq=False)
class Taps:
    """Contiguous integer-indexed real coefficients, first index ``lmin``."""

    lmin: int
    values: np.ndarray

    @property
    def lmax(self) -> int:
        return self.lmin + self.values.size - 1

    @property
    def indices(self) -> np.ndarray:
        return np.arange(self.lmin, self.lmin + self.values.size)

    def at(self, l: int) -> float:
        if self.lmin <= l <= self.lmax:
            return float(self.values[l - self.lmin])
        return 0.0


@dataclass(frozen=True)
class SpectrumSample:
    """One transfer-function value at angular frequency ``w``."""

    w: float
    value: complex


@dataclass(frozen=True, eq=False)
class FilterBank:
    """Truncated smoothing/detail pair for one (nu, q) and threshold."""

    nu: int
    q: float
    threshold: float
    ce0: float
    h: Taps
    g: Taps
    truncation_mass: float

    @property
    def width(self) -> int:
        return max(self.h.values.size, self.g.values.size)

    def positive_normalized(self) -> "FilterBank":
        """Variant with sum(h) = +sqrt(2); g already pairs with it.

        The detail taps satisfy g_l = (-1)^l h'_{1-l} for h' = -h, the
        standard quadrature-mirror pairing, so only h changes sign.
        """
        if float(np.sum(self.h.values)) >= 0.0:
            return self
        return replace(self, h=Taps(self.h.lmin, -self.h.values))


def _coefficient_data(nu: int, q: float):
    vec = cached_coefficients(nu, float(q), EVEN)
    ce0 = float(np.sum(vec.coeffs))
    if abs(ce0) < 1e-12:
        raise DegenerateNormalizationError(
            f"ce(0, q) = {ce0:.3e} is too small to normalise filters for nu={nu}, q={q}")
    return vec, ce0


def _truncate(indices: np.ndarray, values: np.ndarray, threshold: float) -> tuple[Taps, float]:
    keep = np.abs(values) >= threshold
    kept = np.nonzero(keep)[0]
    if kept.size == 0:
        raise ParameterError(f"threshold {threshold} discards every filter tap")
    sel = slice(kept[0], kept[-1] + 1)
    vals = values[sel].copy()
    vals[np.abs(vals) < threshold] = 0.0   # sub-threshold taps inside the range
    mass = float(np.sum(np.abs(values[~keep])))
    return Taps(int(indices[sel][0]), vals), mass


def smoothing_coefficients(nu: int, q: float,
                           threshold: float = DEFAULT_THRESHOLD) -> Taps:
    """Truncated lowpass taps h_l = -sqrt(2) A_{|2l-nu|} / (2 ce(0, q))."""
    taps, _ = _smoothing_with_mass(nu, q, threshold)
    return taps


def detail_coefficients(nu: int, q: float,
                        threshold: float = DEFAULT_THRESHOLD) -> Taps:
    """Truncated highpass taps g_l = sqrt(2) (-1)^l A_{|2l+nu-2|} / (2 ce(0, q))."""
    taps, _ = _detail_with_mass(nu, q, threshold)
    return taps


def _smoothing_with_mass(nu, q, threshold):
    if threshold <= 0.0:
        raise ParameterError("truncation threshold must be positive")
    vec, ce0 = _coefficient_data(nu, q)
    c = vec.coeffs
    L = c.size
    ls = np.arange((nu + 1) // 2 - L, (nu - 1) // 2 + L + 1)
    m = np.abs(2 * ls - nu)
    vals = -SQRT2 * c[(m - 1) // 2] / (2.0 * ce0)
    return _truncate(ls, vals, threshold)


def _detail_with_mass(nu, q, threshold):
    if threshold <= 0.0:
        raise ParameterError("truncation threshold must be positive")
    vec, ce0 = _coefficient_data(nu, q)
    c = vec.coeffs
    L = c.size
    lo = -((nu + 2 * L - 3) // 2)
    hi = (2 * L + 1 - nu) // 2
    ls = np.arange(lo, hi + 1)
    m = np.abs(2 * ls + nu - 2)
    vals = SQRT2 * ((-1.0) ** ls) * c[(m - 1) // 2] / (2.0 * ce0)
    return _truncate(ls, vals, threshold)


def filter_bank(nu: int, q: float, threshold: float = DEFAULT_THRESHOLD) -> FilterBank:
    """Build the (h, g) bank for one family member."""
    _, ce0 = _coefficient_data(nu, q)
    h, h_mass = _smoothing_with_mass(nu, q, threshold)
    g, g_mass = _detail_with_mass(nu, q, threshold)
    return FilterBank(nu=nu, q=float(q), threshold=float(threshold), ce0=ce0,
                      h=h, g=g, truncation_mass=max(h_mass, g_mass))


def transfer_H_values(nu: int, q: float, w) -> np.ndarray:
    """Closed-form smoothing transfer function on scalar or array ``w``."""
    vec, ce0 = _coefficient_data(nu, q)
    wa = np.asarray(w, dtype=float)
    return -np.exp(0.5j * nu * wa) * eval_ce(vec, wa / 2.0) / ce0


def transfer_G_values(nu: int, q: float, w) -> np.ndarray:
    """Closed-form detail transfer function on scalar or array ``w``."""
    vec, ce0 = _coefficient_data(nu, q)
    wa = np.asarray(w, dtype=float)
    return -np.exp(0.5j * (nu - 2) * (wa - np.pi)) * eval_ce(vec, (wa - np.pi) / 2.0) / ce0


def transfer_H(nu: int, q: float, w: float) -> SpectrumSample:
    """Smoothing transfer function at one frequency."""
    return SpectrumSample(w=float(w), value=complex(transfer_H_values(nu, q, float(w))))


def transfer_G(nu: int, q: float, w: float) -> SpectrumSample:
    """Detail transfer function at one frequency."""
    return SpectrumSample(w=float(w), value=complex(transfer_G_values(nu, q, float(w))))


def spectrum_from_taps(taps: Taps, w) -> np.ndarray:
    """(1/sqrt(2)) sum_l c_l e^{-jwl} evaluated on scalar or array ``w``."""
    wa = np.asarray(w, dtype=float)
    return (np.exp(-1j * np.multiply.outer(wa, taps.indices.astype(float)))
            @ taps.values) / SQRT2


def qmf_deviation(bank: FilterBank, n_grid: int = 1024) -> float:
    """Measured max of | |H(w)|^2 + |H(w+pi)|^2 - 1 | on an n_grid frequency grid.

    Recorded, not asserted: the identity is exact at q = 0 and degrades
    with growing q.
    """
    if n_grid < 64:
        raise ParameterError("qmf deviation grid needs at least 64 points")
    w = 2.0 * np.pi * np.arange(n_grid) / n_grid
    H = transfer_H_values(bank.nu, bank.q, w)
    Hpi = transfer_H_values(bank.nu, bank.q, w + np.pi)
    return float(np.max(np.abs(np.abs(H) ** 2 + np.abs(Hpi) ** 2 - 1.0)))


def elliptic_sine_identity_check(nu: int, q: float, n_grid: int = 1024) -> float:
    """Max-grid gap between |G_nu(w)| and |ce_nu((pi-w)/2, q)| / |ce_nu(0, q)|.

    The right side is the elliptic-sine modulus |se_nu(w/2, -q)| rewritten
    through the evenness of ce and the standard q -> -q reflection; the gap
    is zero up to rounding.
    """
    vec, ce0 = _coefficient_data(nu, q)
    w = 2.0 * np.pi * np.arange(n_grid) / n_grid
    lhs = np.abs(transfer_G_values(nu, q, w))
    rhs = np.abs(eval_ce(vec, (np.pi - w) / 2.0)) / abs(ce0)
    return float(np.max(np.abs(lhs - rhs)))


def transfer_zero_count(nu: int, q: float, n_grid: int = 4096) -> int:
    """Zeros of |H_nu| over one 2pi period of w, counted by sign changes.

    Samples ce_nu(w/2, q) at grid midpoints of (-pi, pi) so no sample lands
    on a zero, then closes the period through w = pi.  An odd-harmonic
    series satisfies ce(x + pi) = -ce(x), so the crossing at the period
    seam appears as one extra antiperiodic sign change.
    """
    vec = cached_coefficients(nu, float(q), EVEN)
    h = 2.0 * np.pi / n_grid
    w = -np.pi + (np.arange(n_grid) + 0.5) * h
    s = np.sign(eval_ce(vec, w / 2.0))
    wrapped = np.concatenate([s, [-s[0]]])
    return int(np.sum(wrapped[1:] * wrapped[:-1] < 0))
