"""Periodic discrete wavelet transform driven by a generated filter bank.

Analysis correlates the signal circularly with the (positive-normalized)
taps and keeps every second sample; synthesis is the exact adjoint, so the
round trip is the identity precisely when the bank is orthogonal.  For
q > 0 banks the reconstruction error measures their non-orthogonality,
which is the quantity this module exists to report.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ParameterError, ShapeError
from .filters import FilterBank, Taps

# Knuth's MMIX multiplier/increment; fixed so reported errors reproduce
# bit-for-bit everywhere.
_LCG_MULT = 6364136223846793005
_LCG_INC = 1442695040888963407
_LCG_MASK = (1 << 64) - 1
DEFAULT_SEED = 0x9E3779B97F4A7C15


@dataclass(eq=False)
class CoefficientPyramid:
    """Detail vectors per level (finest first) plus the coarsest approximation."""

    levels: int
    detail: list[np.ndarray]
    approx: np.ndarray


def _correlate_down(x: np.ndarray, taps: Taps) -> np.ndarray:
    n = x.size
    idx = (2 * np.arange(n // 2)[:, None]
           + (taps.lmin + np.arange(taps.values.size))[None, :]) % n
    return x[idx] @ taps.values


def _upsample_accumulate(out: np.ndarray, coeffs: np.ndarray, taps: Taps) -> None:
    n = out.size
    k = 2 * np.arange(coeffs.size)
    for j, v in enumerate(taps.values):
        if v == 0.0:
            continue
        np.add.at(out, (k + taps.lmin + j) % n, v * coeffs)


def analyze(signal, bank: FilterBank, levels: int) -> CoefficientPyramid:
    """Decompose a periodic signal into ``levels`` detail bands plus a remainder."""
    x = np.asarray(signal, dtype=float)
    if x.ndim != 1:
        raise ShapeError("analyze expects a one-dimensional signal")
    if levels < 1:
        raise ParameterError("need at least one decomposition level")
    if x.size % (1 << levels) != 0:
        raise ShapeError(f"length {x.size} is not divisible by 2^{levels}")
    if x.size < 2 * bank.width:
        raise ShapeError(f"length {x.size} shorter than twice the bank width {bank.width}")
    pos = bank.positive_normalized()
    detail = []
    for _ in range(levels):
        detail.append(_correlate_down(x, pos.g))
        x = _correlate_down(x, pos.h)
    return CoefficientPyramid(levels=levels, detail=detail, approx=x)


def synthesize(pyramid: CoefficientPyramid, bank: FilterBank) -> np.ndarray:
    """Adjoint reconstruction: upsample, convolve, and sum, coarsest level first."""
    pos = bank.positive_normalized()
    x = np.asarray(pyramid.approx, dtype=float)
    for d in reversed(pyramid.detail):
        d = np.asarray(d, dtype=float)
        if d.size != x.size:
            raise ShapeError(
                f"detail length {d.size} does not match approximation length {x.size}")
        out = np.zeros(2 * x.size)
        _upsample_accumulate(out, x, pos.h)
        _upsample_accumulate(out, d, pos.g)
        x = out
    return x


def _lcg_uniform(state: int, count: int) -> tuple[np.ndarray, int]:
    out = np.empty(count)
    for i in range(count):
        state = (_LCG_MULT * state + _LCG_INC) & _LCG_MASK
        out[i] = (state >> 11) / float(1 << 53)
    return out, state


def round_trip_error(bank: FilterBank, length: int, levels: int, trials: int,
                     seed: int = DEFAULT_SEED) -> float:
    """Worst relative l2 reconstruction error over seeded pseudo-random signals."""
    if trials < 10:
        raise ParameterError("need at least 10 trials for a stable maximum")
    state = seed & _LCG_MASK
    worst = 0.0
    for _ in range(trials):
        u, state = _lcg_uniform(state, length)
        x = 2.0 * u - 1.0
        x /= float(np.linalg.norm(x))
        rebuilt = synthesize(analyze(x, bank, levels), bank)
        worst = max(worst, float(np.linalg.norm(rebuilt - x)))
    return worst
