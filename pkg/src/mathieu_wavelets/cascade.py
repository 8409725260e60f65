"""Cascade synthesis of scaling-function and wavelet approximants.

The refinement relation phi(t) = sqrt(2) sum_l h_l phi(2t - l) is iterated
from the unit box: each round upsamples the current samples by two and
convolves with sqrt(2) h.  After J rounds the samples live on the dyadic
grid of step 2^-J over the bank's support [lmin, lmax].  The wavelet
approximant applies one detail step psi(t) = sqrt(2) sum_l g_l phi(2t - l)
to the (J-1)-times refined scaling iterate, so both land on the same grid.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DivergenceError, ParameterError, ResourceLimitError, ShapeError
from .filters import SQRT2, FilterBank, Taps

MAX_ITERATIONS = 24
_AMPLITUDE_LIMIT = 1e6


@dataclass(frozen=True, eq=False)
class SampledSignal:
    """Uniform samples: value i sits at ``origin + i * step``."""

    origin: float
    step: float
    samples: np.ndarray

    @property
    def grid(self) -> np.ndarray:
        return self.origin + self.step * np.arange(self.samples.size)


def _check_iterations(iterations: int) -> None:
    if iterations < 1:
        raise ParameterError("cascade needs at least one refinement round")
    if iterations > MAX_ITERATIONS:
        raise ResourceLimitError(
            f"{iterations} refinement rounds exceed the limit of {MAX_ITERATIONS}")


def _refine(h: Taps, rounds: int) -> tuple[np.ndarray, int]:
    """Run the upsample/convolve rounds; returns samples and origin index.

    The origin index is in units of the final step 2^-rounds.  Seeding with
    the unit box means starting from the single sample phi_0(0) = 1.
    """
    x = np.array([1.0])
    n0 = 0
    kernel = SQRT2 * h.values
    for _ in range(rounds):
        up = np.zeros(2 * x.size - 1)
        up[::2] = x
        x = np.convolve(up, kernel)
        n0 = 2 * n0 + h.lmin
        peak = float(np.max(np.abs(x)))
        if not np.isfinite(peak) or peak > _AMPLITUDE_LIMIT:
            raise DivergenceError(f"cascade amplitude {peak:.3e} exceeded the limit")
    return x, n0


def _embed(x: np.ndarray, n0: int, h: Taps, rounds: int) -> np.ndarray:
    """Place iterate samples on the full dyadic grid over [lmin, lmax]."""
    total = (h.lmax - h.lmin) * 2 ** rounds + 1
    offset = n0 - h.lmin * 2 ** rounds
    if offset < 0 or offset + x.size > total:
        raise ShapeError("cascade iterate escaped the filter support")
    out = np.zeros(total)
    out[offset:offset + x.size] = x
    return out


def _positive_h(bank: FilterBank) -> Taps:
    return bank.positive_normalized().h


def cascade_scaling(bank: FilterBank, iterations: int) -> SampledSignal:
    """Scaling-function approximant after ``iterations`` refinement rounds.

    Uses the positive-normalized taps (sum h = sqrt(2)) so the discrete
    integral step * sum(samples) stays exactly 1.
    """
    _check_iterations(iterations)
    h = _positive_h(bank)
    x, n0 = _refine(h, iterations)
    samples = _embed(x, n0, h, iterations)
    return SampledSignal(origin=float(h.lmin), step=2.0 ** -iterations, samples=samples)


def cascade_wavelet(bank: FilterBank, iterations: int) -> SampledSignal:
    """Wavelet approximant on the 2^-iterations grid.

    One detail step over the (iterations-1)-round scaling iterate; the
    result spans the same support [lmin, lmax] as the scaling output.
    """
    _check_iterations(iterations)
    pos = bank.positive_normalized()
    h, g = pos.h, pos.g
    rounds = iterations - 1
    phi, n0 = _refine(h, rounds)
    phi = _embed(phi, n0, h, rounds)

    total = (h.lmax - h.lmin) * 2 ** iterations + 1
    psi = np.zeros(total)
    half = 2 ** (iterations - 1)
    # psi[i] = sqrt(2) sum_l g_l phi[(lmin - l) * 2^(J-1) + i], zero outside
    for j, gl in enumerate(g.values):
        if gl == 0.0:
            continue
        shift = (h.lmin - (g.lmin + j)) * half
        lo = max(0, -shift)
        hi = min(total, phi.size - shift)
        if lo < hi:
            psi[lo:hi] += SQRT2 * gl * phi[lo + shift:hi + shift]
    return SampledSignal(origin=float(h.lmin), step=2.0 ** -iterations, samples=psi)


def self_convergence(bank: FilterBank, iterations: int) -> float:
    """sup |phi_J - phi_{J+1}| on the coarser common grid (J = ``iterations``)."""
    coarse = cascade_scaling(bank, iterations)
    fine = cascade_scaling(bank, iterations + 1)
    return float(np.max(np.abs(fine.samples[::2] - coarse.samples)))
