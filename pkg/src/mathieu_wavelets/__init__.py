"""Mathieu multiresolution analysis toolkit.

Characteristic values and Fourier coefficients of first-kind Mathieu
functions, the derived smoothing/detail filter banks, cascade synthesis of
scaling/wavelet approximants, and a periodic DWT to measure how usable the
truncated banks are in practice.
"""

__version__ = "0.1.0"

from .errors import (
    ConvergenceError,
    DegenerateNormalizationError,
    DivergenceError,
    InvalidOrderError,
    MathieuError,
    ParameterError,
    ParityError,
    ResourceLimitError,
    ShapeError,
    TruncationError,
)
from .mathieu import (
    EVEN,
    ODD,
    CharacteristicValue,
    CoefficientVector,
    OrderParameterPair,
    characteristic_value,
    eval_ce,
    eval_se,
    fourier_coefficients,
    ode_residual,
    orthogonality_integral,
    recurrence_residual,
)
from .filters import (
    FilterBank,
    SpectrumSample,
    Taps,
    detail_coefficients,
    elliptic_sine_identity_check,
    filter_bank,
    qmf_deviation,
    smoothing_coefficients,
    spectrum_from_taps,
    transfer_G,
    transfer_G_values,
    transfer_H,
    transfer_H_values,
    transfer_zero_count,
)
from .cascade import SampledSignal, cascade_scaling, cascade_wavelet, self_convergence
from .dwt import CoefficientPyramid, analyze, round_trip_error, synthesize

__all__ = [
    "__version__",
    "MathieuError", "InvalidOrderError", "ParameterError", "ConvergenceError",
    "ParityError", "TruncationError", "DegenerateNormalizationError",
    "ResourceLimitError", "DivergenceError", "ShapeError",
    "EVEN", "ODD",
    "OrderParameterPair", "CharacteristicValue", "CoefficientVector",
    "characteristic_value", "fourier_coefficients", "recurrence_residual",
    "eval_ce", "eval_se", "ode_residual", "orthogonality_integral",
    "Taps", "FilterBank", "SpectrumSample",
    "smoothing_coefficients", "detail_coefficients", "filter_bank",
    "transfer_H", "transfer_G", "transfer_H_values", "transfer_G_values",
    "spectrum_from_taps", "qmf_deviation", "elliptic_sine_identity_check",
    "transfer_zero_count",
    "SampledSignal", "cascade_scaling", "cascade_wavelet", "self_convergence",
    "CoefficientPyramid", "analyze", "synthesize", "round_trip_error",
]
