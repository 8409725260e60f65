"""Exception types shared by all modules of the package."""


class MathieuError(Exception):
    """Base class for every error raised by this package."""


class InvalidOrderError(MathieuError):
    """The characteristic exponent is not a positive odd integer."""


class ParameterError(MathieuError):
    """An argument is out of range, or operands mix incompatible parameters."""


class ConvergenceError(MathieuError):
    """An eigenvalue failed to stabilise under matrix-order refinement."""


class ParityError(MathieuError):
    """A coefficient vector of the wrong parity was supplied."""


class TruncationError(MathieuError):
    """The requested series length cannot satisfy the tail-decay bound."""

    def __init__(self, message: str, suggested_length: int | None = None):
        super().__init__(message)
        self.suggested_length = suggested_length


class DegenerateNormalizationError(MathieuError):
    """ce(0, q) is too small in magnitude to normalise filter coefficients."""


class ResourceLimitError(MathieuError):
    """A refinement depth or matrix size limit was exceeded."""


class DivergenceError(MathieuError):
    """Cascade iterates grew beyond the allowed amplitude."""


class ShapeError(MathieuError):
    """Array lengths are inconsistent with the transform layout."""
