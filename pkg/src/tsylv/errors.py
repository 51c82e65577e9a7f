"""Exception types shared across the package."""


class TsylvError(Exception):
    """Base class for every error raised by this package."""


class ShapeError(TsylvError):
    """Operands have missing, mismatched, or disallowed dimensions."""


class SingularMatrixError(TsylvError):
    """An LU pivot fell below the singularity threshold."""


class NoConvergenceError(TsylvError):
    """The eigenvalue iteration did not converge."""


class RankDeficientError(TsylvError):
    """The matrix lacks the full rank required by the operation."""


class NotReciprocalFreeError(TsylvError):
    """The coupling spectrum has an eigenvalue pair whose product is 1."""

    def __init__(self, message, witness=None, margin=None):
        super().__init__(message)
        self.witness = witness
        self.margin = margin


class InconsistentCouplingError(TsylvError):
    """The proposed coupling matrix S does not satisfy B^T = S A."""


class BadRightInverseError(TsylvError):
    """The proposed matrix D does not satisfy A D = I."""


class GenerationError(TsylvError):
    """Random instance generation exhausted its resampling budget."""


class InstanceFormatError(TsylvError):
    """An instance file could not be parsed."""
