"""Exception types raised across the package."""


class ThresholdGraphError(ValueError):
    """Base class for invalid input to threshold-graph operations."""


class EmptySequence(ThresholdGraphError):
    pass


class MismatchedPrefix(ThresholdGraphError):
    pass


class InvalidRuns(ThresholdGraphError):
    pass


class NotSorted(ThresholdGraphError):
    pass


class NotThresholdSequence(ThresholdGraphError):
    pass


class NotThreshold(ThresholdGraphError):
    pass


class UnequalSums(ThresholdGraphError):
    pass


class DimensionMismatch(ThresholdGraphError):
    pass


class IndexOutOfRange(ThresholdGraphError, IndexError):
    pass


class TooLarge(ThresholdGraphError):
    pass


class InvalidGraph(ThresholdGraphError):
    pass


class NonIntegralSpectrum(ArithmeticError):
    """The characteristic polynomial has a factor without integer roots.

    ``residual`` holds the remaining factor as ascending integer coefficients.
    """

    def __init__(self, residual, roots=None):
        self.residual = tuple(residual)
        self.roots = dict(roots or {})
        super().__init__(f"non-integral factor of degree {len(self.residual) - 1} remains")
