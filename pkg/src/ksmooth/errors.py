"""Exception types."""


class KSmoothError(Exception):
    """Base class for all package errors."""


class InputError(KSmoothError, ValueError):
    """Malformed or inconsistent input (dimension mismatch, bad symmetry, parse failure)."""


class NotFullDimensional(InputError):
    pass


class UnboundedInput(InputError):
    pass


class InteriorPoint(InputError):
    pass


class ExteriorPoint(InputError):
    pass


class DimensionGuard(KSmoothError):
    """Requested computation exceeds the desk-scale dimension limit."""


class NotUnitNorm(InputError):
    pass


class ZeroOperator(InputError):
    pass


class NotNormalized(InputError):
    pass


class HypothesisViolation(KSmoothError):
    """Operator or space outside the class a classifier covers."""


class InfeasibleTriple(KSmoothError):
    """A partition triple that cannot occur was produced."""

    def __init__(self, message, verdict=None):
        super().__init__(message)
        self.verdict = verdict


class UnmappedCase(KSmoothError):
    pass


class GeneratorExhausted(KSmoothError):
    pass


class TheoremCheckFailed(KSmoothError):
    """Computed smoothness order disagrees with the face-dimension formula."""
