"""Exception types shared across the package."""


class SpecradError(Exception):
    """Base class for all errors raised by this package."""


class GammaNonpositive(SpecradError):
    """The edge normalization is undefined: log n - 2 log log n - log 2pi <= 0."""


class NonConvergence(SpecradError):
    """An iterative numerical routine hit its iteration cap."""


class DomainError(SpecradError):
    """An argument lies outside the mathematical domain of the formula."""


class EigenFailure(SpecradError):
    """The dense eigensolver failed to converge."""


class EmptyAnnulus(SpecradError):
    """Annulus construction with inner radius above the outer radius."""


class EmptySample(SpecradError):
    """An empirical CDF needs at least one sample."""


class BracketTooNarrow(SpecradError):
    """The search bracket does not contain the tails to the requested tolerance."""
