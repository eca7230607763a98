"""Exception hierarchy for csnorm."""


class CSNormError(ValueError):
    """Base class for every error raised by csnorm."""


class UndefinedSlopeError(CSNormError):
    """The pair (0, 0) names no slope."""


class ConeOrderError(CSNormError):
    """A cone order below 2, or otherwise invalid orbifold data."""


class DeterminantError(CSNormError):
    """|Alexander polynomial at -1| must be a positive odd integer."""


class CoefficientError(CSNormError):
    """Coefficient vector of the wrong length or with negative entries."""


class ZeroCoefficientsError(CoefficientError):
    """All coefficients vanish, so there is no curve (and no minimal norm)."""


class NotANormCurveError(CSNormError):
    """An operation needing a genuine norm received an r-curve vector.

    The ball of an r-curve seminorm is an infinite strip, not a polygon.
    """


class NormCurveCountError(CSNormError):
    """Surgery classification needs exactly one norm curve."""


class ProfileError(CSNormError):
    """A knot profile failed to parse or validate."""


class UnderdeterminedProfileError(CSNormError):
    """The profile lacks the data needed to run the full analysis."""
