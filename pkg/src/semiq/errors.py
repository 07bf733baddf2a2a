"""Exception hierarchy shared by all semiq modules."""

from __future__ import annotations


class SemiqError(Exception):
    """Base class for every error raised by semiq."""


class DenominatorVanishes(SemiqError, ZeroDivisionError):
    """A denominator becomes zero when q is specialized to the root of unity."""


class NonvanishingAtRoot(SemiqError, ValueError):
    """A divided difference was requested for a function that is nonzero at the root."""


class PresentationMismatch(SemiqError, ValueError):
    pass


class ScalarModeMismatch(SemiqError, ValueError):
    pass


class ParseError(SemiqError, ValueError):
    pass


class NotCentral(SemiqError, ValueError):
    """The first argument of a bracket does not commute with the second at the root."""


class OutOfSpan(SemiqError, KeyError):
    pass


class DimensionMismatch(SemiqError, ValueError):
    pass


class RankIdentityViolated(SemiqError, AssertionError):
    pass


class TheoremMismatch(SemiqError, AssertionError):
    pass


class CrossCheckFailed(SemiqError, AssertionError):
    pass


class NegativeWeight(SemiqError, ValueError):
    pass


class WeightOutOfRange(SemiqError, ValueError):
    pass
