"""Exception hierarchy shared by all lamo modules."""


class LamoError(Exception):
    """Base class for every error raised by this package."""


class ParseError(LamoError, ValueError):
    """A literal or file could not be parsed."""


class IncompatibleRadicands(LamoError):
    """Two irrational values with distinct non-square radicands were mixed."""


class ZeroDenominator(LamoError):
    """A rational was given with denominator zero."""


class NotNonDecreasing(LamoError):
    """A sequence operation requires a non-decreasing input."""


class EmptyWindow(LamoError):
    """The exactness horizon of the requested result is empty."""


class HorizonExceeded(LamoError):
    """A value was requested beyond what the finite window determines."""


class NotSorted(LamoError):
    """Set elements must be strictly increasing."""


class NotPositive(LamoError):
    """Set elements must be positive integers."""


class NonPositiveTime(LamoError):
    """Motion functions are defined for strictly positive times only."""


class UnsupportedPoint(LamoError):
    """The map cannot be evaluated exactly at the given point."""


class OutsideImage(LamoError):
    """The value lies outside the open image interval of the map."""


class InfiniteValue(LamoError):
    """The operation requires a sequence of finite values."""


class NonPositiveSlope(LamoError):
    """Linear motions require a strictly positive slope."""


class CollisionPresent(LamoError):
    """A meeting occurred exactly at the reference point; recorded sets are void."""
