"""Exception types raised across the package.

Every error subclasses :class:`DicksonError` plus the closest builtin, so callers
can catch either the package-wide base or a familiar ``ValueError``.
"""


class DicksonError(Exception):
    """Base class for all package errors."""


class NotPrimeError(DicksonError, ValueError):
    pass


class DegreeTooLargeError(DicksonError, ValueError):
    pass


class DeskBoundExceeded(DicksonError, ValueError):
    """A desk-scale exhaustive routine was asked to handle too large an input."""


class ZeroInputError(DicksonError, ValueError):
    """An operation that needs a nonzero field element (or alpha) received zero."""


class ContextMismatchError(DicksonError, ValueError):
    pass


class MTooSmallError(DicksonError, ValueError):
    pass


class OutOfRangeError(DicksonError, ValueError):
    pass


class InconsistentCongruenceError(DicksonError, ValueError):
    pass


class NotCoprimeError(DicksonError, ValueError):
    pass


class AlphaNotFixedError(DicksonError, ValueError):
    """alpha**n != alpha, so D_n(., alpha) does not compose within one family."""


class EvenQError(DicksonError, ValueError):
    pass


class NotSquareError(DicksonError, ValueError):
    pass


class DenominatorDivisibleByP(DicksonError, ArithmeticError):
    pass


class NoPeriodWithinBound(DicksonError, RuntimeError):
    pass


class NoGeneratorFound(DicksonError, RuntimeError):
    pass


class BadRangeError(DicksonError, ValueError):
    pass


class ParseError(DicksonError, ValueError):
    pass
