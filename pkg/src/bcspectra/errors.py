"""Exception types raised across the package."""


class BicomplexError(Exception):
    """Base class for all errors raised by bcspectra."""


class ZeroDivisorError(BicomplexError, ZeroDivisionError):
    """Inversion of a nonzero element of the e1 or e2 ideal."""


class ZeroInputError(BicomplexError, ZeroDivisionError):
    """Inversion of zero."""


class DimensionMismatchError(BicomplexError, ValueError):
    pass


class NotSquareError(DimensionMismatchError):
    pass


class NotCommutingError(BicomplexError, ValueError):
    """A matrix tuple failed the commutation test.

    ``residual`` carries the largest relative commutator norm that was found.
    """

    def __init__(self, residual, message=None):
        self.residual = float(residual)
        if message is None:
            message = f"matrices do not commute (max relative commutator {self.residual:.3e})"
        super().__init__(message)


class BadExponentError(BicomplexError, ValueError):
    pass


class ParseError(BicomplexError, ValueError):
    pass
