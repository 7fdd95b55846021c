"""Exception hierarchy shared by every module."""


class WaringError(Exception):
    """Base class for all errors raised by waringq."""


class ZeroArgument(WaringError, ZeroDivisionError):
    pass


class PoleHit(WaringError, ZeroDivisionError):
    pass


class ExpressionSyntaxError(WaringError, ValueError):
    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position


class DivisionByZeroFunction(WaringError, ZeroDivisionError):
    pass


class NotLaurent(WaringError, ValueError):
    pass


class NotOdd(WaringError, ValueError):
    pass


class SearchExhausted(WaringError, RuntimeError):
    pass


class InvalidPrime(WaringError, ValueError):
    pass


class SquareDiscriminant(WaringError, ValueError):
    pass


class NotFound(WaringError, LookupError):
    pass


class WrongDegree(WaringError, ValueError):
    pass


class WrongCase(WaringError, ValueError):
    pass


class OutOfRange(WaringError, ValueError):
    pass


class DimensionMismatch(WaringError, ValueError):
    pass
