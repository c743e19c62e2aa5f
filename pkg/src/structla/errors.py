"""Exception types raised across the package."""


class StructlaError(Exception):
    """Base class for all errors raised by structla."""


class ZeroInverse(StructlaError, ZeroDivisionError):
    pass


class DivideByZeroPoly(StructlaError, ZeroDivisionError):
    pass


class NotCoprime(StructlaError, ValueError):
    pass


class DegreeTooLarge(StructlaError, ValueError):
    pass


class RepeatedPoint(StructlaError, ValueError):
    pass


class DimensionMismatch(StructlaError, ValueError):
    pass


class NotSquare(StructlaError, ValueError):
    pass


class SingularInput(StructlaError, ValueError):
    pass


class NotInvertibleMod(StructlaError, ValueError):
    pass


class InvalidPoints(StructlaError, ValueError):
    pass


class FieldTooSmall(StructlaError, ValueError):
    pass


class ShiftOutOfRange(StructlaError, ValueError):
    pass


class SizeTooLarge(StructlaError, ValueError):
    pass
