"""Exception hierarchy shared by every qcenter module."""


class QCenterError(Exception):
    """Base class for all errors raised by qcenter."""


class DivisionByZero(QCenterError, ZeroDivisionError):
    pass


class DenominatorVanishes(DivisionByZero):
    """A rational function was specialized at a pole."""


class NegativeEpsilonPower(QCenterError, ValueError):
    pass


class UnsupportedScalar(QCenterError, ValueError):
    """The scalar lies outside the representable fraction field."""


class DomainMismatch(QCenterError, TypeError):
    pass


class UnsupportedRank(QCenterError, ValueError):
    pass


class UnsupportedN(QCenterError, ValueError):
    pass


class NotOutOfOrder(QCenterError, ValueError):
    pass


class UnknownLetter(QCenterError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class BadIndices(QCenterError, ValueError):
    pass


class WrongFamily(QCenterError, TypeError):
    pass


class NonPolynomialResult(QCenterError, ArithmeticError):
    pass


class RangeError(QCenterError, ValueError):
    pass


class ParseError(QCenterError, SyntaxError):
    """Malformed expression text; ``position`` is the 0-based offset."""

    def __init__(self, message, position):
        super().__init__(f"{message} at position {position}")
        self.position = position
