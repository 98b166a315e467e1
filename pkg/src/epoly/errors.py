"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class EpolyError(Exception):
    """Base class for every error raised by the package."""


class NotDivisible(EpolyError, ArithmeticError):
    """An exact division left a nonzero remainder.

    At the E-polynomial level this means the free-quotient (or fibration)
    hypothesis behind the division does not hold.
    """

    def __init__(self, dividend, divisor, remainder):
        self.dividend = dividend
        self.divisor = divisor
        self.remainder = remainder
        super().__init__(f"{dividend} is not divisible by {divisor} (remainder {remainder})")


class DegreeOverflow(EpolyError, ValueError):
    pass


class PolySyntaxError(EpolyError, ValueError):
    def __init__(self, message: str, column: int):
        self.column = column
        super().__init__(f"{message} at column {column + 1}")


class FlavorMismatch(EpolyError, ValueError):
    pass


class NegativeMultiplicity(EpolyError, ValueError):
    pass


class NotExteriorAlgebra(EpolyError, ValueError):
    pass


class NegativeBetti(EpolyError, ValueError):
    pass


class NoDiamond(EpolyError, ValueError):
    """The expression has an E-polynomial but no Hodge diamond (e.g. a free quotient)."""


class UnknownStratum(EpolyError, KeyError):
    def __str__(self):
        return Exception.__str__(self)


class NotRelevant(EpolyError, ValueError):
    pass


class DslError(EpolyError):
    """Base for parse-time failures; carries a 1-based source position."""

    def __init__(self, message: str, line: int, column: int):
        self.message = message
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class DslSyntaxError(DslError):
    def __init__(self, message: str, line: int, column: int, expected: tuple[str, ...] = ()):
        self.expected = tuple(expected)
        if expected:
            message = f"{message} (expected one of: {', '.join(expected)})"
        super().__init__(message, line, column)


class UnboundName(DslError):
    pass


class DuplicateName(DslError):
    pass
