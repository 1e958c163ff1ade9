"""Exception types raised by the library."""


class RecSquaresError(Exception):
    """Base class for all library errors."""


class SingularMatrixError(RecSquaresError, ArithmeticError):
    pass


class NonUnitDenominatorError(RecSquaresError, ArithmeticError):
    """Power-series expansion needs a denominator with nonzero constant term."""


class InternalConsistencyError(RecSquaresError, AssertionError):
    """A builder produced a matrix that violates a structural invariant."""


class SpecSyntaxError(RecSquaresError, ValueError):
    def __init__(self, message: str, line: int, column: int):
        super().__init__(f"{line}:{column}: {message}")
        self.message = message
        self.line = line
        self.column = column


class SpecSemanticError(SpecSyntaxError):
    """Well-formed source that does not describe a valid recurrence."""
