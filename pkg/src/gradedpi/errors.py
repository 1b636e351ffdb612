"""Exception hierarchy shared by all gradedpi modules."""


class GradedPIError(Exception):
    """Base class for every error raised by this package."""


class FieldMismatch(GradedPIError):
    """Operands belong to different fields."""


class DivisionByZero(GradedPIError, ZeroDivisionError):
    """Division by the zero element of a field."""


class ShapeMismatch(GradedPIError):
    """Matrix sizes (or backing fields) are incompatible for an operation."""


class PreconditionViolated(GradedPIError):
    """An operation was called on input outside its documented domain."""


class SingularMatrix(GradedPIError):
    """Inversion was requested for a matrix with zero determinant."""


class ParseError(GradedPIError):
    """Malformed scalar or polynomial text.

    ``position`` is the 0-based offset into the input at which parsing failed.
    """

    def __init__(self, message: str, position: int = 0):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class NotMultilinear(GradedPIError):
    """A monomial does not use every variable exactly once."""

    def __init__(self, message: str, monomial: str):
        super().__init__(message)
        self.monomial = monomial


class VariableGap(GradedPIError):
    """Variable indices are not the contiguous block x1..xm."""


class EvalMismatch(GradedPIError):
    """Evaluation arguments disagree with the polynomial's arity, size or field."""


class BadFamilyParams(GradedPIError):
    """Unknown builtin polynomial family or invalid family parameters."""


class UnsupportedCharacteristic(GradedPIError):
    """The field characteristic divides the matrix size, so the four-way
    classification is unavailable (scalars and trace-zero matrices overlap)."""


class UnsupportedSize(GradedPIError):
    """Classification is not defined for this matrix size (n = 1 is the
    commutative degenerate case)."""
