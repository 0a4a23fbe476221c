"""Exception hierarchy shared by every module."""


class QZetaError(Exception):
    """Base class for all errors raised by qzeta."""


class DomainError(QZetaError, ValueError):
    """Argument lies outside the domain of the operation (pole, zero divisor)."""


class ShapeError(QZetaError, ValueError):
    """Matrix dimensions do not conform."""


class NumericalError(QZetaError, ArithmeticError):
    """A numerical kernel produced a result violating a structural guarantee."""


class StructureError(QZetaError, ValueError):
    """Matrix lacks the structure a fast path requires (e.g. triangularity)."""


class ParseError(QZetaError, ValueError):
    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class ValidationError(QZetaError, ValueError):
    """Input parsed but violates a model invariant (loop, duplicate, disconnected)."""


class MissingWeightError(QZetaError, KeyError):
    """An arc has no weight assigned."""

    def __str__(self):
        return str(self.args[0]) if self.args else "missing weight"


class CapacityError(QZetaError, RuntimeError):
    """An enumeration would exceed its configured size bound."""


class EmptyWordError(QZetaError, ValueError):
    pass


class SizeError(QZetaError, ValueError):
    """Input too large for a brute-force oracle."""


class GuardWarning(UserWarning):
    """Evaluation point lies outside the sufficient convergence region."""
