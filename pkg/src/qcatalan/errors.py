"""Exception hierarchy shared by every module of the package."""


class QCatalanError(Exception):
    """Base class for all errors raised by qcatalan."""


class MalformedValueError(QCatalanError, ValueError):
    """A value violates its structural invariants (e.g. zero denominator)."""


class IncompatibleRootError(QCatalanError, ValueError):
    """A fractional q-power cannot be materialized at the requested root order."""


class PoleError(QCatalanError, ZeroDivisionError):
    """Specialization hit a pole (the denominator vanishes)."""


class NotInvertibleError(QCatalanError, ZeroDivisionError):
    """Division by zero, or reciprocal of a series without an invertible leading term."""


class InsufficientTruncationError(QCatalanError):
    """A requested coefficient lies outside the window on which inputs are known."""


class TIncompleteError(InsufficientTruncationError):
    """Evaluation in t needs t-coefficients beyond the known t-window."""


class UnsupportedError(QCatalanError):
    """The operation has no exact meaning for this input."""


class DomainError(QCatalanError, ValueError):
    """An argument is outside the operation's domain."""


class ParseError(QCatalanError, ValueError):
    """Syntax error in a user expression, carrying the byte offset."""

    def __init__(self, message, offset):
        super().__init__(f"{message} at offset {offset}")
        self.offset = offset
