"""
Exceptions for bigradedpd.
"""

__all__ = ["PersistenceException", "ParseError", "ValidationError",
           "DegenerateFiltrationError", "FieldError", "TranspositionError",
           "InvariantViolation", "CapExceededError"]


class PersistenceException(Exception):
    """
    The base class for ALL exceptions.

    Catch this if you wish to catch any custom exception raised inside the lib.
    """


class ParseError(PersistenceException):
    """
    Raised when a bifiltration file cannot be parsed.
    """

    def __init__(self, message: str, line_number: int = None):
        if line_number is not None:
            message = "line {}: {}".format(line_number, message)
        super().__init__(message)
        self.line_number = line_number


class ValidationError(PersistenceException):
    """
    Raised when a bifiltration, filtration order or path breaks its invariants.
    """

    def __init__(self, message: str, violations=()):
        super().__init__(message)
        self.violations = list(violations)


class DegenerateFiltrationError(ValidationError):
    """
    Raised when an operation needs a non-degenerate bifiltration and got a degenerate one.
    """


class FieldError(PersistenceException):
    """
    Raised on a non-prime characteristic or a division by zero.
    """


class TranspositionError(PersistenceException):
    """
    Raised when two adjacent simplices cannot be exchanged (one is a face of the other).
    """


class InvariantViolation(PersistenceException):
    """
    Raised when an internal invariant no longer holds.

    This always indicates a defect in the library, never bad input.
    """


class CapExceededError(PersistenceException):
    """
    Raised when the brute-force oracle is asked for a grid larger than the configured cap.
    """
