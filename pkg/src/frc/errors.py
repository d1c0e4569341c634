"""Exception types raised across the package."""


class FRCError(Exception):
    """Base class for all calculator errors."""


class DomainError(FRCError, ValueError):
    """An argument lies outside the domain of the operation."""


class DegenerateInputError(DomainError):
    """Input collapses the problem to a lower-order one (e.g. a = 0 in a quadratic)."""


class BracketError(FRCError, ValueError):
    """Target value is not straddled by the function values at the bracket ends."""


class NoSolutionError(FRCError, ArithmeticError):
    """The cutoff equation has no solution for the requested parameters.

    The offending right-hand side is kept on ``rhs`` so callers can report it.
    """

    def __init__(self, message, rhs=None):
        super().__init__(message)
        self.rhs = rhs


class ParseError(FRCError, ValueError):
    def __init__(self, message, *, line=None, span=None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line
        self.span = span


class DuplicateRecordError(FRCError, ValueError):
    pass
