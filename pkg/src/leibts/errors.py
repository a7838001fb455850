"""Exception hierarchy shared by all modules."""


class LeibtsError(Exception):
    """Base class for errors raised by this package."""


class InputError(LeibtsError, ValueError):
    """Malformed input: dimension mismatch, unknown index, bad value."""


class PreconditionError(LeibtsError):
    """An operation was called on data violating its stated precondition."""


class UnsupportedInputError(LeibtsError):
    """An algorithm cannot certify its answer for this input."""


class VerificationError(LeibtsError, AssertionError):
    """An internal self-check failed; the computed result cannot be trusted."""


class ParseError(LeibtsError):
    """Syntax or semantic error in a structure-constant file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)
