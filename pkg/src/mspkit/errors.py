"""Exception types shared across the toolkit."""


class MspkitError(Exception):
    """Base class for all errors raised by this package."""


class InvalidInputError(MspkitError, ValueError):
    """A value violates a documented precondition (bad color, wrong length, ...)."""


class PreconditionError(InvalidInputError):
    """A variant-specific applicability condition does not hold."""


class ResourceLimitError(MspkitError, RuntimeError):
    """The requested computation exceeds a configured size cap."""


class ParseError(MspkitError, ValueError):
    """A text input is malformed.

    Carries the 1-based line number and a short machine-readable ``kind``
    slug so callers can react without string matching.
    """

    def __init__(self, kind: str, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.kind = kind
        self.line = line
        self.message = message
