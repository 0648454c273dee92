"""Shared exception types with stable CLI exit-code semantics."""


class HgrFormatError(ValueError):
    """Malformed input file (HGR, list, or coloring document). CLI exit code 2."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class GuardExceededError(RuntimeError):
    """A documented search guard was exceeded. CLI exit code 3.

    Guards are explicit configuration: callers may raise them knowingly,
    but nothing is ever silently truncated or approximated.
    """


class PreconditionError(ValueError):
    """A method precondition does not hold for the given input. CLI exit code 4."""


class TheoremContradictionError(RuntimeError):
    """An outcome that established theory rules out was observed.

    Raised when a search that is guaranteed to succeed fails; it always
    indicates an implementation bug, never a property of the input.
    """
