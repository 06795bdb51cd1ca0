"""Exception types shared across the package.

The CLI maps each class to a distinct exit code.
"""

from __future__ import annotations


class InvalidArgument(ValueError):
    """A precondition on an operation's arguments was violated."""


class ParseError(ValueError):
    """Malformed graph or tree text."""

    def __init__(self, message: str, line: int | None = None, source: str | None = None):
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where += f"{source}:"
        if line is not None:
            where += f"{line}:"
        super().__init__(f"{where} {message}" if where else message)


class SizeGuardError(RuntimeError):
    """An exhaustive run was refused because the instance exceeds the size guard."""

    def __init__(self, what: str, size: int, limit: int):
        self.what = what
        self.size = size
        self.limit = limit
        super().__init__(
            f"{what}: size {size} exceeds guard {limit}; "
            "pass allow_large=True (CLI: --allow-large) to override"
        )


class ReductionSoundnessError(AssertionError):
    """A reduction's structural claim was contradicted by an exact witness."""
