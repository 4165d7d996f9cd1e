"""Exception types shared across the package."""

from __future__ import annotations


class IdcodeError(Exception):
    """Base class for every error raised by this package."""


class GraphFormatError(IdcodeError, ValueError):
    """Malformed edge-list text or family spec."""

    def __init__(self, message: str, line: int | None = None) -> None:
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapacityError(IdcodeError, ValueError):
    """A graph would exceed the 64-vertex limit."""


class NotIdentifiableError(IdcodeError, ValueError):
    """The graph (or corona product) has two vertices with equal closed neighborhoods."""


class InfeasibleError(IdcodeError, ValueError):
    """A constraint system contains an empty constraint."""


class EnumerationOverflow(IdcodeError, RuntimeError):
    def __init__(self, cap: int) -> None:
        self.cap = cap
        super().__init__(f"enumeration exceeded cap of {cap} solutions")


class PreconditionError(IdcodeError, ValueError):
    """Arguments violate an operation's documented precondition."""
