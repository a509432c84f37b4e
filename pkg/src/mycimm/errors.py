"""Exception hierarchy shared by all modules."""

from __future__ import annotations


class MycimmError(Exception):
    """Base class for every error raised by this package."""


class ParameterError(MycimmError, ValueError):
    """A construction parameter is out of range (e.g. a cycle on 2 vertices)."""


class Graph6ParseError(MycimmError, ValueError):
    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


class InputError(MycimmError, ValueError):
    """Input data is malformed or violates an operation's precondition."""


class PreconditionError(InputError):
    pass


class ConsistencyError(MycimmError, AssertionError):
    """An internal invariant that a valid input guarantees did not hold."""
