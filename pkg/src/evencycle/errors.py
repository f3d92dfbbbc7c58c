"""Exception hierarchy shared by every module."""

from __future__ import annotations


class EvenCycleError(Exception):
    """Base class for all library errors."""


class GraphInputError(EvenCycleError):
    """Malformed or non-simple graph input."""


class ParseError(GraphInputError):
    pass


class SelfLoop(GraphInputError):
    pass


class DuplicateEdge(GraphInputError):
    pass


class SourceNotAllowed(EvenCycleError):
    pass


class SetsOverlap(EvenCycleError):
    pass


class CountOverflow(EvenCycleError):
    """A walk/path counter left the unsigned 128-bit range."""


class BudgetExceeded(EvenCycleError):
    def __init__(self, used: int, budget: int) -> None:
        super().__init__(f"work budget exhausted: {used} > {budget}")
        self.used = used
        self.budget = budget


class EmptyGraph(EvenCycleError):
    pass


class EmptyA(EvenCycleError):
    pass


class NoEdges(EvenCycleError):
    pass


class OutOfRange(EvenCycleError):
    pass


U128_MAX = (1 << 128) - 1


def check_u128(value: int) -> int:
    if value > U128_MAX:
        raise CountOverflow(f"count {value} exceeds 2^128 - 1")
    return value


class InvariantViolation(EvenCycleError):
    """An internal consistency check failed; indicates a bug, never bad input."""
