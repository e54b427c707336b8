"""Exception types shared across the package."""

from __future__ import annotations


class GraphError(Exception):
    """Base class for errors raised by graph operations."""


class UnknownIdError(GraphError):
    """A vertex or edge id does not exist in the graph."""


class LoopContractionError(GraphError):
    """Contraction of a loop was requested."""


class NotACycleError(GraphError):
    """An edge set that was required to be a cycle is not one."""


class BudgetExceededError(GraphError):
    """A bounded search ran out of its node budget.

    Distinct from a definite negative answer: when this is raised the
    search learned nothing.
    """


class HypothesisViolationError(GraphError):
    """An operation's guaranteeing hypothesis fails and no result exists."""


class FormatError(GraphError):
    """Malformed input to a file-format parser."""

    def __init__(self, message: str, position: int | None = None):
        if position is not None:
            message = f"{message} (at byte/char {position})"
        super().__init__(message)
        self.position = position


class UnsupportedFeatureError(GraphError):
    """The target file format cannot represent this graph."""
