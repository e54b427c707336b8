"""Structural graph-theory toolkit: families, containment, crossings.

Provides an immutable multigraph type, generators for named graph
families, planarity and disk-embedding machinery on rotation systems,
subdivision/minor containment search with certificates, exact
small-scale crossing-number decisions, the structure predicates used by
the verification suites, and a CLI front end.
"""

from .errors import (
    BudgetExceededError,
    FormatError,
    GraphError,
    HypothesisViolationError,
    LoopContractionError,
    NotACycleError,
    UnknownIdError,
    UnsupportedFeatureError,
)
from .multigraph import (
    Block,
    BlockForest,
    Multigraph,
    Separation,
    blocks,
    enumerate_separations,
    is_k_connected,
)

__version__ = "0.1.0"

__all__ = [
    "Multigraph",
    "Separation",
    "Block",
    "BlockForest",
    "blocks",
    "enumerate_separations",
    "is_k_connected",
    "GraphError",
    "UnknownIdError",
    "LoopContractionError",
    "NotACycleError",
    "BudgetExceededError",
    "HypothesisViolationError",
    "FormatError",
    "UnsupportedFeatureError",
    "__version__",
]
