"""Optimal root-containing subtrees: maximum mean, parametric envelopes and
bicriterion objectives over rooted trees."""

from .bicriterion import HullPoint, Objective, evaluate_objective, hull_points, objective, optimize
from .decision import DecisionResult, has_average_at_least, has_average_greater_than
from .errors import (
    ConvexityError,
    CycleError,
    DanglingParentError,
    DomainError,
    EnumerationLimitError,
    MultipleRootsError,
    NonFiniteValueError,
    PreconditionError,
    PruneSetError,
    SubtreeError,
    TreeParseError,
)
from .maxmean import MaxMeanResult, solve_max_mean
from .parametric import (
    EnvelopeSegment,
    ParametricSolution,
    PruneEvent,
    max_subtree_at,
    prune_event_sequence,
    solve_parametric,
)
from .plf import PLF, Breakpoint
from .tree import PruneSet, RootedTree, parse_tree, serialize, subtree_sums

__all__ = [
    "Breakpoint", "ConvexityError", "CycleError", "DanglingParentError", "DecisionResult",
    "DomainError", "EnumerationLimitError", "EnvelopeSegment", "HullPoint", "MaxMeanResult",
    "MultipleRootsError", "NonFiniteValueError", "Objective", "PLF", "ParametricSolution",
    "PreconditionError", "PruneEvent", "PruneSet", "PruneSetError", "RootedTree",
    "SubtreeError", "TreeParseError", "evaluate_objective", "has_average_at_least",
    "has_average_greater_than", "hull_points", "max_subtree_at", "objective", "optimize", "parse_tree",
    "prune_event_sequence", "serialize", "solve_max_mean", "solve_parametric", "subtree_sums",
]
