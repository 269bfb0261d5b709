"""Exception hierarchy shared by the solvers and the CLI."""


class SubtreeError(Exception):
    """Base class for every error raised by this package."""


class TreeParseError(SubtreeError, ValueError):
    """Input text does not describe a valid rooted tree."""


class CycleError(TreeParseError):
    pass


class MultipleRootsError(TreeParseError):
    pass


class DanglingParentError(TreeParseError):
    pass


class NonFiniteValueError(TreeParseError):
    pass


class PruneSetError(SubtreeError, ValueError):
    """A prune set contains the root or is not an antichain."""


class PreconditionError(SubtreeError, ValueError):
    """Solver input violates a documented precondition (e.g. a non-positive cost)."""


class DomainError(SubtreeError, ValueError):
    """An objective was evaluated outside its domain."""


class EnumerationLimitError(SubtreeError, RuntimeError):
    """Brute-force enumeration would exceed the configured subtree budget."""


class ConvexityError(SubtreeError, RuntimeError):
    """A piecewise linear function expected to be convex was not."""
