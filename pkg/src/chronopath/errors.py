"""Exception types shared across the package."""


class ChronopathError(Exception):
    """Base class for all errors raised by this package."""


class EdgeListParseError(ChronopathError, ValueError):
    """Malformed edge-list input (bad line, loop edge, label < 1)."""


class NotAForestError(ChronopathError):
    """The underlying graph is not a forest where one was required."""


class NotChordalError(ChronopathError):
    """The input graph failed the chordality check."""


class EnumerationLimitError(ChronopathError):
    """Brute-force enumeration exceeded its configured path limit."""


class BudgetExceededError(ChronopathError):
    """No timed feedback vertex set exists within the given budget."""


class NoPathError(ChronopathError):
    """A sampler was asked for a path between unconnected vertices."""


class CounterFailureError(ChronopathError):
    """A pluggable counter returned values inconsistent with sampling."""


class NoFeasibleAlgorithmError(ChronopathError):
    """Every exact algorithm's parameter exceeded its configured cap."""


class InvalidParameterError(ChronopathError, ValueError):
    """A statistical guarantee parameter (epsilon/delta) is out of range."""
