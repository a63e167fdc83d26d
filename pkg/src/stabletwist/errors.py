"""Exception types."""


class DomainError(ValueError):
    """Arguments outside the mathematical domain of an operation."""


class ResourceLimitError(ValueError):
    """Arguments beyond the enforced computational bounds."""


class ConsistencyError(RuntimeError):
    """Two independent computations disagreed. Should never fire."""
