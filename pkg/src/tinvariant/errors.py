class DomainError(ValueError):
    """Input outside the domain of an operation (non-coprime fiber, zero class, ...)."""


class InconsistencyError(RuntimeError):
    """Internal cross-check failed: orbit closure, route disagreement, reconciliation."""
