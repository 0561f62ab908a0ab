"""Exception types shared across the package."""


class QpermError(Exception):
    """Base class for package errors."""


class ValidationError(QpermError):
    """Input data violates a documented invariant or precondition."""


class BudgetError(QpermError):
    """A combinatorial term budget or resource limit was exceeded."""
