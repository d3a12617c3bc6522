"""Exception types shared across the package."""


class SparseHalvesError(Exception):
    """Base class for all package errors."""


class CapExceeded(SparseHalvesError):
    """An exact search was asked to run on an instance above its configured cap."""


class BudgetExceeded(SparseHalvesError):
    """A branch-and-bound search ran out of node expansions."""


class PreconditionError(SparseHalvesError, ValueError):
    """Arguments violate a documented precondition."""
