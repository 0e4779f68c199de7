"""Exception types shared across the package."""


class WeylfoldError(Exception):
    """Base class for all package errors."""


class InputError(WeylfoldError):
    """Malformed or out-of-domain user input."""


class BudgetExceeded(WeylfoldError):
    """An enumeration ran past its configured work budget."""

    def __init__(self, message, visited=None):
        super().__init__(message)
        self.visited = visited


class FoldConstructionError(WeylfoldError):
    """A folding or path construction could not be completed."""
