"""Exception types shared across the package."""


class SepolyError(Exception):
    """Base class for all package errors."""


class DomainError(SepolyError, ValueError):
    """Input lies outside the mathematical domain of an operation."""


class InconsistentCountsError(DomainError):
    """Lattice-point counts do not come from a lattice polytope of the stated dimension."""


class ResourceLimitError(SepolyError, RuntimeError):
    """An enumeration guard tripped; the instance is too large for this pipeline."""


class InvariantViolation(SepolyError, AssertionError):
    """An internal consistency check failed. Always a bug, never bad input."""
