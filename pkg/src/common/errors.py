"""Exception hierarchy shared by every census package.

The CLI maps these onto exit codes: usage-type errors exit 1, an
``InvariantViolation`` (or anything unexpected) exits 2.
"""


class CensusError(Exception):
    """Base class for all errors raised by the census packages."""


class DomainError(CensusError, ValueError):
    """An argument lies outside the domain of the operation."""


class PreconditionError(CensusError):
    """An operation was called on an object violating its precondition."""


class EnumerationRefused(CensusError):
    """An exhaustive search was requested above the configured cutoff."""

    def __init__(self, requested: int, cutoff: int, what: str = "enumeration"):
        self.requested = requested
        self.cutoff = cutoff
        super().__init__(
            f"{what} refused for size {requested}: cutoff is {cutoff}"
        )


class InvariantViolation(CensusError):
    """An internal consistency check failed."""

    def __init__(self, check: str, details: str = ""):
        self.check = check
        self.details = details
        message = f"invariant '{check}' violated"
        if details:
            message += f": {details}"
        super().__init__(message)
