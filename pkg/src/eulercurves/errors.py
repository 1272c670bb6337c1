"""Exception hierarchy shared across the package.

The CLI maps these to exit codes (usage -> 1, domain/precondition -> 2)
and the HTTP layer maps them to status 422.
"""


class EulerCurvesError(Exception):
    """Base class for all package errors."""


class DomainError(EulerCurvesError, ValueError):
    """An argument is outside the operation's mathematical domain."""


class PreconditionError(EulerCurvesError, ValueError):
    """Inputs are individually valid but violate a stated precondition."""
