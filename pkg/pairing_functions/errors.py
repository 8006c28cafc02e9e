"""Exception hierarchy for pairing_functions.

Every error derives from ValueError so callers that only know about the
built-in type keep working. The CLI maps the subclasses to exit codes.
"""

from typing import Optional


class PairingError(ValueError):
    """Base class for all library errors."""

    exit_code = 2


class DomainError(PairingError):
    """An argument lies outside the domain of an operation."""


class UnknownCurveError(DomainError, LookupError):
    """A built-in curve name was not recognised."""


class UsageError(PairingError):
    """The caller combined arguments in a way the operation does not accept."""

    exit_code = 1


class ContractViolation(PairingError):
    """A MonotoneSource broke its non-decreasing or unbounded contract."""


class IntegrityError(PairingError):
    """A decoded value is not the image of the plan that decoded it."""


class DocumentError(DomainError):
    """A JSON document failed validation.

    Attributes:
        field: Name of the offending field, if known
    """

    def __init__(self, message: str, field: Optional[str] = None) -> None:
        super().__init__(f"{field}: {message}" if field is not None else message)
        self.field = field
        self.detail = message
