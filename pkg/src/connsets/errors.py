"""Exception types shared across the package.

Every error carries a human-readable message naming the violated rule so
that callers (and the command line front end) can report precisely what
went wrong.
"""


class ConnsetsError(Exception):
    """Base class for all package-specific errors."""


class ContractViolationError(ConnsetsError):
    """An operation was called with arguments outside its contract."""


class ParameterError(ConnsetsError):
    """A family or transform parameter violates its documented bound."""


class ResourceCapError(ConnsetsError):
    """An exact computation would exceed the configured size cap."""


class FormatError(ConnsetsError):
    """Malformed textual input (graph6, edge list, or family spec)."""
