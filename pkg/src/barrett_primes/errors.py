"""Exceptions shared across the package."""


class DomainError(ValueError):
    """An argument falls outside an operation's mathematical domain."""


class ResourceLimitError(RuntimeError):
    """A request exceeds a configured resource cap (memory, array width)."""
