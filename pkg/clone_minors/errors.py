"""
Exceptions raised by the clone_minors library.
"""


class CloneMinorError(Exception):
    """Base class for all library errors."""


class DomainError(CloneMinorError, ValueError):
    """
    Invalid input: values out of range, arity or base mismatches,
    malformed text formats.
    """


class CapExceededError(CloneMinorError):
    """
    An enumeration cap or brute-force budget would be exceeded.

    Args:
        message: Human readable description
        cap: The configured limit
        attempted: The size that was requested
    """

    def __init__(self, message: str, cap: int, attempted: int):
        super().__init__(f"{message} (cap {cap}, requested {attempted})")
        self.cap = cap
        self.attempted = attempted


class UnsupportedCloneError(CloneMinorError):
    """The clone representation cannot serve the requested operation."""


class ConsistencyError(CloneMinorError):
    """An internal invariant was violated. Always a bug."""
