"""Custom exceptions for Zipfred.

All exceptions inherit from ZipfredError so callers (and the CLI) can catch
every library failure with a single type and map it to an exit code.
"""

from typing import Optional

class ZipfredError(Exception):
    """Base exception class for all Zipfred-specific exceptions.

    Attributes:
        message: Error message describing what went wrong.
        details: Optional dictionary with additional error details.
    """

    def __init__(self, message: str, details: Optional[dict] = None) -> None:
        """Initialize ZipfredError.

        Args:
            message: Human-readable error message.
            details: Optional dictionary with additional error context.
        """
        super().__init__(message)
        self.message = message
        self.details = details or {}

    def __str__(self) -> str:
        """Return string representation of exception."""
        if self.details:
            details_str = ", ".join(f"{k}={v}" for k, v in self.details.items())
            return f"{self.message} ({details_str})"
        return self.message

    def to_dict(self) -> dict:
        """Convert exception to dictionary for serialization.

        Returns:
            Dictionary with exception type, message, and details.
        """
        return {
            "type": self.__class__.__name__,
            "message": self.message,
            "details": self.details,
        }

class ValidationError(ZipfredError):
    """Raised when an input fails validation.

    Examples: a probability vector that does not sum to one, a symbol index
    outside the alphabet, a rank outside its combinatorial range, a malformed
    subset or composition.

    Example:
        >>> raise ValidationError("Symbol out of range", {"symbol": 5, "k": 4})
    """

    pass

class ConfigurationError(ZipfredError):
    """Raised for invalid configuration values or unreadable config files."""

    pass

class CodecError(ZipfredError):
    """Raised when encoding or decoding a sequence fails."""

    pass

class CorruptStreamError(CodecError):
    """Raised when a bitstream or container is truncated or inconsistent.

    Example:
        >>> raise CorruptStreamError("Payload truncated", {"expected": 14, "available": 9})
    """

    pass

class InstanceTooLargeError(ZipfredError):
    """Raised when an exhaustive computation exceeds its desk-scale guard."""

    pass

class InfeasibleInstanceError(ZipfredError):
    """Raised when the preconditions of a bound or theorem do not hold.

    Example:
        >>> raise InfeasibleInstanceError("Requires k > n", {"k": 4, "n": 8})
    """

    pass

class ConvergenceError(ZipfredError):
    """Raised when an iterative oracle misses its tolerance.

    The reached residual is stored in ``details["residual"]``.
    """

    pass
