"""
Exception hierarchy for fadinggrand.

Every error raised on purpose by the package derives from FadingGrandError, so callers
(the CLI in particular) can catch package failures without swallowing programming bugs.
"""


class FadingGrandError(Exception):
    """Base class for all fadinggrand errors."""


class InvalidArgumentError(FadingGrandError, ValueError):
    """An argument violates an operation's precondition (length, range, sign)."""


class ConstructionError(FadingGrandError):
    """A code or field could not be constructed from the given parameters."""


class AlistParseError(FadingGrandError, ValueError):
    """Malformed alist input."""

    def __init__(self, message, line=None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class OracleLimitError(FadingGrandError):
    """A brute-force reference refused an input that is too large or unsupported."""


class ConfigError(FadingGrandError, ValueError):
    """Invalid simulation configuration."""
