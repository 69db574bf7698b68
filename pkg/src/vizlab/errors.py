"""Exception types shared across the package.

Every user-facing failure raises a subclass of VizlabError so the CLI can
separate usage errors (exit code 2) from runtime failures (exit code 1).
"""

from __future__ import annotations


class VizlabError(Exception):
    """Base class for all package errors."""


class InvalidArgumentError(VizlabError):
    """A caller-supplied value violates a precondition."""


class ParseError(VizlabError):
    """Malformed input text. Carries the 1-based line number when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class EmptyInputError(ParseError):
    """Input contained no usable records."""


class FetchError(VizlabError):
    """Remote download failed (non-200 response or transport error)."""


class FetchTimeoutError(FetchError):
    """Remote download timed out."""


class FormatError(VizlabError):
    """A binary or structured file does not match the expected format."""


class ProfileError(InvalidArgumentError):
    """A run profile references unknown techniques or bad parameter values."""


class SessionFormatError(FormatError):
    """A session log violates the schema. `code` names the failed check."""

    def __init__(self, message: str, *, code: str):
        self.code = code
        super().__init__(f"{code}: {message}")


class EmptyWindowError(InvalidArgumentError):
    """A time window selects no samples."""


class UnsupportedModeError(VizlabError):
    """The requested interactive mode is unavailable in this environment."""
