"""Exception hierarchy shared by all codecrank modules."""

from __future__ import annotations


class CodecRankError(Exception):
    """Base class for every error raised by this package."""


class EmptyInput(CodecRankError):
    """An operation received zero usable elements."""


class InvalidMetric(CodecRankError):
    """A measurement or table value violates its domain (e.g. non-positive time).

    Carries enough context to point at the offending value.
    """

    def __init__(self, message: str, *, field: str | None = None,
                 index: int | None = None, value: object = None):
        super().__init__(message)
        self.field = field
        self.index = index
        self.value = value


class InvalidCriteria(CodecRankError):
    """A criteria combination is empty or contains unknown members."""


class ParseError(CodecRankError):
    """A results or registry file could not be parsed."""

    def __init__(self, message: str, *, line: int | None = None):
        super().__init__(message)
        self.line = line


class DecodeError(CodecRankError):
    """An encoded blob is corrupt, truncated, or mismatched with its codec."""


class ExternalFailure(CodecRankError):
    """An external compressor command failed.

    ``stderr`` holds the captured diagnostic output, when any.
    """

    def __init__(self, message: str, *, stderr: str = "", returncode: int | None = None):
        super().__init__(message)
        self.stderr = stderr
        self.returncode = returncode


class Timeout(ExternalFailure):
    """An external compressor exceeded its configured time budget."""


class NotFound(ExternalFailure):
    """An external compressor binary could not be resolved."""


class UsageError(CodecRankError):
    """The caller asked for something the interface does not offer."""
