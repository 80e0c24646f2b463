"""Exception types shared across the package."""

from __future__ import annotations

__all__ = ["CacheFormatError", "VerificationError"]


class VerificationError(RuntimeError):
    """An internal cross-check that should always hold has failed."""


class CacheFormatError(ValueError):
    """A persisted Bell-number cache is malformed.

    ``line`` is the 1-based line number of the first offending line.
    """

    def __init__(self, line: int, message: str) -> None:
        super().__init__(f"line {line}: {message}")
        self.line = line
