"""Exception types shared across the package."""

from __future__ import annotations


class LehmerError(ValueError):
    """Base class for domain validation failures; `code` is machine-readable."""

    code = "domain"


class ParseError(LehmerError):
    """Malformed text input. `position` is the 1-based index of the first bad token."""

    code = "parse"

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class GbspError(LehmerError):
    """Invalid g-augmented parenthesization.

    `code` is one of "unbalanced-base", "g-missing", "g-extra", "g-out-of-range";
    `space` names the offending space where applicable.
    """

    def __init__(self, message: str, code: str, space: int | None = None):
        super().__init__(message)
        self.code = code
        self.space = space
