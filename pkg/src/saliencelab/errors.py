"""Exception types shared across the package."""

from __future__ import annotations


class SalienceLabError(Exception):
    """Base class for every error raised by this package."""


class GroundTooLarge(SalienceLabError):
    """The ground set exceeds the size gate of the requested operation."""


class TooSmall(SalienceLabError):
    """The ground set is below the minimum size of the requested operation."""


class UnsupportedN(SalienceLabError):
    """The bound calculator has no exponent for this ground-set size."""


class MissingMenu(SalienceLabError):
    """A choice table does not cover every menu of size >= 2."""


class DuplicateMenu(SalienceLabError):
    """A menu appears more than once in a choice table."""


class NonMemberChoice(SalienceLabError):
    """A chosen item does not belong to its menu."""


class NotExtendable(SalienceLabError):
    """The relation contains a cycle, so no linear extension exists."""


class EmptyMax(SalienceLabError):
    """No maximal element exists; the strict part cycles on the menu."""


class NotASwitch(SalienceLabError):
    """The given pair of menus is not a choice switch."""


class NotRls(SalienceLabError):
    """The choice is not rationalizable by linear salience."""


class InternalContractBreach(SalienceLabError):
    """A construction whose success is guaranteed failed verification.

    Raised only on implementation bugs, never on bad user input.
    """


class ParseError(SalienceLabError):
    """A choice file or witness document is malformed."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
