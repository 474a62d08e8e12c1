"""Exception types shared across the library."""

__all__ = [
    "ShiftfreeError",
    "InvalidGroupError",
    "DomainMismatchError",
    "EmptySetError",
    "NotCosetUnionError",
    "DivisibilityError",
    "ParseError",
    "BudgetExceededError",
    "SearchExhaustedError",
]


class ShiftfreeError(Exception):
    """Base class for all library errors."""


class InvalidGroupError(ShiftfreeError, ValueError):
    """Group constructed from an empty or non-positive list of cyclic orders."""


class DomainMismatchError(ShiftfreeError, ValueError):
    """Element or subset used with a group it does not belong to."""


class EmptySetError(ShiftfreeError, ValueError):
    """Operation requires a nonempty pattern set."""


class NotCosetUnionError(ShiftfreeError, ValueError):
    """Subset is not a union of cosets of the given subgroup."""


class DivisibilityError(ShiftfreeError, ValueError):
    """Integer arguments violate a required divisibility relation."""


class ParseError(ShiftfreeError, ValueError):
    """Textual group or set spec could not be parsed."""


class BudgetExceededError(ShiftfreeError, RuntimeError):
    """Exact solve aborted: group too large or wall-clock budget exhausted."""


class SearchExhaustedError(ShiftfreeError, RuntimeError):
    """Randomized search failed and exhaustive fallback found no avoiding set."""
