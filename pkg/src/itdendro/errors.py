"""Exception hierarchy shared across the package.

The CLI maps these onto process exit codes: UsageError -> 1,
FormatError -> 2, IntegrityError -> 3.
"""


class ItDendroError(Exception):
    pass


class UsageError(ItDendroError):
    """Caller violated a precondition (bad flag value, metric/kind mismatch, ...)."""


class FormatError(ItDendroError):
    """Input file does not parse (ragged rows, non-numeric fields, empty input)."""


class IntegrityError(ItDendroError):
    """A structural invariant of a loaded or derived object is violated."""
