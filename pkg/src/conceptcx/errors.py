"""Exception types shared across the package.

Each maps to a distinct CLI exit status (see ``conceptcx.cli``).
"""


class ParseError(ValueError):
    """Malformed structure text or catalog id."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (token {position})"
        super().__init__(message)
        self.position = position


class RangeError(ValueError):
    """An argument lies outside its admissible range."""


class DataError(ValueError):
    """A dataset file is unreadable or violates its schema."""

    def __init__(self, message, row=None):
        if row is not None:
            message = f"row {row}: {message}"
        super().__init__(message)
        self.row = row
