"""Exception types shared across the package."""


class DeltaOutOfRange(ValueError):
    """Designed distance outside the range where the dimension formula holds."""


class NotEnoughCosets(ValueError):
    """Fewer valid cyclotomic cosets exist than were requested."""


class InvalidCoset(ValueError):
    """Coset fails the size or distinct-differences requirement."""

    def __init__(self, msg, offending_shift=None):
        super().__init__(msg)
        self.offending_shift = offending_shift


class NotRegular(ValueError):
    """Matrix is not (column, row)-regular.

    axis is "column" or "row"; index is the first offending one.
    """

    def __init__(self, msg, axis, index):
        super().__init__(msg)
        self.axis = axis
        self.index = index


class BudgetTooLarge(ValueError):
    """Estimated enumeration cost exceeds the configured work limit."""


class ParseError(ValueError):
    """Malformed alist input; carries the 1-based offending line number."""

    def __init__(self, msg, line):
        super().__init__(f"line {line}: {msg}")
        self.line = line


class ConsistencyError(ValueError):
    """alist row and column index lists are not transposes of each other."""
