"""Exception types shared across the package."""


class TimedTabError(Exception):
    """Base class for every error raised by this package."""


class DurationError(TimedTabError, ValueError):
    """Negative or otherwise invalid duration."""


class AlphabetError(TimedTabError, ValueError):
    """Letter outside the alphabet, or mixing incompatible alphabets."""


class ParseError(TimedTabError, ValueError):
    """Malformed textual input.  ``position`` is a character offset."""

    def __init__(self, message, position=None):
        if position is not None:
            message = f"{message} (at position {position})"
        super().__init__(message)
        self.position = position


class IntervalError(TimedTabError, ValueError):
    """Interval set is unordered, overlapping, or out of bounds."""


class NotARowError(TimedTabError, ValueError):
    """A weakly increasing timed word was required."""


class NotATableauError(TimedTabError, ValueError):
    """Row stack violates the dominance chain.

    ``pair`` names the first offending pair of rows, counted from the
    bottom row upward starting at 1.
    """

    def __init__(self, message, pair=None):
        super().__init__(message)
        self.pair = pair


class InterleavingError(TimedTabError, ValueError):
    """Partitions fail the required interleaving chain."""


class InvalidMoveError(TimedTabError, ValueError):
    """A rewrite step does not match the pattern of its relation."""


class ReconstructionError(TimedTabError, ValueError):
    """An inverse operation failed to reproduce its defining equation."""


class OracleCapError(TimedTabError, ValueError):
    """Instance too large for the exhaustive oracle."""


class ShapeMismatchError(TimedTabError, ValueError):
    """Tableau pair does not have equal shapes."""


class MatrixError(TimedTabError, ValueError):
    """Invalid matrix input."""
