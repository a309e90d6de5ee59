import pytest
from hypothesis import settings

from timedtab import LeadingSequence, MatrixError, NonNegMatrix, TimedTableau, TimedWord

settings.register_profile("exact", deadline=None)
settings.load_profile("exact")


@pytest.fixture
def maximal_leading_points():
    """A deliberately wrong leading-point picker (maximal instead of minimal
    support elements), used to prove the differential tests catch it."""

    def picker(matrix):
        support = matrix.support()
        if not support:
            raise MatrixError("zero matrix has no leading points")
        maximal = [
            (i, j)
            for i, j in support
            if not any(
                (i2, j2) != (i, j) and i2 >= i and j2 >= j for i2, j2 in support
            )
        ]
        maximal.sort(key=lambda point: point[1])
        return LeadingSequence(maximal)

    return picker


@pytest.fixture
def two_row_tableau():
    """Tableau with rows 1^1.4 2^1.6 3^0.7 and 3^0.8 4^1.1 over {1..5}."""
    return TimedTableau.from_reading_word(
        TimedWord.from_text("3^0.8 4^1.1 1^1.4 2^1.6 3^0.7", alphabet_size=5)
    )


@pytest.fixture
def example_matrix():
    return NonNegMatrix(
        [
            ["0.16", "0.29", "0.68", "0.44"],
            ["0.29", "0.70", "0.38", "0.45"],
            ["0.32", "0.29", "0.43", "0.70"],
        ]
    )
