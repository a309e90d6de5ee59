"""The RSK correspondence on nonnegative rational matrices.

Three routes to the same pair of equal-shape tableaux:

  * direct       -- insertion tableaux of the column word and the row word;
  * recording    -- insert matrix rows into P while growing Q by inflation;
  * shadows      -- peel antichains of leading support points, diverting the
                    overlapped mass into a shadow matrix that seeds the next
                    row (light-and-shadows).

All three agree exactly, and the correspondence inverts by alternating
restriction shapes of Q with deletions from P.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Iterable, List, Sequence, Tuple

from .errors import MatrixError, ShapeMismatchError
from .greene import DEFAULT_ORACLE_CAP, greene_oracle
from .insertion import delete, insert, insertion_tableau
from .tableaux import TimedTableau, inflate
from .words import DurationLike, TimedWord, duration_str, to_duration


class NonNegMatrix:
    """Immutable m x n matrix of nonnegative rationals, m, n >= 1."""

    __slots__ = ("_entries",)

    def __init__(self, entries: Iterable[Iterable[DurationLike]]):
        rows = tuple(tuple(to_duration(x) for x in row) for row in entries)
        if not rows or not rows[0]:
            raise MatrixError("matrix must have at least one row and one column")
        width = len(rows[0])
        if any(len(row) != width for row in rows):
            raise MatrixError("ragged rows")
        self._entries = rows

    @property
    def m(self) -> int:
        return len(self._entries)

    @property
    def n(self) -> int:
        return len(self._entries[0])

    @property
    def entries(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self._entries

    def __getitem__(self, key: Tuple[int, int]) -> Fraction:
        i, j = key
        return self._entries[i][j]

    def __eq__(self, other) -> bool:
        if not isinstance(other, NonNegMatrix):
            return NotImplemented
        return self._entries == other._entries

    def __hash__(self) -> int:
        return hash(self._entries)

    def __repr__(self) -> str:
        return f"NonNegMatrix({[[duration_str(x) for x in row] for row in self._entries]})"

    def transpose(self) -> "NonNegMatrix":
        return NonNegMatrix(zip(*self._entries))

    def row_sums(self) -> Tuple[Fraction, ...]:
        return tuple(sum(row, Fraction(0)) for row in self._entries)

    def col_sums(self) -> Tuple[Fraction, ...]:
        return tuple(sum(col, Fraction(0)) for col in zip(*self._entries))

    def total(self) -> Fraction:
        return sum(self.row_sums(), Fraction(0))

    def is_zero(self) -> bool:
        return all(x == 0 for row in self._entries for x in row)

    def scale(self, factor: DurationLike) -> "NonNegMatrix":
        factor = to_duration(factor)
        return NonNegMatrix(
            tuple(tuple(x * factor for x in row) for row in self._entries)
        )

    def columns(self, j: int) -> "NonNegMatrix":
        """Submatrix of the first j columns."""
        if not 1 <= j <= self.n:
            raise MatrixError(f"column count {j} outside 1..{self.n}")
        return NonNegMatrix(tuple(row[:j] for row in self._entries))

    def support(self) -> List[Tuple[int, int]]:
        """1-based indices of the nonzero entries, row-major."""
        return [
            (i + 1, j + 1)
            for i, row in enumerate(self._entries)
            for j, x in enumerate(row)
            if x > 0
        ]

    def to_csv(self) -> str:
        lines = [",".join(duration_str(x) for x in row) for row in self._entries]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_csv(cls, text: str) -> "NonNegMatrix":
        rows = []
        for line in text.splitlines():
            if not line.strip():
                continue
            rows.append([cell.strip() for cell in line.split(",")])
        if not rows:
            raise MatrixError("empty matrix input")
        return cls(rows)

    def to_json(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "entries": [[duration_str(x) for x in row] for row in self._entries],
        }

    @classmethod
    def from_json(cls, data) -> "NonNegMatrix":
        if isinstance(data, str):
            data = json.loads(data)
        matrix = cls(data["entries"])
        if "m" in data and data["m"] != matrix.m:
            raise MatrixError(f"declared m={data['m']} but found {matrix.m} rows")
        if "n" in data and data["n"] != matrix.n:
            raise MatrixError(f"declared n={data['n']} but found {matrix.n} columns")
        return matrix


class LeadingSequence:
    """Antichain of support points, columns strictly increasing and rows
    strictly decreasing."""

    __slots__ = ("_points",)

    def __init__(self, points: Sequence[Tuple[int, int]]):
        points = tuple(points)
        if not points:
            raise MatrixError("leading sequence of a zero matrix")
        for (i1, j1), (i2, j2) in zip(points, points[1:]):
            if not (j1 < j2 and i1 > i2):
                raise MatrixError(f"points {points} are not an antichain sequence")
        self._points = points

    @property
    def points(self) -> Tuple[Tuple[int, int], ...]:
        return self._points

    def __iter__(self):
        return iter(self._points)

    def __len__(self) -> int:
        return len(self._points)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LeadingSequence):
            return NotImplemented
        return self._points == other._points

    def __repr__(self) -> str:
        return f"LeadingSequence({list(self._points)})"


def column_word(matrix: NonNegMatrix) -> TimedWord:
    """Column numbers read along the rows, timed by the entries."""
    segments = [
        (j + 1, x)
        for row in matrix.entries
        for j, x in enumerate(row)
    ]
    return TimedWord(segments, matrix.n)


def row_word(matrix: NonNegMatrix) -> TimedWord:
    """Row numbers read along the columns, timed by the entries."""
    return column_word(matrix.transpose())


def rsk(matrix: NonNegMatrix) -> Tuple[TimedTableau, TimedTableau]:
    """Insertion tableaux of the column word and the row word."""
    return (
        insertion_tableau(column_word(matrix)),
        insertion_tableau(row_word(matrix)),
    )


def rsk_recording(matrix: NonNegMatrix) -> Tuple[TimedTableau, TimedTableau]:
    """Insert matrix rows one by one; after each insertion, inflate the
    recording tableau to the new shape with the row index."""
    p = TimedTableau((), matrix.n)
    q = TimedTableau((), 0)
    for i, row in enumerate(matrix.entries, start=1):
        p = insert(p, TimedWord([(j + 1, x) for j, x in enumerate(row)], matrix.n))
        q = inflate(q, p.shape(), i)
    return p, q


def leading_points(matrix: NonNegMatrix) -> LeadingSequence:
    """Minimal support points in the product order, by increasing column.

    The first point carries the least nonzero column and the last the
    least nonzero row of the matrix.
    """
    support = matrix.support()
    if not support:
        raise MatrixError("zero matrix has no leading points")
    minimal = [
        (i, j)
        for i, j in support
        if not any(
            (i2, j2) != (i, j) and i2 <= i and j2 <= j for i2, j2 in support
        )
    ]
    minimal.sort(key=lambda point: point[1])
    return LeadingSequence(minimal)


def shadow_pass(
    matrix: NonNegMatrix,
) -> Tuple[TimedWord, TimedWord, NonNegMatrix]:
    """One peeling pass of the light-and-shadows construction.

    Leading antichains are repeatedly stripped from the matrix: the common
    minimum of the leading entries is removed from each of them, recorded
    as one segment of the emitted row pair, and re-deposited at the inner
    corners (i_s, j_{s+1}) of consecutive leading points.  Returns the
    emitted rows of P and Q and the accumulated shadow matrix.
    """
    work = [list(row) for row in matrix.entries]
    m, n = matrix.m, matrix.n
    shadow = [[Fraction(0)] * n for _ in range(m)]
    p_segments: List[Tuple[int, Fraction]] = []
    q_segments: List[Tuple[int, Fraction]] = []
    while any(x > 0 for row in work for x in row):
        points = leading_points(NonNegMatrix(work)).points
        low = min(work[i - 1][j - 1] for i, j in points)
        for i, j in points:
            work[i - 1][j - 1] -= low
        for (i_s, _), (_, j_next) in zip(points, points[1:]):
            shadow[i_s - 1][j_next - 1] += low
        p_segments.append((points[0][1], low))
        q_segments.append((points[-1][0], low))
    return (
        TimedWord(p_segments, n),
        TimedWord(q_segments, m),
        NonNegMatrix(shadow),
    )


def rsk_shadows(matrix: NonNegMatrix) -> Tuple[TimedTableau, TimedTableau]:
    """Light-and-shadows construction: peel one row pair per pass, seeding
    each next pass with the shadow matrix of the previous one."""
    p_rows: List[TimedWord] = []
    q_rows: List[TimedWord] = []
    work = matrix
    while not work.is_zero():
        p_row, q_row, work = shadow_pass(work)
        p_rows.append(p_row)
        q_rows.append(q_row)
    return (
        TimedTableau(tuple(p_rows), matrix.n),
        TimedTableau(tuple(q_rows), matrix.m),
    )


def rsk_inverse(p: TimedTableau, q: TimedTableau) -> NonNegMatrix:
    """Invert the correspondence on an equal-shape tableau pair.

    Working from the last matrix row upward: the shape of Q restricted
    away from its top letter says what to delete from P, and the deleted
    row's weight is that matrix row.
    """
    if p.shape() != q.shape():
        raise ShapeMismatchError(
            f"shape {p.shape()} != {q.shape()}"
        )
    m, n = q.alphabet_size, p.alphabet_size
    if m < 1 or n < 1:
        raise MatrixError("tableau alphabets must be positive to recover a matrix")
    rows: List[Tuple[Fraction, ...]] = []
    current_p, current_q = p, q
    for i in range(m, 0, -1):
        previous_q = (
            current_q.restrict(i - 1) if i > 1 else TimedTableau((), 0)
        )
        extracted, current_p = delete(current_p, previous_q.shape())
        rows.append(extracted.weight())
        current_q = previous_q
    if current_p:
        raise ShapeMismatchError("deletions did not exhaust the insertion tableau")
    rows.reverse()
    return NonNegMatrix(rows)


def gt_partial_sum_check(
    matrix: NonNegMatrix, j: int, k: int, cap: int = DEFAULT_ORACLE_CAP
) -> Tuple[Fraction, Fraction]:
    """Compare a Gelfand-Tsetlin partial sum against the chain oracle.

    Left: sum of the first k entries of row j of GT(P).  Right: a_k of the
    column word of the first j columns, computed by the exhaustive oracle;
    this equals the maximal weight of a union of at most k chains in the
    index poset of those columns.
    """
    if not 1 <= j <= matrix.n:
        raise MatrixError(f"column count {j} outside 1..{matrix.n}")
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    p, _ = rsk(matrix)
    row = p.to_gt().row(j)
    lhs = sum(row[:k], Fraction(0))
    rhs = greene_oracle(column_word(matrix.columns(j)), k, cap)
    return lhs, rhs
