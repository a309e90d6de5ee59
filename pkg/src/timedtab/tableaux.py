"""Timed tableaux, real partitions and Gelfand-Tsetlin patterns.

A timed tableau is a stack of timed rows u_1, u_2, ... (stored bottom-up,
u_1 the longest) in which each row strictly dominates the one below over
its span.  Validation is eager: no unvalidated tableau value can exist.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Tuple

from .errors import (
    AlphabetError,
    InterleavingError,
    NotARowError,
    NotATableauError,
    ParseError,
)
from .words import DurationLike, TimedWord, concat, duration_str, to_duration


class RealPartition:
    """Weakly decreasing nonnegative rationals; trailing zeros are stripped,
    so equality ignores them."""

    __slots__ = ("_parts",)

    def __init__(self, parts: Iterable[DurationLike] = ()):
        values = [to_duration(p) for p in parts]
        for i in range(len(values) - 1):
            if values[i] < values[i + 1]:
                raise InterleavingError(
                    f"parts not weakly decreasing: {values[i]} < {values[i + 1]}"
                )
        while values and values[-1] == 0:
            values.pop()
        self._parts = tuple(values)

    @property
    def parts(self) -> Tuple[Fraction, ...]:
        return self._parts

    def part(self, i: int) -> Fraction:
        """The i-th part (0-based); zero beyond the last stored part."""
        return self._parts[i] if 0 <= i < len(self._parts) else Fraction(0)

    def padded(self, k: int) -> Tuple[Fraction, ...]:
        return tuple(self.part(i) for i in range(k))

    def total(self) -> Fraction:
        return sum(self._parts, Fraction(0))

    def __len__(self) -> int:
        return len(self._parts)

    def __iter__(self):
        return iter(self._parts)

    def __eq__(self, other) -> bool:
        if not isinstance(other, RealPartition):
            return NotImplemented
        return self._parts == other._parts

    def __hash__(self) -> int:
        return hash(self._parts)

    def __str__(self) -> str:
        return "(" + ", ".join(duration_str(p) for p in self._parts) + ")"

    def __repr__(self) -> str:
        return f"RealPartition({[duration_str(p) for p in self._parts]})"


def interleaves(lam: RealPartition, mu: RealPartition) -> bool:
    """True iff lam_1 >= mu_1 >= lam_2 >= mu_2 >= ... after zero padding.

    The first argument is the larger partition; the second one's parts sit
    in between its successive parts.
    """
    if not isinstance(lam, RealPartition):
        lam = RealPartition(lam)
    if not isinstance(mu, RealPartition):
        mu = RealPartition(mu)
    for i in range(max(len(lam), len(mu)) + 1):
        if not (lam.part(i) >= mu.part(i) >= lam.part(i + 1)):
            return False
    return True


def dominates(u: TimedWord, v: TimedWord) -> bool:
    """True iff v fits strictly above u: l(u) >= l(v) and u(t) < v(t) for
    every t in [0, l(v)).  Evaluated by a merged sweep over segment
    boundaries; both arguments must be rows."""
    u.require_row()
    v.require_row()
    if u.length < v.length:
        return False
    su, sv = u.segments, v.segments
    i = j = 0
    rem_u = su[0][1] if su else Fraction(0)
    rem_v = sv[0][1] if sv else Fraction(0)
    while j < len(sv):
        if su[i][0] >= sv[j][0]:
            return False
        step = min(rem_u, rem_v)
        rem_u -= step
        rem_v -= step
        if rem_u == 0:
            i += 1
            rem_u = su[i][1] if i < len(su) else Fraction(0)
        if rem_v == 0:
            j += 1
            rem_v = sv[j][1] if j < len(sv) else Fraction(0)
    return True


class TimedTableau:
    """Validated stack of timed rows, bottom row first."""

    __slots__ = ("_rows", "_n")

    def __init__(
        self,
        rows: Iterable[TimedWord] = (),
        alphabet_size: Optional[int] = None,
    ):
        rows = tuple(rows)
        if alphabet_size is None:
            alphabet_size = max((r.alphabet_size for r in rows), default=0)
        rows = tuple(r.with_alphabet(alphabet_size) for r in rows)
        for r in rows:
            if not r:
                raise NotATableauError("zero-length rows are not stored")
            r.require_row()
        for i in range(len(rows) - 1):
            if not dominates(rows[i], rows[i + 1]):
                raise NotATableauError(
                    f"row {i + 2} does not dominate row {i + 1}: "
                    f"{rows[i + 1]} over {rows[i]}",
                    pair=(i + 1, i + 2),
                )
        self._rows = rows
        self._n = alphabet_size

    @classmethod
    def from_reading_word(cls, w: TimedWord) -> "TimedTableau":
        """Validate that the row decomposition of ``w`` is a dominance chain
        and return the tableau.  Rows arrive top-down in reading order."""
        rows = w.row_decomposition()
        return cls(tuple(reversed(rows)), w.alphabet_size)

    @classmethod
    def from_text(cls, text: str, alphabet_size: Optional[int] = None) -> "TimedTableau":
        """Parse either a single reading word or ``;``-separated row strings
        (bottom row first)."""
        if ";" in text:
            rows = [TimedWord.from_text(part) for part in text.split(";")]
            n = alphabet_size
            if n is None:
                n = max((r.alphabet_size for r in rows), default=0)
            return cls(tuple(r.with_alphabet(n) for r in rows if r), n)
        return cls.from_reading_word(TimedWord.from_text(text, alphabet_size))

    @property
    def rows(self) -> Tuple[TimedWord, ...]:
        return self._rows

    @property
    def alphabet_size(self) -> int:
        return self._n

    def __bool__(self) -> bool:
        return bool(self._rows)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TimedTableau):
            return NotImplemented
        return self._n == other._n and self._rows == other._rows

    def __hash__(self) -> int:
        return hash((self._n, self._rows))

    def __str__(self) -> str:
        return str(self.reading_word())

    def __repr__(self) -> str:
        return f"TimedTableau({[str(r) for r in self._rows]}, alphabet_size={self._n})"

    def reading_word(self) -> TimedWord:
        return concat(tuple(reversed(self._rows)), self._n)

    def shape(self) -> RealPartition:
        return RealPartition(r.length for r in self._rows)

    def weight(self) -> Tuple[Fraction, ...]:
        return self.reading_word().weight()

    def row_strings(self) -> list:
        return [str(r) for r in self._rows]

    def restrict(self, k: int) -> "TimedTableau":
        """Tableau over {1,..,k} obtained by dropping letters above k from
        every row (empty rows disappear)."""
        if not 1 <= k <= self._n:
            raise AlphabetError(f"restriction level {k} outside 1..{self._n}")
        rows = [r.restrict(k) for r in self._rows]
        return TimedTableau(tuple(r for r in rows if r), k)

    def scale(self, factor: DurationLike) -> "TimedTableau":
        return TimedTableau(tuple(r.scale(factor) for r in self._rows), self._n)

    def to_gt(self) -> "GTPattern":
        """Gelfand-Tsetlin pattern whose k-th row is the shape of the
        restriction to {1,..,k}, zero-padded to length k."""
        rows = []
        for k in range(1, self._n + 1):
            rows.append(self.restrict(k).shape().padded(k))
        return GTPattern(rows)


class GTPattern:
    """Triangular array (row k has k entries, k = 1..size) satisfying the
    interleaving inequalities g[k][i] >= g[k-1][i] >= g[k][i+1]."""

    __slots__ = ("_rows",)

    def __init__(self, rows: Iterable[Iterable[DurationLike]]):
        table = []
        for k, row in enumerate(rows, start=1):
            row = tuple(to_duration(x) for x in row)
            if len(row) != k:
                raise InterleavingError(
                    f"pattern row {k} has {len(row)} entries, expected {k}"
                )
            table.append(row)
        for k in range(1, len(table)):
            upper, lower = table[k], table[k - 1]
            for i in range(k):
                if not (upper[i] >= lower[i] >= upper[i + 1]):
                    raise InterleavingError(
                        f"interleaving fails at row {k + 1}, entry {i + 1}"
                    )
        self._rows = tuple(table)

    @property
    def size(self) -> int:
        return len(self._rows)

    @property
    def rows(self) -> Tuple[Tuple[Fraction, ...], ...]:
        return self._rows

    def row(self, k: int) -> Tuple[Fraction, ...]:
        """Row of size k, 1-based."""
        return self._rows[k - 1]

    def shape(self) -> RealPartition:
        return RealPartition(self._rows[-1]) if self._rows else RealPartition()

    def __eq__(self, other) -> bool:
        if not isinstance(other, GTPattern):
            return NotImplemented
        return self._rows == other._rows

    def __hash__(self) -> int:
        return hash(self._rows)

    def __repr__(self) -> str:
        return f"GTPattern({self.to_lists()!r})"

    def to_lists(self) -> list:
        return [[duration_str(x) for x in row] for row in self._rows]

    @classmethod
    def from_lists(cls, rows: Iterable[Iterable[DurationLike]]) -> "GTPattern":
        return cls(rows)


def inflate(tab: TimedTableau, target: RealPartition, m: int) -> TimedTableau:
    """Pad a tableau over {1,..,m-1} up to ``target`` shape by appending
    runs of the letter m; the unique tableau of that shape restricting back
    to ``tab``."""
    if not isinstance(target, RealPartition):
        target = RealPartition(target)
    if m < 1 or tab.alphabet_size >= m:
        raise AlphabetError(
            f"inflation letter {m} must exceed the alphabet {tab.alphabet_size}"
        )
    lam = tab.shape()
    if not interleaves(target, lam):
        raise InterleavingError(
            f"{lam} does not interleave {target}"
        )
    if len(target) > len(tab.rows) + 1:
        raise InterleavingError(
            f"target {target} has more than one part beyond the {len(tab.rows)} rows"
        )
    rows = []
    for i, part in enumerate(target.parts):
        base = tab.rows[i].segments if i < len(tab.rows) else ()
        extra = part - lam.part(i)
        segs = base + ((m, extra),) if extra > 0 else base
        rows.append(TimedWord(segs, m))
    return TimedTableau(tuple(rows), m)


def from_gt(pattern: GTPattern) -> TimedTableau:
    """Rebuild the unique tableau whose restriction shapes give the pattern."""
    tab = TimedTableau((), 0)
    for m in range(1, pattern.size + 1):
        tab = inflate(tab, RealPartition(pattern.row(m)), m)
    return tab
