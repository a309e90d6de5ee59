"""Timed words over the ordered alphabet {1, ..., n}, with exact durations.

A timed word is a piecewise-constant, right-continuous step function from
[0, r) into the alphabet, stored canonically as a sequence of
(letter, duration) segments: every duration is a positive rational and
adjacent segments never repeat a letter.  Words are immutable values and
every operation is pure, so they can be shared freely.
"""

from __future__ import annotations

import re
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Tuple, Union

from .errors import (
    AlphabetError,
    DurationError,
    IntervalError,
    NotARowError,
    ParseError,
)

DurationLike = Union[int, float, str, Fraction]
Segment = Tuple[int, Fraction]

_TOKEN_RE = re.compile(
    r"(?P<letter>[0-9]+)\^(?P<duration>[0-9]+(?:\.[0-9]*)?|\.[0-9]+|[0-9]+/[0-9]+)\Z"
)


def to_duration(value: DurationLike) -> Fraction:
    """Coerce ``value`` to an exact nonnegative rational.

    Floats are read through their shortest decimal representation, so the
    literal ``0.7`` means exactly 7/10.  Strings accept decimal numerals
    and ``p/q`` fractions.
    """
    if isinstance(value, float):
        value = repr(value)
    try:
        q = Fraction(value)
    except (ValueError, TypeError, ZeroDivisionError) as exc:
        raise DurationError(f"invalid duration {value!r}") from exc
    if q < 0:
        raise DurationError(f"negative duration {value!r}")
    return q


def duration_str(q: Fraction) -> str:
    """Exact text form of a rational: a finite decimal when one exists
    (denominator of the form 2^a 5^b), otherwise ``p/q``."""
    q = Fraction(q)
    if q.denominator == 1:
        return str(q.numerator)
    d = q.denominator
    twos = fives = 0
    while d % 2 == 0:
        d //= 2
        twos += 1
    while d % 5 == 0:
        d //= 5
        fives += 1
    if d != 1:
        return f"{q.numerator}/{q.denominator}"
    k = max(twos, fives)
    digits = str(abs(q.numerator) * 10**k // q.denominator).rjust(k + 1, "0")
    sign = "-" if q.numerator < 0 else ""
    return f"{sign}{digits[:-k]}.{digits[-k:]}"


class IntervalSet:
    """A sorted, pairwise disjoint union of half-open intervals [a, b)."""

    __slots__ = ("_intervals",)

    def __init__(self, intervals: Iterable[Tuple[DurationLike, DurationLike]] = ()):
        result = []
        for a, b in intervals:
            a, b = to_duration(a), to_duration(b)
            if a >= b:
                raise IntervalError(f"empty or reversed interval [{a}, {b})")
            if result and a < result[-1][1]:
                raise IntervalError(
                    f"interval [{a}, {b}) overlaps or precedes [{result[-1][0]}, {result[-1][1]})"
                )
            result.append((a, b))
        self._intervals = tuple(result)

    @property
    def intervals(self) -> Tuple[Tuple[Fraction, Fraction], ...]:
        return self._intervals

    @property
    def measure(self) -> Fraction:
        return sum((b - a for a, b in self._intervals), Fraction(0))

    def __iter__(self) -> Iterator[Tuple[Fraction, Fraction]]:
        return iter(self._intervals)

    def __len__(self) -> int:
        return len(self._intervals)

    def __eq__(self, other) -> bool:
        if not isinstance(other, IntervalSet):
            return NotImplemented
        return self._intervals == other._intervals

    def __hash__(self) -> int:
        return hash(self._intervals)

    def __repr__(self) -> str:
        spans = ", ".join(f"[{duration_str(a)}, {duration_str(b)})" for a, b in self._intervals)
        return f"IntervalSet({{{spans}}})"


class TimedWord:
    """Canonical timed word.  ``alphabet_size`` defaults to the largest
    letter present (0 for the empty word)."""

    __slots__ = ("_segments", "_n", "_length")

    def __init__(
        self,
        segments: Iterable[Tuple[int, DurationLike]] = (),
        alphabet_size: Optional[int] = None,
    ):
        canonical: list = []
        for letter, dur in segments:
            if not isinstance(letter, int) or isinstance(letter, bool) or letter < 1:
                raise AlphabetError(f"letter {letter!r} is not a positive integer")
            dur = to_duration(dur)
            if dur == 0:
                continue
            if canonical and canonical[-1][0] == letter:
                canonical[-1] = (letter, canonical[-1][1] + dur)
            else:
                canonical.append((letter, dur))
        max_letter = max((c for c, _ in canonical), default=0)
        if alphabet_size is None:
            alphabet_size = max_letter
        elif alphabet_size < max_letter:
            raise AlphabetError(
                f"letter {max_letter} exceeds alphabet size {alphabet_size}"
            )
        if alphabet_size < 0:
            raise AlphabetError("alphabet size must be nonnegative")
        self._segments = tuple(canonical)
        self._n = alphabet_size
        self._length = sum((t for _, t in canonical), Fraction(0))

    @classmethod
    def empty(cls, alphabet_size: int = 0) -> "TimedWord":
        return cls((), alphabet_size)

    @classmethod
    def from_text(cls, text: str, alphabet_size: Optional[int] = None) -> "TimedWord":
        """Parse whitespace-separated ``letter^duration`` tokens.

        The duration is a decimal numeral (parsed exactly) or ``p/q``.
        An empty or all-whitespace string is the empty word.
        """
        segments = []
        for match in re.finditer(r"\S+", text):
            token = match.group(0)
            parsed = _TOKEN_RE.match(token)
            if parsed is None:
                raise ParseError(f"bad token {token!r}", position=match.start())
            letter = int(parsed.group("letter"))
            if letter < 1:
                raise ParseError(f"bad letter in {token!r}", position=match.start())
            try:
                duration = Fraction(parsed.group("duration"))
            except ZeroDivisionError:
                raise ParseError(
                    f"zero denominator in {token!r}", position=match.start()
                ) from None
            segments.append((letter, duration))
        return cls(segments, alphabet_size)

    @property
    def segments(self) -> Tuple[Segment, ...]:
        return self._segments

    @property
    def alphabet_size(self) -> int:
        return self._n

    @property
    def length(self) -> Fraction:
        return self._length

    @property
    def first_letter(self) -> Optional[int]:
        return self._segments[0][0] if self._segments else None

    @property
    def last_letter(self) -> Optional[int]:
        return self._segments[-1][0] if self._segments else None

    def __bool__(self) -> bool:
        return bool(self._segments)

    def __eq__(self, other) -> bool:
        if not isinstance(other, TimedWord):
            return NotImplemented
        return self._n == other._n and self._segments == other._segments

    def __hash__(self) -> int:
        return hash((self._n, self._segments))

    def __str__(self) -> str:
        return " ".join(f"{c}^{duration_str(t)}" for c, t in self._segments)

    def __repr__(self) -> str:
        return f"TimedWord({str(self)!r}, alphabet_size={self._n})"

    def __add__(self, other: "TimedWord") -> "TimedWord":
        if not isinstance(other, TimedWord):
            return NotImplemented
        if self._n != other._n:
            raise AlphabetError(
                f"alphabet mismatch: {self._n} vs {other._n}"
            )
        return TimedWord(self._segments + other._segments, self._n)

    def with_alphabet(self, alphabet_size: int) -> "TimedWord":
        """The same word viewed over a (possibly larger) alphabet."""
        return TimedWord(self._segments, alphabet_size)

    def at(self, t: DurationLike) -> int:
        """Value of the step function at time ``t`` in [0, length)."""
        t = Fraction(t)
        if t < 0 or t >= self._length:
            raise IntervalError(f"time {t} outside [0, {self._length})")
        for letter, dur in self._segments:
            if t < dur:
                return letter
            t -= dur
        raise AssertionError("unreachable")

    def weight(self) -> Tuple[Fraction, ...]:
        """Total duration of each letter, as a vector of length n."""
        acc = [Fraction(0)] * self._n
        for letter, dur in self._segments:
            acc[letter - 1] += dur
        return tuple(acc)

    def slice(self, a: DurationLike, b: DurationLike) -> "TimedWord":
        """The restriction of the word to [a, b), shifted to start at 0."""
        a, b = Fraction(a), Fraction(b)
        if not 0 <= a <= b <= self._length:
            raise IntervalError(
                f"slice [{a}, {b}) outside [0, {self._length}]"
            )
        out = []
        pos = Fraction(0)
        for letter, dur in self._segments:
            lo, hi = max(pos, a), min(pos + dur, b)
            if lo < hi:
                out.append((letter, hi - lo))
            pos += dur
            if pos >= b:
                break
        return TimedWord(out, self._n)

    def subword(self, intervals) -> "TimedWord":
        """Concatenation of the restrictions of the word to each interval."""
        if not isinstance(intervals, IntervalSet):
            intervals = IntervalSet(intervals)
        parts = []
        for a, b in intervals:
            if b > self._length:
                raise IntervalError(
                    f"interval [{a}, {b}) exceeds word length {self._length}"
                )
            parts.extend(self.slice(a, b).segments)
        return TimedWord(parts, self._n)

    def sharp(self) -> "TimedWord":
        """Reverse the word and the alphabet simultaneously; an involution."""
        n = self._n
        return TimedWord(
            tuple((n - c + 1, t) for c, t in reversed(self._segments)), n
        )

    def restrict(self, k: int) -> "TimedWord":
        """Drop every segment with letter above ``k``; result over {1,..,k}."""
        if not 1 <= k <= self._n:
            raise AlphabetError(f"restriction level {k} outside 1..{self._n}")
        return TimedWord(
            tuple((c, t) for c, t in self._segments if c <= k), k
        )

    def scale(self, factor: DurationLike) -> "TimedWord":
        """Multiply every duration by a nonnegative rational."""
        factor = to_duration(factor)
        return TimedWord(
            tuple((c, t * factor) for c, t in self._segments), self._n
        )

    def is_row(self) -> bool:
        """True iff the word is weakly increasing (canonical form: strictly
        increasing segment letters)."""
        return all(
            self._segments[i][0] < self._segments[i + 1][0]
            for i in range(len(self._segments) - 1)
        )

    def require_row(self) -> "TimedWord":
        if not self.is_row():
            raise NotARowError(f"{self} is not weakly increasing")
        return self

    def row_decomposition(self) -> list:
        """Maximal weakly increasing factors, in reading order.

        Cuts fall exactly at the strict descents, so the pieces concatenate
        back to the word and no two adjacent pieces form a row.
        """
        rows = []
        current: list = []
        for letter, dur in self._segments:
            if current and letter <= current[-1][0]:
                rows.append(TimedWord(current, self._n))
                current = []
            current.append((letter, dur))
        if current:
            rows.append(TimedWord(current, self._n))
        return rows


def concat(words: Sequence[TimedWord], alphabet_size: Optional[int] = None) -> TimedWord:
    """Concatenate words that share one alphabet (empty sequence allowed)."""
    sizes = {w.alphabet_size for w in words}
    if len(sizes) > 1:
        raise AlphabetError(f"alphabet mismatch: {sorted(sizes)}")
    if alphabet_size is None:
        alphabet_size = sizes.pop() if sizes else 0
    segments = []
    for w in words:
        segments.extend(w.segments)
    return TimedWord(segments, alphabet_size)
