"""Timed Knuth relations, certificate traces, and plactic equivalence.

The two relations exchange length-matched row factors:

    k1:  x z y  ==  z x y   when l(z) = l(y) and last(y) < first(z),
    k2:  y x z  ==  y z x   when l(x) = l(y) and last(x) < first(y),

where x, y, z are rows whose concatenation x y z is again a row.  A move
is located by a rational offset and the three factor lengths, never by
segment indices, because a move may split segments.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .errors import AlphabetError, InvalidMoveError, NotATableauError
from .insertion import bump_segment, insertion_tableau
from .tableaux import TimedTableau
from .words import TimedWord, concat, duration_str, to_duration

K1 = "k1"
K2 = "k2"
FORWARD = "forward"
BACKWARD = "backward"

# Factor order on each side of the relations, left side first.
_SIDES = {
    K1: (("x", "z", "y"), ("z", "x", "y")),
    K2: (("y", "x", "z"), ("y", "z", "x")),
}


@dataclass(frozen=True)
class KnuthMove:
    """A checkable rewrite step; degenerate (identity) moves are rejected."""

    kind: str
    direction: str
    offset: Fraction
    lx: Fraction
    ly: Fraction
    lz: Fraction

    def __post_init__(self):
        if self.kind not in (K1, K2):
            raise InvalidMoveError(f"unknown relation {self.kind!r}")
        if self.direction not in (FORWARD, BACKWARD):
            raise InvalidMoveError(f"unknown direction {self.direction!r}")
        for name in ("offset", "lx", "ly", "lz"):
            object.__setattr__(self, name, to_duration(getattr(self, name)))
        if self.kind == K1:
            if self.ly != self.lz:
                raise InvalidMoveError("k1 requires l(z) = l(y)")
            if self.ly == 0 or self.lx == 0:
                raise InvalidMoveError("degenerate k1 move is the identity")
        else:
            if self.lx != self.ly:
                raise InvalidMoveError("k2 requires l(x) = l(y)")
            if self.lx == 0 or self.lz == 0:
                raise InvalidMoveError("degenerate k2 move is the identity")

    @property
    def span(self) -> Fraction:
        return self.lx + self.ly + self.lz

    def reverse(self) -> "KnuthMove":
        flipped = BACKWARD if self.direction == FORWARD else FORWARD
        return KnuthMove(self.kind, flipped, self.offset, self.lx, self.ly, self.lz)

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "direction": self.direction,
            "offset": duration_str(self.offset),
            "lx": duration_str(self.lx),
            "ly": duration_str(self.ly),
            "lz": duration_str(self.lz),
        }

    @classmethod
    def from_dict(cls, data: dict) -> "KnuthMove":
        return cls(
            data["kind"],
            data["direction"],
            to_duration(data["offset"]),
            to_duration(data["lx"]),
            to_duration(data["ly"]),
            to_duration(data["lz"]),
        )


def apply_move(w: TimedWord, move: KnuthMove) -> TimedWord:
    """Rewrite the factor at [offset, offset + span) to the other side of
    the move's relation, validating the full pattern first."""
    if move.offset + move.span > w.length:
        raise InvalidMoveError(
            f"factor [{move.offset}, {move.offset + move.span}) exceeds word length {w.length}"
        )
    factor = w.slice(move.offset, move.offset + move.span)
    left, right = _SIDES[move.kind]
    source, target = (left, right) if move.direction == FORWARD else (right, left)
    lengths = {"x": move.lx, "y": move.ly, "z": move.lz}
    pieces = {}
    pos = Fraction(0)
    for name in source:
        pieces[name] = factor.slice(pos, pos + lengths[name])
        pos += lengths[name]
    for name in ("x", "y", "z"):
        if not pieces[name].is_row():
            raise InvalidMoveError(f"factor {name} = {pieces[name]} is not a row")
    if not (pieces["x"] + pieces["y"] + pieces["z"]).is_row():
        raise InvalidMoveError("x y z does not concatenate to a row")
    if move.kind == K1:
        if not pieces["y"].last_letter < pieces["z"].first_letter:
            raise InvalidMoveError("k1 requires last(y) < first(z)")
    else:
        if not pieces["x"].last_letter < pieces["y"].first_letter:
            raise InvalidMoveError("k2 requires last(x) < first(y)")
    replaced = pieces[target[0]] + pieces[target[1]] + pieces[target[2]]
    return w.slice(0, move.offset) + replaced + w.slice(
        move.offset + move.span, w.length
    )


def _trace_bump(
    row: TimedWord,
    letter: int,
    duration: Fraction,
    base: Fraction,
    trace: List[KnuthMove],
) -> Tuple[TimedWord, TimedWord]:
    """One elementary bump of c^t into ``row`` starting at word offset
    ``base``, emitting the (at most two) non-identity moves that realize it.

    A bump displacing the window y of length t1 rewrites, inside the word,

        x' y x'' c^t1  --k2-->  x' y c^t1 x''  --k1-->  y x' c^t1 x''

    where the k2 step moves c^t1 over x'' (skipped when x'' is empty) and
    the k1 step floats y over x' c^t1 (skipped when x' is empty).
    """
    t0, t1, bumped, new_row = bump_segment(row, letter, duration)
    if t0 is None:
        return bumped, new_row
    tail = row.length - t0 - t1
    if tail > 0:
        trace.append(KnuthMove(K2, BACKWARD, base + t0, t1, t1, tail))
    if t0 > 0:
        trace.append(KnuthMove(K1, FORWARD, base, t0, t1, t1))
    return bumped, new_row


def normalize_with_trace(w: TimedWord) -> Tuple[TimedTableau, List[KnuthMove]]:
    """Insertion tableau of ``w`` together with a replayable certificate.

    Folding apply_move over the trace carries ``w`` to the reading word of
    the tableau; every emitted move passes apply_move validation.  A word
    that already reads as a tableau gets the empty certificate.
    """
    try:
        return TimedTableau.from_reading_word(w), []
    except NotATableauError:
        pass
    trace: List[KnuthMove] = []
    rows = w.row_decomposition()
    tab_rows: List[TimedWord] = []
    for next_row in rows:
        if not tab_rows:
            tab_rows = [next_row]
            continue
        # The tableau reading word occupies a prefix of the rewritten word;
        # the row being inserted sits immediately after it.
        offset = sum((r.length for r in tab_rows), Fraction(0))
        carried = next_row
        new_rows: List[TimedWord] = []
        for row in tab_rows:
            offset -= row.length
            shifted = Fraction(0)
            current = row
            bumped_parts: List[TimedWord] = []
            for letter, duration in carried.segments:
                bumped, current = _trace_bump(
                    current, letter, duration, offset + shifted, trace
                )
                if bumped:
                    bumped_parts.append(bumped)
                shifted += bumped.length
            new_rows.append(current)
            carried = concat(bumped_parts, w.alphabet_size)
        if carried:
            new_rows.append(carried)
        tab_rows = new_rows
    tableau = TimedTableau(tuple(tab_rows), w.alphabet_size)
    return tableau, trace


def equivalent(v: TimedWord, w: TimedWord) -> bool:
    """Decide plactic equivalence via the unique tableau in each class."""
    if v.alphabet_size != w.alphabet_size:
        raise AlphabetError(
            f"alphabet mismatch: {v.alphabet_size} vs {w.alphabet_size}"
        )
    return insertion_tableau(v) == insertion_tableau(w)
