"""Row insertion for timed words: bumping, its inverse, and the cascade.

Inserting a segment c^t into a row u either appends it (when u never
exceeds c) or displaces the equal-length window of u starting at the first
time u exceeds c; if the window would overrun the row, the whole tail is
bumped instead.  The displaced material concatenates, left to right, into
a new row that cascades upward through a tableau.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, Optional, Tuple

from .errors import InterleavingError, ReconstructionError
from .tableaux import RealPartition, TimedTableau, dominates, interleaves
from .words import DurationLike, TimedWord, concat, to_duration


def bump_segment(
    u: TimedWord, letter: int, duration: Fraction
) -> Tuple[Optional[Fraction], Fraction, TimedWord, TimedWord]:
    """Insert a single segment into a row.

    Returns (t0, displaced_length, bumped, new_row).  ``t0`` is None when
    the segment is simply appended.  A displacement tie (tail exactly as
    long as the segment) bumps the whole tail; exact arithmetic makes the
    tie deterministic.
    """
    t0 = Fraction(0)
    for c, t in u.segments:
        if c > letter:
            break
        t0 += t
    else:
        return None, Fraction(0), TimedWord.empty(u.alphabet_size), u + TimedWord(
            ((letter, duration),), u.alphabet_size
        )
    tail = u.length - t0
    piece = TimedWord(((letter, duration),), u.alphabet_size)
    if tail > duration:
        bumped = u.slice(t0, t0 + duration)
        new_row = u.slice(0, t0) + piece + u.slice(t0 + duration, u.length)
        return t0, duration, bumped, new_row
    bumped = u.slice(t0, u.length)
    new_row = u.slice(0, t0) + piece
    return t0, tail, bumped, new_row


def rins(u: TimedWord, v: TimedWord) -> Tuple[TimedWord, TimedWord]:
    """Insert row v into row u, one canonical segment at a time.

    Returns (bumped, new_row); bumped pieces concatenate left to right and
    both outputs are rows.  Length and weight are conserved.
    """
    u.require_row()
    v.require_row()
    bumped_parts: List[TimedWord] = []
    current = u
    for letter, duration in v.segments:
        _, _, bumped, current = bump_segment(current, letter, duration)
        if bumped:
            bumped_parts.append(bumped)
    return concat(bumped_parts, u.alphabet_size), current


def rins_inverse(
    bumped: TimedWord, new_row: TimedWord, r: DurationLike
) -> Tuple[TimedWord, TimedWord]:
    """Recover the unique (u, v) with l(u) = r and rins(u, v) = (bumped, new_row).

    Works by running the insertion on the alphabet- and position-reversed
    words: the head of the new row (first r units) reversed, receiving the
    reversed bumped word, reproduces the reversed originals.
    """
    bumped.require_row()
    new_row.require_row()
    r = to_duration(r)
    total = bumped.length + new_row.length
    if r > new_row.length or total - r > new_row.length:
        raise ReconstructionError(
            f"no preimage with left length {r}: new row has length {new_row.length}"
        )
    if not dominates(new_row, bumped):
        raise ReconstructionError(
            f"{bumped} does not dominate {new_row}; not in the image of rins"
        )
    head = new_row.slice(0, r)
    v1_sharp, u_sharp = rins(head.sharp(), bumped.sharp())
    u = u_sharp.sharp()
    v = v1_sharp.sharp() + new_row.slice(r, new_row.length)
    if rins(u, v) != (bumped, new_row):
        raise ReconstructionError(
            f"reconstruction mismatch for ({bumped}, {new_row}) at {r}"
        )
    return u, v


def insert(tab: TimedTableau, v: TimedWord) -> TimedTableau:
    """Insert a row into a tableau, cascading bumped material upward.

    A nonempty final bumped word becomes a new top row.  Weight adds up,
    the old shape interleaves the new one, and the result is validated.
    """
    v = v.with_alphabet(max(v.alphabet_size, tab.alphabet_size)).require_row()
    n = max(tab.alphabet_size, v.alphabet_size)
    current = v
    new_rows: List[TimedWord] = []
    for row in tab.rows:
        current, replaced = rins(row.with_alphabet(n), current)
        new_rows.append(replaced)
    if current:
        new_rows.append(current)
    return TimedTableau(tuple(new_rows), n)


def delete(
    tab: TimedTableau, lam: RealPartition
) -> Tuple[TimedWord, TimedTableau]:
    """Invert insertion: the unique (v, T) with shape(T) = lam and
    insert(T, v) = tab.  Runs the inverse bumps top-down and re-checks the
    defining equation."""
    if not isinstance(lam, RealPartition):
        lam = RealPartition(lam)
    mu = tab.shape()
    if not interleaves(mu, lam):
        raise InterleavingError(f"{lam} does not interleave {mu}")
    depth = len(tab.rows)
    parts = len(lam)
    if parts not in (depth, depth - 1):
        raise InterleavingError(
            f"{parts} parts cannot come from deleting into {depth} rows"
        )
    n = tab.alphabet_size
    if parts == depth - 1:
        carried = tab.rows[-1]
        stack = tab.rows[:-1]
    else:
        carried = TimedWord.empty(n)
        stack = tab.rows
    recovered: List[Optional[TimedWord]] = [None] * parts
    for i in range(parts - 1, -1, -1):
        recovered[i], carried = rins_inverse(carried, stack[i], lam.part(i))
    result = TimedTableau(tuple(recovered), n)
    if insert(result, carried) != tab:
        raise ReconstructionError(f"deletion of {lam} from {tab!r} failed to invert")
    return carried, result


def insertion_tableau(w: TimedWord) -> TimedTableau:
    """Fold insertion over the row decomposition, in reading order."""
    tab = TimedTableau((), w.alphabet_size)
    for row in w.row_decomposition():
        tab = insert(tab, row)
    return tab
