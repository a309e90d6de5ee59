"""Greene invariants: the a_k of a timed word, fast and by brute force.

a_k(w) is the maximal total length of k pairwise disjoint weakly
increasing subwords of w.  The fast path reads it off the shape of the
insertion tableau; the oracle maximizes over explicit assignments of an
integer-rescaled copy of the word and never touches insertion.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import lcm
from typing import Tuple

from .errors import OracleCapError
from .insertion import insertion_tableau
from .words import TimedWord

DEFAULT_ORACLE_CAP = 14


def greene(w: TimedWord, k: int) -> Fraction:
    """Sum of the first k parts of the insertion tableau's shape."""
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    shape = insertion_tableau(w).shape()
    return sum((shape.part(i) for i in range(k)), Fraction(0))


def greene_oracle(w: TimedWord, k: int, cap: int = DEFAULT_ORACLE_CAP) -> Fraction:
    """a_k computed independently of insertion.

    Durations are cleared to integers by the common denominator (duration
    scaling maps row subwords to row subwords measure-preservingly, so a_k
    is homogeneous), the word is expanded into unit letters, and the best
    assignment of units to k weakly increasing slots is found exactly.
    Slots are unordered: only the multiset of slot tails matters, which
    collapses the exhaustive search without changing its maximum.
    """
    if k < 1:
        raise ValueError(f"k must be positive, got {k}")
    if not w:
        return Fraction(0)
    denom = lcm(*(t.denominator for _, t in w.segments))
    units = []
    for letter, duration in w.segments:
        units.extend([letter] * int(duration * denom))
    if len(units) > cap:
        raise OracleCapError(
            f"scaled length {len(units)} exceeds oracle cap {cap}"
        )
    letters = tuple(units)

    @lru_cache(maxsize=None)
    def best(i: int, tails: Tuple[int, ...]) -> int:
        if i == len(letters):
            return 0
        c = letters[i]
        result = best(i + 1, tails)
        seen = set()
        for s, tail in enumerate(tails):
            if tail <= c and tail not in seen:
                seen.add(tail)
                extended = tuple(sorted(tails[:s] + (c,) + tails[s + 1:]))
                result = max(result, 1 + best(i + 1, extended))
        return result

    value = best(0, (0,) * k)
    best.cache_clear()
    return Fraction(value, denom)
