"""Seeded generators and the differential property-fuzzing harness.

Every algebraic invariant of the library is a named property over random
data.  Runs are deterministic for a fixed seed: each (seed, case, property)
triple gets its own generator state, so cases are independent and may be
checked in any order.  Failing matrix inputs are shrunk before reporting:
fewer rows, then fewer columns, then zeroed entries, then rounded entries.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Dict, List, Optional, Tuple

from .errors import OracleCapError
from .greene import greene, greene_oracle
from .insertion import delete, insert, insertion_tableau, rins, rins_inverse
from .knuth import (
    FORWARD,
    K1,
    K2,
    KnuthMove,
    apply_move,
    equivalent,
    normalize_with_trace,
)
from .rsk import (
    NonNegMatrix,
    gt_partial_sum_check,
    leading_points,
    rsk,
    rsk_inverse,
    rsk_recording,
    rsk_shadows,
)
from .tableaux import (
    RealPartition,
    TimedTableau,
    dominates,
    from_gt,
    interleaves,
)
from .words import IntervalSet, TimedWord, concat


@dataclass(frozen=True)
class FuzzConfig:
    max_m: int = 5
    max_n: int = 5
    denom_bound: int = 10
    zero_probability: float = 0.3
    alphabet: int = 4
    max_segments: int = 6
    oracle_cap: int = 14
    oracle_units: int = 12


# ---------------------------------------------------------------------------
# generators


def rand_duration(rng: random.Random, denom_bound: int, max_units: int = 2) -> Fraction:
    """A positive rational p/q with q <= denom_bound."""
    q = rng.randint(1, denom_bound)
    p = rng.randint(1, max(1, max_units * q))
    return Fraction(p, q)


def rand_word(
    rng: random.Random,
    cfg: FuzzConfig,
    alphabet: Optional[int] = None,
    max_segments: Optional[int] = None,
) -> TimedWord:
    n = alphabet or cfg.alphabet
    count = rng.randint(0, max_segments or cfg.max_segments)
    segments = []
    for _ in range(count):
        segments.append((rng.randint(1, n), rand_duration(rng, cfg.denom_bound)))
    return TimedWord(segments, n)


def rand_capped_word(
    rng: random.Random, cfg: FuzzConfig, alphabet: Optional[int] = None
) -> TimedWord:
    """A word whose integer-rescaled length stays within the oracle budget."""
    n = alphabet or cfg.alphabet
    denom = rng.choice((1, 2, 3, 4))
    units = rng.randint(1, cfg.oracle_units)
    segments = []
    while units > 0:
        step = rng.randint(1, units)
        segments.append((rng.randint(1, n), Fraction(step, denom)))
        units -= step
    return TimedWord(segments, n)


def rand_row(
    rng: random.Random, cfg: FuzzConfig, alphabet: Optional[int] = None
) -> TimedWord:
    n = alphabet or cfg.alphabet
    segments = [
        (letter, rand_duration(rng, cfg.denom_bound))
        for letter in range(1, n + 1)
        if rng.random() < 0.5
    ]
    return TimedWord(segments, n)


def rand_tableau(
    rng: random.Random, cfg: FuzzConfig, alphabet: Optional[int] = None
) -> TimedTableau:
    return insertion_tableau(rand_word(rng, cfg, alphabet))


def rand_matrix(
    rng: random.Random,
    cfg: FuzzConfig,
    max_m: Optional[int] = None,
    max_n: Optional[int] = None,
    integer: bool = False,
) -> NonNegMatrix:
    m = rng.randint(1, max_m or cfg.max_m)
    n = rng.randint(1, max_n or cfg.max_n)
    entries = []
    for _ in range(m):
        row = []
        for _ in range(n):
            if rng.random() < cfg.zero_probability:
                row.append(Fraction(0))
            elif integer:
                row.append(Fraction(rng.randint(1, 3)))
            else:
                row.append(rand_duration(rng, cfg.denom_bound))
        entries.append(row)
    return NonNegMatrix(entries)


def rand_scalar(rng: random.Random, cfg: FuzzConfig) -> Fraction:
    return rand_duration(rng, cfg.denom_bound, max_units=3)


# ---------------------------------------------------------------------------
# matrix shrinking


def shrink_matrix(
    matrix: NonNegMatrix, failing: Callable[[NonNegMatrix], bool]
) -> NonNegMatrix:
    """Greedy shrink preserving ``failing``: drop rows, drop columns, zero
    entries, then simplify denominators."""
    current = matrix
    improved = True
    while improved:
        improved = False
        if current.m > 1:
            for i in range(current.m):
                candidate = NonNegMatrix(
                    [r for k, r in enumerate(current.entries) if k != i]
                )
                if failing(candidate):
                    current, improved = candidate, True
                    break
        if improved:
            continue
        if current.n > 1:
            for j in range(current.n):
                candidate = NonNegMatrix(
                    [r[:j] + r[j + 1 :] for r in current.entries]
                )
                if failing(candidate):
                    current, improved = candidate, True
                    break
        if improved:
            continue
        for i in range(current.m):
            for j in range(current.n):
                if current[i, j] == 0:
                    continue
                rows = [list(r) for r in current.entries]
                rows[i][j] = Fraction(0)
                candidate = NonNegMatrix(rows)
                if failing(candidate):
                    current, improved = candidate, True
                    break
            if improved:
                break
        if improved:
            continue
        for i in range(current.m):
            for j in range(current.n):
                value = current[i, j]
                if value.denominator == 1:
                    continue
                for simpler in (Fraction(value.numerator // value.denominator), Fraction(1)):
                    if simpler == value:
                        continue
                    rows = [list(r) for r in current.entries]
                    rows[i][j] = simpler
                    candidate = NonNegMatrix(rows)
                    if failing(candidate):
                        current, improved = candidate, True
                        break
                if improved:
                    break
            if improved:
                break
    return current


def _safe(check: Callable[[NonNegMatrix], Optional[str]], matrix: NonNegMatrix) -> Optional[str]:
    try:
        return check(matrix)
    except Exception as exc:  # any blowup is a counterexample
        return f"{type(exc).__name__}: {exc}"


def _matrix_property(
    check: Callable[[NonNegMatrix], Optional[str]], matrix: NonNegMatrix
) -> Optional[str]:
    detail = _safe(check, matrix)
    if detail is None:
        return None
    shrunk = shrink_matrix(matrix, lambda cand: _safe(check, cand) is not None)
    return f"{_safe(check, shrunk)}; counterexample:\n{shrunk.to_csv()}"


# ---------------------------------------------------------------------------
# properties (each returns None on success, a failure detail otherwise)


def prop_word_algebra(rng, cfg):
    words = [rand_word(rng, cfg) for _ in range(3)]
    for w in words:
        for (letter, dur) in w.segments:
            if dur <= 0:
                return f"zero-duration segment in {w}"
        for a, b in zip(w.segments, w.segments[1:]):
            if a[0] == b[0]:
                return f"uncanonical adjacent letters in {w}"
    a, b, c = words
    if (a + b) + c != a + (b + c):
        return f"concat not associative on {a}, {b}, {c}"
    unit = TimedWord.empty(cfg.alphabet)
    if unit + a != a or a + unit != a:
        return f"empty word is not an identity for {a}"
    lhs = (a + b).weight()
    rhs = tuple(x + y for x, y in zip(a.weight(), b.weight()))
    if lhs != rhs:
        return f"weight not additive on {a}, {b}"
    return None


def prop_sharp_involution(rng, cfg):
    w = rand_word(rng, cfg)
    if w.sharp().sharp() != w:
        return f"sharp is not an involution on {w}"
    if w.sharp().length != w.length:
        return f"sharp changed length of {w}"
    return None


def prop_subword_split(rng, cfg):
    w = rand_word(rng, cfg)
    if not w:
        return None
    cuts = sorted(w.length * Fraction(rng.randint(0, 16), 16) for _ in range(4))
    a, b, c, d = cuts
    pieces = [(a, b)] if a < b else []
    if c < d and (not pieces or c >= b):
        pieces.append((c, d))
    split = IntervalSet(pieces)
    joined = w.subword(split)
    by_parts = concat(
        [w.slice(lo, hi) for lo, hi in split], w.alphabet_size
    )
    if joined != by_parts:
        return f"subword mismatch on {w} with {split}"
    if w.subword(IntervalSet([(0, w.length)])) != w:
        return f"full-interval subword is not the identity on {w}"
    return None


def prop_restrict_tower(rng, cfg):
    w = rand_word(rng, cfg)
    n = w.alphabet_size
    if n < 1:
        return None
    j = rng.randint(1, n)
    k = rng.randint(1, j)
    if w.restrict(j).restrict(k) != w.restrict(k):
        return f"restriction tower fails on {w} with {j}, {k}"
    if w.restrict(n) != w:
        return f"full restriction is not the identity on {w}"
    return None


def prop_row_decomposition(rng, cfg):
    w = rand_word(rng, cfg)
    rows = w.row_decomposition()
    if concat(rows, w.alphabet_size) != w:
        return f"row decomposition does not reassemble {w}"
    for r in rows:
        if not r.is_row():
            return f"non-row piece {r} in decomposition of {w}"
    for r1, r2 in zip(rows, rows[1:]):
        if (r1 + r2).is_row():
            return f"adjacent pieces {r1}, {r2} merge into a row in {w}"
    return None


def prop_rins_conservation(rng, cfg):
    u, v = rand_row(rng, cfg), rand_row(rng, cfg)
    bumped, new_row = rins(u, v)
    if not bumped.is_row() or not new_row.is_row():
        return f"rins broke rows on {u}, {v}"
    if bumped.length + new_row.length != u.length + v.length:
        return f"rins broke length on {u}, {v}"
    got = tuple(x + y for x, y in zip(bumped.weight(), new_row.weight()))
    want = tuple(x + y for x, y in zip(u.weight(), v.weight()))
    if got != want:
        return f"rins broke weight on {u}, {v}"
    if not dominates(new_row, bumped):
        return f"rins output violates dominance on {u}, {v}"
    return None


def prop_rins_stage_consistency(rng, cfg):
    u, v = rand_row(rng, cfg), rand_row(rng, cfg)
    cut = v.length * Fraction(rng.randint(0, 8), 8)
    first, second = v.slice(0, cut), v.slice(cut, v.length)
    bumped_a, row_a = rins(u, first)
    bumped_b, row_b = rins(row_a, second)
    if rins(u, v) != (bumped_a + bumped_b, row_b):
        return f"staged insertion differs on {u}, {v} cut at {cut}"
    return None


def prop_rins_round_trip(rng, cfg):
    u, v = rand_row(rng, cfg), rand_row(rng, cfg)
    bumped, new_row = rins(u, v)
    if rins_inverse(bumped, new_row, u.length) != (u, v):
        return f"rins_inverse failed on {u}, {v}"
    return None


def prop_insert_shape(rng, cfg):
    tab = rand_tableau(rng, cfg)
    v = rand_row(rng, cfg)
    result = insert(tab, v)
    if result.reading_word().weight() != tuple(
        x + y for x, y in zip(tab.reading_word().weight(), v.weight())
    ):
        return f"insert broke weight on {tab!r}, {v}"
    if not interleaves(result.shape(), tab.shape()):
        return f"old shape does not interleave new on {tab!r}, {v}"
    if result.shape().total() != tab.shape().total() + v.length:
        return f"insert broke total length on {tab!r}, {v}"
    return None


def prop_pieri_round_trip(rng, cfg):
    tab = rand_tableau(rng, cfg)
    v = rand_row(rng, cfg)
    grown = insert(tab, v)
    recovered_v, recovered_tab = delete(grown, tab.shape())
    if (recovered_v, recovered_tab) != (v, tab):
        return f"delete(insert) failed on {tab!r}, {v}"
    return None


def prop_insertion_idempotent(rng, cfg):
    tab = rand_tableau(rng, cfg)
    if insertion_tableau(tab.reading_word()) != tab:
        return f"P not idempotent on {tab!r}"
    return None


def prop_trace_replay(rng, cfg):
    w = rand_word(rng, cfg)
    tableau, trace = normalize_with_trace(w)
    if tableau != insertion_tableau(w):
        return f"trace tableau differs from P on {w}"
    current = w
    for move in trace:
        current = apply_move(current, move)
    if current != tableau.reading_word():
        return f"trace does not replay to the tableau on {w}"
    return None


def prop_move_soundness(rng, cfg):
    w = rand_capped_word(rng, cfg)
    target = insertion_tableau(w)
    try:
        oracle_values = [greene_oracle(w, k, cfg.oracle_cap) for k in (1, 2, 3)]
    except OracleCapError:
        oracle_values = None
    current = w
    _, trace = normalize_with_trace(w)
    for move in trace:
        current = apply_move(current, move)
        if insertion_tableau(current) != target:
            return f"move {move} changed the insertion tableau of {w}"
        if apply_move(apply_move(current, move.reverse()), move) != current:
            return f"move {move} is not reversible on {w}"
        if oracle_values is not None:
            got = [greene_oracle(current, k, cfg.oracle_cap) for k in (1, 2, 3)]
            if got != oracle_values:
                return f"move {move} changed a Greene invariant of {w}"
    return None


def make_k1_instance(
    rng: random.Random, cfg: FuzzConfig
) -> Optional[Tuple[TimedWord, KnuthMove]]:
    """A word with a valid forward k1 move: pick a row, split x z y around
    one of its jumps, and wrap in random context."""
    row = rand_row(rng, cfg)
    if len(row.segments) < 2:
        return None
    boundary_index = rng.randint(1, len(row.segments) - 1)
    q = sum(
        (t for _, t in row.segments[:boundary_index]), Fraction(0)
    )
    room = min(q, row.length - q)
    length = room * Fraction(rng.randint(1, 7), 8)
    if length == 0 or length >= q:
        return None
    x = row.slice(0, q - length)
    z = row.slice(q, q + length)
    y = row.slice(q - length, q)
    before = rand_word(rng, cfg, max_segments=2)
    after = rand_word(rng, cfg, max_segments=2)
    word = before + x + z + y + after
    move = KnuthMove(K1, FORWARD, before.length, x.length, y.length, z.length)
    return word, move


def prop_sharp_transport(rng, cfg):
    instance = make_k1_instance(rng, cfg)
    if instance is None:
        return None
    word, move = instance
    rewritten = apply_move(word, move)
    mirrored = KnuthMove(
        K2,
        FORWARD,
        word.length - move.offset - move.span,
        move.lz,
        move.ly,
        move.lx,
    )
    if apply_move(word.sharp(), mirrored) != rewritten.sharp():
        return f"sharp transport failed for {move} on {word}"
    return None


def prop_congruence(rng, cfg):
    v = rand_word(rng, cfg)
    w = insertion_tableau(v).reading_word()
    before = rand_word(rng, cfg, max_segments=3)
    after = rand_word(rng, cfg, max_segments=3)
    if not equivalent(before + v + after, before + w + after):
        return f"congruence fails around {v} with context {before}, {after}"
    return None


def _descending_stairs(n: int, big: Fraction):
    """Suffix probes: one huge run per letter of a strictly decreasing
    chain.  A weakly increasing subword can enter at most one run of such
    a stair, and runs carry distinct letters, so the j rows of a Greene
    family pair off with the j runs and each row's remaining letters are
    capped by its run's letter."""
    letters = list(range(n, 0, -1))
    for size in range(1, n + 1):
        for chain in itertools.combinations(letters, size):
            yield TimedWord([(c, big) for c in chain], n)


def distinguishing_context(
    first: TimedTableau, second: TimedTableau
) -> Tuple[TimedWord, TimedWord]:
    """A (prefix, suffix) context under which two distinct tableaux get
    different Greene invariants.

    Distinct shapes need no context.  Equal-shape pairs are probed with
    descending stairs of huge runs, appended directly (suffix) or, via the
    reversal identity a_k(u w) = a_k(w# u#), prepended as the mirrored
    prefix.  The first probe that changes the two insertion shapes
    differently is returned.
    """
    n = first.alphabet_size
    empty = TimedWord.empty(n)
    if first.shape() != second.shape():
        return empty, empty
    v, w = first.reading_word(), second.reading_word()
    big = v.length + w.length + 1
    for probe in _descending_stairs(n, big):
        if insertion_tableau(v + probe).shape() != insertion_tableau(w + probe).shape():
            return empty, probe
        if (
            insertion_tableau(v.sharp() + probe).shape()
            != insertion_tableau(w.sharp() + probe).shape()
        ):
            return probe.sharp(), empty
    raise ValueError(
        f"no separating context found in the probe pool for {v} vs {w}"
    )


def prop_characterization(rng, cfg):
    v = rand_word(rng, cfg)
    w = rand_word(rng, cfg)
    pv, pw = insertion_tableau(v), insertion_tableau(w)
    if pv == pw:
        return None
    prefix, suffix = distinguishing_context(pv, pw)
    left = insertion_tableau(prefix + v + suffix).shape()
    right = insertion_tableau(prefix + w + suffix).shape()
    if left == right:
        return f"no Greene witness separates {v} from {w}"
    return None


def prop_greene_agreement(rng, cfg):
    w = rand_capped_word(rng, cfg)
    for k in (1, 2, 3):
        if greene(w, k) != greene_oracle(w, k, cfg.oracle_cap):
            return f"greene({w}, {k}) disagrees with the oracle"
    return None


def prop_greene_monotone(rng, cfg):
    w = rand_word(rng, cfg)
    depth = len(insertion_tableau(w).rows)
    values = [greene(w, k) for k in range(1, depth + 3)]
    for lo, hi in zip(values, values[1:]):
        if hi < lo:
            return f"greene not monotone on {w}"
    if depth and values[depth - 1] != values[depth + 1]:
        return f"greene not saturated beyond {depth} rows on {w}"
    return None


def prop_greene_sharp(rng, cfg):
    w = rand_word(rng, cfg)
    k = rng.randint(1, 3)
    if greene(w, k) != greene(w.sharp(), k):
        return f"greene not sharp-invariant on {w} at {k}"
    return None


def prop_greene_homogeneity(rng, cfg):
    w = rand_word(rng, cfg)
    k = rng.randint(1, 3)
    factor = rand_scalar(rng, cfg)
    if greene(w.scale(factor), k) != factor * greene(w, k):
        return f"greene not homogeneous on {w} scaled by {factor}"
    return None


def prop_tableau_greene_bound(rng, cfg):
    tab = insertion_tableau(rand_capped_word(rng, cfg))
    w = tab.reading_word()
    shape = tab.shape()
    for k in range(1, len(tab.rows) + 1):
        expected = sum((shape.part(i) for i in range(k)), Fraction(0))
        try:
            value = greene_oracle(w, k, cfg.oracle_cap)
        except OracleCapError:
            return None
        if value != expected:
            return f"oracle misses the row-sum bound on {w} at {k}"
    return None


def prop_gt_round_trip(rng, cfg):
    tab = rand_tableau(rng, cfg)
    pattern = tab.to_gt()
    if from_gt(pattern) != tab:
        return f"GT pattern round trip failed on {tab!r}"
    if from_gt(pattern).to_gt() != pattern:
        return f"pattern is not reproduced on {tab!r}"
    return None


def prop_restriction_interleaves(rng, cfg):
    tab = rand_tableau(rng, cfg)
    n = tab.alphabet_size
    if n < 2:
        return None
    reduced = tab.restrict(n - 1)
    if not interleaves(tab.shape(), reduced.shape()):
        return f"restriction shape does not interleave on {tab!r}"
    return None


def triple_agreement_failure(matrix) -> Optional[str]:
    """Disagreement message between the three algorithms, or None.  A crash
    in any route counts as a disagreement."""
    try:
        direct = rsk(matrix)
        recording = rsk_recording(matrix)
        shadows = rsk_shadows(matrix)
    except Exception as exc:
        return f"{type(exc).__name__}: {exc}"
    if direct != recording:
        return "recording algorithm disagrees with direct"
    if direct != shadows:
        return "shadows algorithm disagrees with direct"
    return None


def prop_triple_agreement(rng, cfg):
    return _matrix_property(triple_agreement_failure, rand_matrix(rng, cfg))


def _check_round_trip(matrix):
    p, q = rsk(matrix)
    if rsk_inverse(p, q) != matrix:
        return "rsk_inverse does not invert rsk"
    return None


def prop_rsk_round_trip(rng, cfg):
    return _matrix_property(_check_round_trip, rand_matrix(rng, cfg))


def _check_transpose(matrix):
    p, q = rsk(matrix)
    if rsk(matrix.transpose()) != (q, p):
        return "transpose does not swap the pair"
    return None


def prop_rsk_transpose(rng, cfg):
    return _matrix_property(_check_transpose, rand_matrix(rng, cfg))


def _check_weights(matrix):
    p, q = rsk(matrix)
    if p.shape() != q.shape():
        return "shapes differ"
    if p.weight() != matrix.col_sums():
        return "weight(P) is not the column sums"
    if q.weight() != matrix.row_sums():
        return "weight(Q) is not the row sums"
    return None


def prop_rsk_weights(rng, cfg):
    return _matrix_property(_check_weights, rand_matrix(rng, cfg))


def prop_rsk_homogeneity(rng, cfg):
    matrix = rand_matrix(rng, cfg)
    factor = rand_scalar(rng, cfg)
    p, q = rsk(matrix)
    scaled_p, scaled_q = rsk(matrix.scale(factor))
    if (scaled_p, scaled_q) != (p.scale(factor), q.scale(factor)):
        return f"rsk not homogeneous under {factor} on:\n{matrix.to_csv()}"
    return None


def prop_rsk_integer_closure(rng, cfg):
    matrix = rand_matrix(rng, cfg, integer=True)
    p, q = rsk(matrix)
    for tab in (p, q):
        for row in tab.rows:
            for _, dur in row.segments:
                if dur.denominator != 1:
                    return f"non-integer exponent from integer matrix:\n{matrix.to_csv()}"
        for pattern_row in tab.to_gt().rows:
            for value in pattern_row:
                if value.denominator != 1:
                    return f"non-integer GT entry from integer matrix:\n{matrix.to_csv()}"
    return None


def prop_gt_partial_sums(rng, cfg):
    matrix = rand_matrix(rng, cfg, max_m=3, max_n=3)
    try:
        for j in range(1, matrix.n + 1):
            for k in range(1, matrix.m + 2):
                lhs, rhs = gt_partial_sum_check(matrix, j, k, cfg.oracle_cap)
                if lhs != rhs:
                    return f"partial sums differ at ({j}, {k}) on:\n{matrix.to_csv()}"
    except OracleCapError:
        return None
    return None


def prop_leading_points(rng, cfg):
    matrix = rand_matrix(rng, cfg)
    if matrix.is_zero():
        return None
    points = leading_points(matrix).points
    support = set(matrix.support())
    for i, j in points:
        for i2, j2 in support:
            if (i2, j2) != (i, j) and i2 <= i and j2 <= j:
                return f"point ({i}, {j}) is not minimal in:\n{matrix.to_csv()}"
    least_col = min(j for _, j in support)
    least_row = min(i for i, _ in support)
    if points[0][1] != least_col or points[-1][0] != least_row:
        return f"leading sequence misses extremes in:\n{matrix.to_csv()}"
    return None


PROPERTIES: Dict[str, Callable] = {
    "word_algebra": prop_word_algebra,
    "sharp_involution": prop_sharp_involution,
    "subword_split": prop_subword_split,
    "restrict_tower": prop_restrict_tower,
    "row_decomposition": prop_row_decomposition,
    "rins_conservation": prop_rins_conservation,
    "rins_stage_consistency": prop_rins_stage_consistency,
    "rins_round_trip": prop_rins_round_trip,
    "insert_shape": prop_insert_shape,
    "pieri_round_trip": prop_pieri_round_trip,
    "insertion_idempotent": prop_insertion_idempotent,
    "trace_replay": prop_trace_replay,
    "move_soundness": prop_move_soundness,
    "sharp_transport": prop_sharp_transport,
    "congruence": prop_congruence,
    "characterization": prop_characterization,
    "greene_agreement": prop_greene_agreement,
    "greene_monotone": prop_greene_monotone,
    "greene_sharp": prop_greene_sharp,
    "greene_homogeneity": prop_greene_homogeneity,
    "tableau_greene_bound": prop_tableau_greene_bound,
    "gt_round_trip": prop_gt_round_trip,
    "restriction_interleaves": prop_restriction_interleaves,
    "triple_agreement": prop_triple_agreement,
    "rsk_round_trip": prop_rsk_round_trip,
    "rsk_transpose": prop_rsk_transpose,
    "rsk_weights": prop_rsk_weights,
    "rsk_homogeneity": prop_rsk_homogeneity,
    "rsk_integer_closure": prop_rsk_integer_closure,
    "gt_partial_sums": prop_gt_partial_sums,
    "leading_points": prop_leading_points,
}


@dataclass
class FuzzFailure:
    prop: str
    case: int
    detail: str


@dataclass
class FuzzReport:
    seed: int
    cases: int
    passes: Dict[str, int] = field(default_factory=dict)
    failures: List[FuzzFailure] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {
            "seed": self.seed,
            "cases": self.cases,
            "ok": self.ok,
            "passes": dict(sorted(self.passes.items())),
            "failures": [
                {"property": f.prop, "case": f.case, "detail": f.detail}
                for f in self.failures
            ],
        }

    def to_text(self) -> str:
        lines = []
        for name in sorted(self.passes):
            failed = [f for f in self.failures if f.prop == name]
            status = "FAIL" if failed else "PASS"
            lines.append(f"{status} {name}: {self.passes[name]}/{self.cases}")
        for failure in self.failures:
            lines.append(
                f"  {failure.prop} case {failure.case}: {failure.detail}"
            )
        lines.append("ok" if self.ok else "FAILED")
        return "\n".join(lines)

    def to_csv(self) -> str:
        lines = ["property,cases,passes,failures"]
        for name in sorted(self.passes):
            failed = sum(1 for f in self.failures if f.prop == name)
            lines.append(f"{name},{self.cases},{self.passes[name]},{failed}")
        return "\n".join(lines) + "\n"


def run_fuzz(
    seed: int = 0,
    cases: int = 100,
    cfg: FuzzConfig = FuzzConfig(),
    properties: Optional[Dict[str, Callable]] = None,
    max_failures_per_property: int = 3,
) -> FuzzReport:
    selected = properties if properties is not None else PROPERTIES
    report = FuzzReport(seed=seed, cases=cases)
    for name in sorted(selected):
        prop = selected[name]
        passes = 0
        for case in range(cases):
            rng = random.Random(f"{seed}:{case}:{name}")
            try:
                detail = prop(rng, cfg)
            except Exception as exc:  # crashes count as failures
                detail = f"{type(exc).__name__}: {exc}"
            if detail is None:
                passes += 1
            elif (
                sum(1 for f in report.failures if f.prop == name)
                < max_failures_per_property
            ):
                report.failures.append(FuzzFailure(name, case, detail))
        report.passes[name] = passes
    return report
