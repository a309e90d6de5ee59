"""End-to-end acceptance suite.

Each criterion prints one PASS/FAIL line (run with ``pytest -s`` to see
them all) and asserts exact equality unless a tolerance is stated.
"""

import random
import time
from contextlib import contextmanager
from fractions import Fraction

import pytest

from timedtab import (
    NonNegMatrix,
    OracleCapError,
    RealPartition,
    TimedTableau,
    TimedWord,
    apply_move,
    column_word,
    delete,
    greene_oracle,
    gt_partial_sum_check,
    insert,
    insertion_tableau,
    interleaves,
    normalize_with_trace,
    rins,
    rsk,
    rsk_inverse,
    rsk_recording,
    rsk_shadows,
)
from timedtab.knuth import FORWARD, K2, KnuthMove
from timedtab.fuzz import (
    FuzzConfig,
    make_k1_instance,
    rand_capped_word,
    rand_matrix,
    rand_row,
    rand_tableau,
    rand_word,
)

W = TimedWord.from_text


@contextmanager
def criterion(number, description):
    try:
        yield
    except BaseException:
        print(f"FAIL criterion {number}: {description}")
        raise
    print(f"PASS criterion {number}: {description}")


@pytest.fixture(scope="module")
def matrix_corpus():
    rng = random.Random(20240811)
    cfg = FuzzConfig(max_m=5, max_n=5, denom_bound=10, zero_probability=0.3)
    return [rand_matrix(rng, cfg) for _ in range(1000)]


def test_criterion_1_golden_row_insertion():
    with criterion(1, "golden rins value exact and under 1 ms"):
        u = W("1^1.4 2^1.6 3^0.7")
        v = W("1^0.7 2^0.2", 3)
        expected = (W("2^0.7 3^0.2", 3), W("1^2.1 2^1.1 3^0.5", 3))
        assert rins(u, v) == expected
        best = float("inf")
        for _ in range(100):
            start = time.perf_counter()
            rins(u, v)
            best = min(best, time.perf_counter() - start)
        assert best < 0.001, f"best of 100 runs took {best:.6f}s"


def test_criterion_2_golden_insert():
    with criterion(2, "golden tableau insertion reading word exact"):
        tableau = TimedTableau.from_reading_word(
            W("3^0.8 4^1.1 1^1.4 2^1.6 3^0.7", 5)
        )
        result = insert(tableau, W("1^0.7 2^0.2", 5))
        assert (
            str(result.reading_word())
            == "3^0.7 4^0.2 2^0.7 3^0.3 4^0.9 1^2.1 2^1.1 3^0.5"
        )


def test_criterion_3_staged_insertion_tableaux():
    with criterion(3, "all four staged insertion-tableau prefixes exact"):
        w = W("3^0.8 1^0.5 4^1.1 1^0.9 2^1.6 3^0.7 1^0.7 2^0.2")
        staged = [
            "3^0.8",
            "3^0.5 1^0.5 3^0.3 4^1.1",
            "3^0.8 4^1.1 1^1.4 2^1.6 3^0.7",
            "3^0.7 4^0.2 2^0.7 3^0.3 4^0.9 1^2.1 2^1.1 3^0.5",
        ]
        tableau = TimedTableau((), 4)
        for row, expected in zip(w.row_decomposition(), staged):
            tableau = insert(tableau, row)
            assert str(tableau.reading_word()) == expected
        assert insertion_tableau(w) == tableau


def test_criterion_4_worked_rsk_example(example_matrix):
    with criterion(4, "3x4 example within 0.02 of printed, exactly consistent"):
        p, q = rsk(example_matrix)
        printed_p = W(
            "3^0.32 4^0.29 2^0.60 3^0.65 4^0.55 1^0.77 2^0.67 3^0.52 4^0.75", 4
        )
        printed_q = W("3^0.61 2^1.38 3^0.43 1^1.57 2^0.45 3^0.70", 3)
        printed_shape = (Fraction("2.71"), Fraction("1.81"), Fraction("0.61"))
        tol = Fraction("0.02")
        for got, printed in (
            (p.reading_word(), printed_p),
            (q.reading_word(), printed_q),
        ):
            assert len(got.segments) == len(printed.segments)
            for (c1, t1), (c2, t2) in zip(got.segments, printed.segments):
                assert c1 == c2 and abs(t1 - t2) <= tol
        for part, printed_part in zip(p.shape().padded(3), printed_shape):
            assert abs(part - printed_part) <= tol
        assert p.weight() == tuple(
            Fraction(x) for x in ("0.77", "1.28", "1.49", "1.59")
        )
        assert q.weight() == tuple(Fraction(x) for x in ("1.57", "1.82", "1.74"))
        assert p.shape() == q.shape()


def test_criterion_5_triple_agreement(matrix_corpus):
    with criterion(5, "1000 matrices: three algorithms agree exactly, < 60 s"):
        start = time.perf_counter()
        for matrix in matrix_corpus:
            direct = rsk(matrix)
            assert rsk_recording(matrix) == direct
            assert rsk_shadows(matrix) == direct
        elapsed = time.perf_counter() - start
        assert elapsed < 60, f"triple agreement took {elapsed:.1f}s"


def test_criterion_6_bijectivity(matrix_corpus):
    with criterion(6, "1000 matrices: inverse round trip and transpose symmetry"):
        for matrix in matrix_corpus:
            p, q = rsk(matrix)
            assert rsk_inverse(p, q) == matrix
            assert rsk(matrix.transpose()) == (q, p)


def test_criterion_7_greene_oracle_equivalence():
    with criterion(7, "500 capped words: greene equals the oracle for k in 1..3"):
        rng = random.Random(7001)
        cfg = FuzzConfig(oracle_units=12)
        for _ in range(500):
            w = rand_capped_word(rng, cfg)
            shape = insertion_tableau(w).shape()
            for k in (1, 2, 3):
                fast = sum((shape.part(i) for i in range(k)), Fraction(0))
                assert fast == greene_oracle(w, k, cap=12)


def test_criterion_8_knuth_soundness():
    with criterion(8, "500 words: traces replay, moves preserve P and capped a_k"):
        rng = random.Random(8001)
        cfg = FuzzConfig()
        for index in range(500):
            w = rand_capped_word(rng, cfg) if index % 2 else rand_word(rng, cfg)
            tableau, trace = normalize_with_trace(w)
            assert tableau == insertion_tableau(w)
            try:
                oracle = [greene_oracle(w, k, cfg.oracle_cap) for k in (1, 2, 3)]
            except OracleCapError:
                oracle = None
            current = w
            for move in trace:
                current = apply_move(current, move)
                assert insertion_tableau(current) == tableau
                if oracle is not None:
                    assert oracle == [
                        greene_oracle(current, k, cfg.oracle_cap) for k in (1, 2, 3)
                    ]
            assert current == tableau.reading_word()


def test_criterion_9_pieri_round_trip():
    with criterion(9, "1000 pairs: delete inverts insert with exact bookkeeping"):
        rng = random.Random(9001)
        cfg = FuzzConfig()
        for _ in range(1000):
            tableau, row = rand_tableau(rng, cfg), rand_row(rng, cfg)
            grown = insert(tableau, row)
            assert grown.weight() == tuple(
                a + b for a, b in zip(tableau.weight(), row.weight())
            )
            assert interleaves(grown.shape(), tableau.shape())
            assert delete(grown, tableau.shape()) == (row, tableau)


def test_criterion_10_involution_and_duality():
    with criterion(10, "1000 sharp involutions and 200 relation transports"):
        rng = random.Random(10001)
        cfg = FuzzConfig()
        for _ in range(1000):
            w = rand_word(rng, cfg)
            assert w.sharp().sharp() == w
        produced = 0
        while produced < 200:
            instance = make_k1_instance(rng, cfg)
            if instance is None:
                continue
            produced += 1
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
            assert apply_move(word.sharp(), mirrored) == rewritten.sharp()


def _small_integer_matrices(max_mass):
    def cells(count, budget):
        if count == 1:
            for value in range(budget + 1):
                yield (value,)
            return
        for value in range(budget + 1):
            for rest in cells(count - 1, budget - value):
                yield (value,) + rest

    for m in (1, 2, 3):
        for n in (1, 2, 3):
            for flat in cells(m * n, max_mass):
                yield NonNegMatrix(
                    [list(flat[i * n : (i + 1) * n]) for i in range(m)]
                )


def test_criterion_11_gt_and_piecewise_linearity():
    with criterion(11, "small matrices: GT partial sums and scaling exact"):
        rng = random.Random(11001)
        count = 0
        for matrix in _small_integer_matrices(3):
            count += 1
            for j in range(1, matrix.n + 1):
                for k in range(1, min(matrix.m, j) + 2):
                    lhs, rhs = gt_partial_sum_check(matrix, j, k)
                    assert lhs == rhs
            # the recording-side identity, via transpose symmetry
            flipped = matrix.transpose()
            for i in range(1, flipped.n + 1):
                for k in range(1, min(flipped.m, i) + 2):
                    lhs, rhs = gt_partial_sum_check(flipped, i, k)
                    assert lhs == rhs
            p, q = rsk(matrix)
            for _ in range(10):
                factor = Fraction(rng.randint(1, 12), rng.randint(1, 12))
                assert rsk(matrix.scale(factor)) == (
                    p.scale(factor),
                    q.scale(factor),
                )
        assert count > 400


def test_criterion_12_integer_closure():
    with criterion(12, "200 integer matrices: integral outputs, oracle shape sums"):
        rng = random.Random(12001)
        cfg = FuzzConfig(max_m=3, max_n=3, zero_probability=0.4)
        checked = 0
        while checked < 200:
            matrix = rand_matrix(rng, cfg, integer=True)
            if matrix.total() > 12:
                continue
            checked += 1
            p, q = rsk(matrix)
            for tableau in (p, q):
                for row in tableau.rows:
                    assert all(t.denominator == 1 for _, t in row.segments)
                for pattern_row in tableau.to_gt().rows:
                    assert all(x.denominator == 1 for x in pattern_row)
            assert p.weight() == matrix.col_sums()
            assert q.weight() == matrix.row_sums()
            shape = p.shape()
            word = column_word(matrix)
            for k in range(1, len(shape) + 1):
                partial = sum((shape.part(i) for i in range(k)), Fraction(0))
                assert partial == greene_oracle(word, k, cap=12)
