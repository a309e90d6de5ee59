import random
from fractions import Fraction

import pytest

from timedtab import (
    InterleavingError,
    RealPartition,
    ReconstructionError,
    TimedTableau,
    TimedWord,
    delete,
    insert,
    insertion_tableau,
    interleaves,
    rins,
    rins_inverse,
)
from timedtab.fuzz import FuzzConfig, rand_row, rand_tableau

W = TimedWord.from_text


class TestRins:
    def test_worked_example(self):
        bumped, new_row = rins(W("1^1.4 2^1.6 3^0.7"), W("1^0.7 2^0.2", 3))
        assert str(bumped) == "2^0.7 3^0.2"
        assert str(new_row) == "1^2.1 2^1.1 3^0.5"

    def test_empty_insert_is_identity(self):
        u = W("1^0.5 3^0.2")
        assert rins(u, TimedWord.empty(3)) == (TimedWord.empty(3), u)

    def test_whole_row_bumped(self):
        bumped, new_row = rins(W("2^0.5", 2), W("1^0.8", 2))
        assert bumped == W("2^0.5", 2)
        assert new_row == W("1^0.8", 2)

    def test_conservation(self):
        u, v = W("1^0.3 2^0.4 4^0.1", 4), W("1^0.2 3^0.5", 4)
        bumped, new_row = rins(u, v)
        assert bumped.length + new_row.length == u.length + v.length
        assert tuple(
            a + b for a, b in zip(bumped.weight(), new_row.weight())
        ) == tuple(a + b for a, b in zip(u.weight(), v.weight()))


class TestRinsInverse:
    def test_worked_example_reversed(self):
        u, v = rins_inverse(
            W("2^0.7 3^0.2", 3), W("1^2.1 2^1.1 3^0.5", 3), Fraction("3.7")
        )
        assert u == W("1^1.4 2^1.6 3^0.7", 3)
        assert v == W("1^0.7 2^0.2", 3)

    def test_nothing_bumped(self):
        u = W("1^0.5 2^0.3")
        out_u, out_v = rins_inverse(TimedWord.empty(2), u, u.length)
        assert (out_u, out_v) == (u, TimedWord.empty(2))

    def test_whole_row_bumped(self):
        u, v = rins_inverse(W("2^0.5", 2), W("1^0.8", 2), Fraction("0.5"))
        assert u == W("2^0.5", 2)
        assert v == W("1^0.8", 2)

    def test_bad_length_rejected(self):
        with pytest.raises(ReconstructionError):
            rins_inverse(W("2^0.5", 2), W("1^0.8", 2), Fraction("0.1"))


class TestInsert:
    def test_worked_example(self, two_row_tableau):
        result = insert(two_row_tableau, W("1^0.7 2^0.2", 5))
        assert (
            str(result.reading_word())
            == "3^0.7 4^0.2 2^0.7 3^0.3 4^0.9 1^2.1 2^1.1 3^0.5"
        )

    def test_into_empty(self):
        v = W("1^0.5 2^0.2")
        assert insert(TimedTableau((), 2), v) == TimedTableau((v,), 2)

    def test_bump_to_new_row(self):
        result = insert(TimedTableau((W("2^0.5", 2),), 2), W("1^0.8", 2))
        assert [str(r) for r in result.rows] == ["1^0.8", "2^0.5"]

    def test_weight_additivity(self, two_row_tableau):
        v = W("2^0.4 3^0.1", 5)
        result = insert(two_row_tableau, v)
        assert result.weight() == tuple(
            a + b for a, b in zip(two_row_tableau.weight(), v.weight())
        )

    def test_shape_interleaves(self, two_row_tableau):
        v = W("1^0.7 2^0.2", 5)
        result = insert(two_row_tableau, v)
        assert interleaves(result.shape(), two_row_tableau.shape())
        assert result.shape().total() == two_row_tableau.shape().total() + v.length


class TestDelete:
    def test_inverts_worked_example(self, two_row_tableau):
        grown = insert(two_row_tableau, W("1^0.7 2^0.2", 5))
        row, rest = delete(grown, two_row_tableau.shape())
        assert row == W("1^0.7 2^0.2", 5)
        assert rest == two_row_tableau

    def test_full_shape_deletes_nothing(self, two_row_tableau):
        row, rest = delete(two_row_tableau, two_row_tableau.shape())
        assert not row
        assert rest == two_row_tableau

    def test_two_rows_down_to_one(self):
        tab = TimedTableau.from_text("1^0.8; 2^0.5", 2)
        row, rest = delete(tab, RealPartition(["0.5"]))
        assert row == W("1^0.8", 2)
        assert rest == TimedTableau((W("2^0.5", 2),), 2)

    def test_non_interleaving_rejected(self, two_row_tableau):
        with pytest.raises(InterleavingError):
            delete(two_row_tableau, RealPartition(["4.0", "1.0"]))


class TestInsertionTableau:
    def test_staged_prefixes(self):
        w = W("3^0.8 1^0.5 4^1.1 1^0.9 2^1.6 3^0.7 1^0.7 2^0.2")
        rows = w.row_decomposition()
        staged = [
            "3^0.8",
            "3^0.5 1^0.5 3^0.3 4^1.1",
            "3^0.8 4^1.1 1^1.4 2^1.6 3^0.7",
            "3^0.7 4^0.2 2^0.7 3^0.3 4^0.9 1^2.1 2^1.1 3^0.5",
        ]
        tab = TimedTableau((), 4)
        for row, expected in zip(rows, staged):
            tab = insert(tab, row)
            assert str(tab.reading_word()) == expected

    def test_idempotent_on_tableau_words(self, two_row_tableau):
        assert insertion_tableau(two_row_tableau.reading_word()) == two_row_tableau

    def test_two_letter_descent(self):
        tab = insertion_tableau(W("2^0.5 1^0.8"))
        assert [str(r) for r in tab.rows] == ["1^0.8", "2^0.5"]

    def test_weight_preserved(self):
        w = W("2^0.3 1^0.2 3^0.8 1^0.1", 3)
        assert insertion_tableau(w).weight() == w.weight()


class TestRandomizedRoundTrips:
    def test_stage_consistency(self):
        rng = random.Random(7)
        cfg = FuzzConfig()
        for _ in range(150):
            u, v = rand_row(rng, cfg), rand_row(rng, cfg)
            cut = v.length * Fraction(rng.randint(0, 8), 8)
            bumped_a, row_a = rins(u, v.slice(0, cut))
            bumped_b, row_b = rins(row_a, v.slice(cut, v.length))
            assert rins(u, v) == (bumped_a + bumped_b, row_b)

    def test_pieri_round_trip(self):
        rng = random.Random(11)
        cfg = FuzzConfig()
        for _ in range(150):
            tab, v = rand_tableau(rng, cfg), rand_row(rng, cfg)
            grown = insert(tab, v)
            assert delete(grown, tab.shape()) == (v, tab)

    def test_delete_then_insert(self):
        rng = random.Random(13)
        cfg = FuzzConfig()
        for _ in range(150):
            grown = insert(rand_tableau(rng, cfg), rand_row(rng, cfg))
            shape = grown.shape()
            # any interleaving sub-shape with the right number of parts
            rows = len(grown.rows)
            parts = [
                shape.part(i + 1)
                + (shape.part(i) - shape.part(i + 1)) * Fraction(rng.randint(0, 4), 4)
                for i in range(rows)
            ]
            lam = RealPartition(parts)
            if len(lam) not in (rows, rows - 1):
                continue
            v, tab = delete(grown, lam)
            assert insert(tab, v) == grown
