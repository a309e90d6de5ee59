import random
from fractions import Fraction

import pytest

from timedtab import (
    AlphabetError,
    BACKWARD,
    FORWARD,
    InvalidMoveError,
    K1,
    K2,
    KnuthMove,
    TimedWord,
    apply_move,
    equivalent,
    greene,
    insertion_tableau,
    normalize_with_trace,
)
from timedtab.fuzz import (
    FuzzConfig,
    distinguishing_context,
    make_k1_instance,
    rand_word,
)

W = TimedWord.from_text


class TestKnuthMove:
    def test_length_conditions_enforced(self):
        with pytest.raises(InvalidMoveError):
            KnuthMove(K1, FORWARD, 0, 1, 1, 2)
        with pytest.raises(InvalidMoveError):
            KnuthMove(K2, FORWARD, 0, 1, 2, 1)

    def test_degenerate_moves_rejected(self):
        with pytest.raises(InvalidMoveError):
            KnuthMove(K1, FORWARD, 0, 0, 1, 1)
        with pytest.raises(InvalidMoveError):
            KnuthMove(K2, BACKWARD, 0, 1, 1, 0)

    def test_dict_round_trip(self):
        move = KnuthMove(K2, BACKWARD, "0.3", "0.2", "0.2", "1/3")
        assert KnuthMove.from_dict(move.to_dict()) == move

    def test_reverse_flips_direction(self):
        move = KnuthMove(K1, FORWARD, 0, 1, 1, 1)
        assert move.reverse().direction == BACKWARD
        assert move.reverse().reverse() == move


class TestApplyMove:
    def test_k1_forward(self):
        w = W("1^0.3 2^0.2 1^0.2")
        move = KnuthMove(K1, FORWARD, 0, "0.3", "0.2", "0.2")
        assert apply_move(w, move) == W("2^0.2 1^0.5", 2)

    def test_k1_backward_inverts(self):
        w = W("1^0.3 2^0.2 1^0.2")
        move = KnuthMove(K1, FORWARD, 0, "0.3", "0.2", "0.2")
        assert apply_move(apply_move(w, move), move.reverse()) == w

    def test_strict_inequality_required(self):
        # last(y) equals z(0), so the k1 pattern must be rejected
        w = W("1^0.3 2^0.2 2^0.2")
        move = KnuthMove(K1, FORWARD, 0, "0.3", "0.2", "0.2")
        with pytest.raises(InvalidMoveError):
            apply_move(w, move)

    def test_factor_must_fit(self):
        move = KnuthMove(K1, FORWARD, "0.4", "0.3", "0.2", "0.2")
        with pytest.raises(InvalidMoveError):
            apply_move(W("1^0.3 2^0.2 1^0.2"), move)

    def test_moves_may_split_segments(self):
        # same rewrite, but the factor boundary falls inside 1^0.5
        w = W("1^0.5 2^0.2 1^0.2")
        move = KnuthMove(K1, FORWARD, "0.2", "0.3", "0.2", "0.2")
        assert apply_move(w, move) == W("1^0.2 2^0.2 1^0.5", 2)


class TestNormalizeWithTrace:
    def test_single_bump_single_move(self):
        tableau, trace = normalize_with_trace(W("1^0.3 2^0.2 1^0.2"))
        assert [str(r) for r in tableau.rows] == ["1^0.5", "2^0.2"]
        assert len(trace) == 1
        move = trace[0]
        assert (move.kind, move.direction, move.offset) == (K1, FORWARD, 0)
        assert (move.lx, move.ly, move.lz) == (
            Fraction(3, 10),
            Fraction(1, 5),
            Fraction(1, 5),
        )

    def test_tableau_word_has_empty_trace(self, two_row_tableau):
        tableau, trace = normalize_with_trace(two_row_tableau.reading_word())
        assert tableau == two_row_tableau
        assert trace == []

    def test_append_to_new_row_emits_nothing(self):
        tableau, trace = normalize_with_trace(W("2^0.5 1^0.8"))
        assert [str(r) for r in tableau.rows] == ["1^0.8", "2^0.5"]
        assert trace == []

    def test_replay_reaches_reading_word(self):
        rng = random.Random(3)
        cfg = FuzzConfig()
        for _ in range(200):
            w = rand_word(rng, cfg)
            tableau, trace = normalize_with_trace(w)
            current = w
            for move in trace:
                current = apply_move(current, move)
            assert current == tableau.reading_word()

    def test_every_move_preserves_the_tableau(self):
        rng = random.Random(5)
        cfg = FuzzConfig()
        for _ in range(60):
            w = rand_word(rng, cfg)
            target = insertion_tableau(w)
            current = w
            for move in normalize_with_trace(w)[1]:
                current = apply_move(current, move)
                assert insertion_tableau(current) == target


class TestSharpDuality:
    def test_k1_transports_to_k2(self):
        rng = random.Random(17)
        cfg = FuzzConfig()
        produced = 0
        while produced < 100:
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


class TestEquivalent:
    def test_single_move_pair(self):
        assert equivalent(W("1^0.3 2^0.2 1^0.2"), W("2^0.2 1^0.5", 2))

    def test_reflexive(self):
        w = W("3^0.1 1^0.4 2^0.2")
        assert equivalent(w, w)

    def test_different_weights(self):
        assert not equivalent(W("1^1.0", 2), W("2^1.0", 2))

    def test_alphabet_mismatch(self):
        with pytest.raises(AlphabetError):
            equivalent(W("1^1.0", 1), W("1^1.0", 2))

    def test_congruence(self):
        rng = random.Random(23)
        cfg = FuzzConfig()
        for _ in range(100):
            v = rand_word(rng, cfg)
            w = insertion_tableau(v).reading_word()
            before = rand_word(rng, cfg, max_segments=3)
            after = rand_word(rng, cfg, max_segments=3)
            assert equivalent(before + v + after, before + w + after)


class TestCharacterization:
    def test_separating_context_exists(self):
        rng = random.Random(29)
        cfg = FuzzConfig()
        checked = 0
        while checked < 80:
            v, w = rand_word(rng, cfg), rand_word(rng, cfg)
            pv, pw = insertion_tableau(v), insertion_tableau(w)
            if pv == pw:
                continue
            checked += 1
            prefix, suffix = distinguishing_context(pv, pw)
            left = insertion_tableau(prefix + v + suffix).shape()
            right = insertion_tableau(prefix + w + suffix).shape()
            assert left != right

    def test_equal_shape_rows_need_context(self):
        # same shape and weight multisets can still be distinguished
        v = W("1^0.5 2^0.5", 2)
        w = W("2^0.5 1^0.5", 2)
        pv, pw = insertion_tableau(v), insertion_tableau(w)
        assert pv.shape() != pw.shape()
        assert greene(v, 1) != greene(w, 1)

    def test_equal_shape_single_rows(self):
        v, w = W("1^1 3^1", 3), W("1^1 2^1", 3)
        pv, pw = insertion_tableau(v), insertion_tableau(w)
        assert pv.shape() == pw.shape() and pv != pw
        prefix, suffix = distinguishing_context(pv, pw)
        left = insertion_tableau(prefix + v + suffix).shape()
        right = insertion_tableau(prefix + w + suffix).shape()
        assert left != right

    def test_equal_shape_differing_above_the_bottom_row(self):
        # shared bottom row, equal shapes, divergence only in the second
        # row: separating these needs a depth-two restriction probe
        v = W("2^2 1^2", 3)
        w = W("2^1 3^1 1^2", 3)
        pv, pw = insertion_tableau(v), insertion_tableau(w)
        assert pv.shape() == pw.shape()
        assert pv.rows[0] == pw.rows[0] and pv.rows[1] != pw.rows[1]
        prefix, suffix = distinguishing_context(pv, pw)
        left = insertion_tableau(prefix + v + suffix).shape()
        right = insertion_tableau(prefix + w + suffix).shape()
        assert left != right
