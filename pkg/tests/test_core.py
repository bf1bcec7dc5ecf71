"""Tests for words, presentations, moves and presentation series."""

import numpy as np
import pytest

from ac_workbench import (
    TRIVIAL,
    MoveSet,
    Presentation,
    PresentationFormatError,
    SeriesParameterError,
    WordError,
    apply_masked,
    apply_move,
    apply_sequence,
    canonicalize,
    free_reduce,
    gen_AK,
    gen_Gordon,
    gen_MS,
    gen_MS_dataset,
    inverse_move,
    is_trivial_state,
    neighbors,
    parse_presentation,
)
from ac_workbench.core import (
    INVERSES,
    MS_PER_N,
    auto_bound,
    commutator,
    conjugate,
    cyclic_reduce,
    format_presentation,
    from_signed,
    invert,
    is_freely_reduced,
    iter_reduced_words,
    make_presentation,
    max_relator_bound,
    min_rotation,
    move_id,
    ms_words,
    reduced_product,
    rotation_class,
    to_signed,
    word_key,
)

# ============================================================================
# Words
# ============================================================================


class TestWords:
    """Tests for free-group word operations."""

    def test_free_reduce_cancels_nested_pairs(self):
        assert free_reduce("xXyY") == ""
        assert free_reduce("xyYx") == "xx"
        assert free_reduce("xyYXy") == "y"

    def test_free_reduce_rejects_bad_letters(self):
        with pytest.raises(WordError):
            free_reduce("xaz")

    def test_reduced_product_cancels_only_at_junction(self):
        assert reduced_product("xy", "YX") == ""
        assert reduced_product("xyx", "Xy") == "xyy"
        assert reduced_product("xy", "x") == "xyx"

    def test_invert(self):
        assert invert("xy") == "YX"
        assert invert("") == ""
        assert reduced_product("xyXY", invert("xyXY")) == ""

    def test_conjugate(self):
        assert conjugate("y", "x") == "xyX"
        assert conjugate("xyX", "X") == "y"

    def test_cyclic_reduce(self):
        assert cyclic_reduce("xyX") == "y"
        assert cyclic_reduce("xyyX") == "yy"
        assert cyclic_reduce("xy") == "xy"

    def test_commutator(self):
        assert commutator("x", "y") == "xyXY"
        assert commutator("x", "x") == ""

    def test_is_freely_reduced(self):
        assert is_freely_reduced("xyXY")
        assert not is_freely_reduced("xXy")

    def test_shortlex_order_puts_lowercase_first(self):
        """Letter order is x < y < X < Y."""
        assert sorted(["Y", "X", "y", "x"], key=word_key) == ["x", "y", "X", "Y"]
        assert word_key("y") < word_key("xx")

    def test_min_rotation(self):
        assert min_rotation("yx") == "xy"
        assert min_rotation("XYxy") == "xyXY"

    def test_iter_reduced_words_counts(self):
        """4 words of length 1, then 3 choices per extra letter."""
        words = list(iter_reduced_words(3, min_length=1))
        assert len(words) == 4 + 12 + 36
        assert all(is_freely_reduced(w) for w in words)

    def test_signed_encoding(self):
        assert to_signed("xyXY") == [1, 2, -1, -2]
        assert from_signed([1, 2, 0, -1, 0]) == "xyX"

    def test_from_signed_rejects_unknown_code(self):
        with pytest.raises(WordError):
            from_signed([3])


# ============================================================================
# Presentations
# ============================================================================


class TestPresentation:
    """Tests for presentations, canonical forms and the text format."""

    def test_length(self, ak3):
        assert ak3.length == 13
        assert ak3.max_relator_length == 7

    def test_trivial_states(self):
        assert is_trivial_state(TRIVIAL)
        assert is_trivial_state(Presentation("Y", "X"))
        assert not is_trivial_state(Presentation("x", "x"))
        assert not is_trivial_state(Presentation("x", "yx"))

    def test_canonicalize_sorts_relators(self):
        assert canonicalize(Presentation("xy", "x")) == Presentation("x", "xy")
        assert canonicalize(Presentation("X", "y")) == Presentation("y", "X")
        assert canonicalize(Presentation("x", "xy")) == Presentation("x", "xy")

    def test_canonicalize_does_not_rotate(self):
        assert canonicalize(Presentation("yx", "xy")) == Presentation("xy", "yx")

    def test_parse_and_format(self):
        p = parse_presentation(" xxYYY,xyxYXY \n")
        assert p == Presentation("xxYYY", "xyxYXY")
        assert format_presentation(p) == "xxYYY,xyxYXY"

    @pytest.mark.parametrize("text", ["x", "x,", ",y", "x,y,x", "xa,y", "xX,y"])
    def test_parse_rejects_malformed(self, text):
        with pytest.raises(PresentationFormatError):
            parse_presentation(text)

    def test_make_presentation_checks_reduction(self):
        assert make_presentation("x", "y") == TRIVIAL
        with pytest.raises(WordError):
            make_presentation("xX", "y")


# ============================================================================
# Moves
# ============================================================================


class TestMoves:
    """Tests for the prime and classical move sets."""

    def test_prime_moves_on_one_move_presentation(self, one_move):
        assert apply_move(one_move, 1) == Presentation("x", "yxx")
        assert apply_move(one_move, 2) == Presentation("Y", "yx")
        assert apply_move(one_move, 3) == Presentation("x", "y")
        assert apply_move(one_move, 4) == Presentation("xyx", "yx")
        assert apply_move(one_move, 9) == Presentation("x", "xy")

    def test_move_id_names(self):
        assert str(move_id(9)) == "h9"
        assert str(move_id(1, MoveSet.CLASSICAL)) == "c1"
        with pytest.raises(ValueError):
            move_id(13)

    @pytest.mark.parametrize("move", range(1, 13))
    def test_prime_inverse_pairs_undo(self, move, ak3, length25):
        inverse = inverse_move(move)
        assert inverse is not None
        for p in (ak3, length25, gen_MS(2, "yxY")):
            assert apply_move(apply_move(p, move), inverse) == p

    @pytest.mark.slow
    def test_inverse_pairs_on_random_presentations(self):
        """10⁴ random reduced presentations, every move with a single-move inverse."""
        rng = np.random.default_rng(0)

        def random_word() -> str:
            letters: list[str] = []
            for _ in range(int(rng.integers(1, 11))):
                choices = [c for c in "xyXY" if not letters or c != invert(letters[-1])]
                letters.append(choices[int(rng.integers(len(choices)))])
            return "".join(letters)

        for _ in range(10_000):
            p = Presentation(random_word(), random_word())
            assert is_freely_reduced(p.r1) and is_freely_reduced(p.r2)
            for move_set in MoveSet:
                for move in range(1, 13):
                    inverse = inverse_move(move, move_set)
                    if inverse is not None:
                        assert apply_move(apply_move(p, move, move_set), inverse, move_set) == p

    def test_prime_inverse_table(self):
        pairs = {(1, 3), (2, 4), (5, 9), (6, 10), (7, 11), (8, 12)}
        for a, b in pairs:
            assert INVERSES[MoveSet.PRIME][a] == b
            assert INVERSES[MoveSet.PRIME][b] == a

    def test_classical_concatenations_have_no_inverse(self):
        assert inverse_move(1, MoveSet.CLASSICAL) is None
        assert inverse_move(2, MoveSet.CLASSICAL) is None
        assert inverse_move(3, MoveSet.CLASSICAL) == 3

    def test_neighbors_of_trivial_drop_self_loops(self):
        """Conjugating a single letter by itself reduces back, so only 8 moves change (x, y)."""
        result = neighbors(TRIVIAL)
        assert len(result) == 8
        assert [m.index for m, _ in result] == [1, 2, 3, 4, 5, 6, 9, 10]
        assert len(neighbors(TRIVIAL, MoveSet.CLASSICAL)) == 8

    def test_neighbors_respect_bound(self):
        assert neighbors(TRIVIAL, bound=1) == []
        assert len(neighbors(TRIVIAL, bound=2)) == 4

    def test_ak3_has_twelve_distinct_neighbors(self, ak3):
        results = [p for _, p in neighbors(ak3)]
        assert len(results) == 12
        assert len(set(results)) == 12

    def test_apply_masked_is_noop_out_of_bound(self):
        assert apply_masked(TRIVIAL, 1, 1) == TRIVIAL
        assert apply_masked(TRIVIAL, 1, 2) == Presentation("x", "yx")
        assert apply_masked(TRIVIAL, 1, None) == Presentation("x", "yx")

    def test_apply_sequence(self, one_move):
        assert apply_sequence(one_move, [1, 3]) == one_move
        assert apply_sequence(one_move, [3]) == TRIVIAL
        assert apply_sequence(one_move, [1, 3], bound=2) is None

    def test_bounds(self):
        assert max_relator_bound(7, "yyyyyyy") == 36
        assert max_relator_bound(1, "y") == 12
        assert auto_bound(Presentation("xxYYY", "xyxYXY")) == 14
        with pytest.raises(ValueError):
            max_relator_bound(0, "y")


# ============================================================================
# Series
# ============================================================================


class TestSeries:
    """Tests for AK, MS, Gordon and the MS dataset."""

    def test_gen_ak(self):
        assert gen_AK(2) == Presentation("xxYYY", "xyxYXY")
        assert gen_AK(3) == Presentation("xxxYYYY", "xyxYXY")
        with pytest.raises(SeriesParameterError):
            gen_AK(1)

    def test_gen_ms(self):
        p = gen_MS(3, "YXyxy")
        assert p.length == 15
        assert len(p.r1) == 2 * 3 + 3
        assert gen_MS(1, "y") == Presentation("XyxYY", "Xy")

    @pytest.mark.parametrize("w", ["", "x", "yyx", "yY", "ya"])
    def test_gen_ms_rejects_bad_words(self, w):
        with pytest.raises(SeriesParameterError):
            gen_MS(1, w)

    def test_ms_words_count(self):
        words = ms_words(7)
        assert len(words) == MS_PER_N == 170
        assert len({rotation_class(w) for w in words}) == 170

    def test_ms_words_keep_the_ak_class(self):
        """The class of YXyxy is labelled by its shortlex-first word yxyXY."""
        assert rotation_class("YXyxy") == rotation_class("yxyXY") == "xyXYXy"
        words = ms_words(7)
        assert "yxyXY" in words
        assert "YXyxy" not in words

    def test_ms_dataset_relators(self):
        """By default the relator is X·w; rotate stores the smallest rotation."""
        plain = {e.index.w: e.presentation.r2 for e in gen_MS_dataset(n_max=1)}
        rotated = {e.index.w: e.presentation.r2 for e in gen_MS_dataset(n_max=1, rotate=True)}
        assert plain["yxyXY"] == "XyxyXY"
        assert rotated["yxyXY"] == "xyXYXy"
        assert plain.keys() == rotated.keys()
        assert len(set(rotated.values())) == 170
        for w, r2 in rotated.items():
            assert r2 == rotation_class(w)
            assert len(r2) == len(plain[w])

    def test_ms_dataset(self):
        dataset = gen_MS_dataset()
        assert len(dataset) == 1190
        assert [e.index.n for e in dataset[::170]] == [1, 2, 3, 4, 5, 6, 7]
        for entry in dataset:
            n = entry.index.n
            assert len(entry.presentation.r1) == 2 * n + 3
            assert entry.presentation.length <= 2 * n + 4 + 7

    def test_ms_dataset_order(self):
        """Ascending n, then word length."""
        dataset = gen_MS_dataset(n_max=2)
        keys = [(e.index.n, len(e.index.w)) for e in dataset]
        assert keys == sorted(keys)

    def test_mms_length25(self, length25):
        assert length25.length == 25
        assert (len(length25.r1), len(length25.r2)) == (13, 12)
        assert is_freely_reduced(length25.r1) and is_freely_reduced(length25.r2)

    def test_gordon(self):
        assert gen_Gordon(0, 0, 0, 0) == Presentation("X", "Y")
        assert gen_Gordon(1, 1, 1, 1) == Presentation("yXY", "xYX")
