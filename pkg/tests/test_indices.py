"""Tests for mult-indices, words and the column order."""

from math import comb

import pytest

from fmzs.errors import IndexDomainError, NotZFormError
from fmzs.indices import (
    EMPTY_WORD,
    X,
    Y,
    MultIndex,
    Word,
    all_ones,
    build_column_table,
    depth_order_violations,
    enumerate_indices,
    hoffman_indices,
    hoffman_order_violations,
    index_code,
    index_to_word,
    iter_indices,
    word_code,
    word_to_index,
    z_letter,
)


def M(*parts):
    return MultIndex.of(*parts)


class TestMultIndex:
    """MultIndex construction and properties."""

    def test_weight_and_depth(self):
        index = M(3, 1, 2)
        assert index.weight == 6
        assert index.depth == 3
        assert str(index) == "3,1,2"

    @pytest.mark.parametrize(
        ("index", "admissible", "hoffman"),
        [
            (M(), True, True),
            (M(2), True, True),
            (M(1, 2), False, False),
            (M(3, 1), True, False),
            (M(2, 3, 2), True, True),
            (M(4), True, False),
        ],
    )
    def test_flags(self, index, admissible, hoffman):
        assert index.is_admissible is admissible
        assert index.is_hoffman is hoffman

    def test_all_ones(self):
        assert all_ones(3) == M(1, 1, 1)
        assert all_ones(3).is_all_ones
        assert not M(2, 1).is_all_ones
        assert not M().is_all_ones

    @pytest.mark.parametrize("text", ["3,1", "(3,1)", " 3, 1 "])
    def test_parse(self, text):
        assert MultIndex.parse(text) == M(3, 1)

    def test_parse_empty(self):
        assert MultIndex.parse("()") == M()

    @pytest.mark.parametrize("text", ["3,x", "3,,1", "0,2", "-1"])
    def test_parse_rejects_bad_text(self, text):
        with pytest.raises(IndexDomainError):
            MultIndex.parse(text)

    def test_rejects_non_positive_parts(self):
        with pytest.raises(IndexDomainError):
            MultIndex((2, 0))

    def test_list_parts_become_tuple(self):
        assert MultIndex([2, 1]) == M(2, 1)
        assert hash(MultIndex([2, 1])) == hash(M(2, 1))


class TestWord:
    """Words over {x, y}."""

    def test_from_str_and_back(self):
        word = Word.from_str("xyxy")
        assert str(word) == "xyxy"
        assert word.degree == 4
        assert word.bits == 0b0101

    def test_from_str_rejects_other_letters(self):
        with pytest.raises(ValueError, match="letters x and y"):
            Word.from_str("xzy")

    def test_letters(self):
        assert str(X) == "x"
        assert str(Y) == "y"
        assert str(EMPTY_WORD) == ""
        assert Word.empty() is EMPTY_WORD

    def test_first_and_rest(self):
        word = Word.from_str("yxxy")
        assert word.first == 1
        assert str(word.rest) == "xxy"
        assert Word.from_str("xy").first == 0

    def test_concatenation_and_prepend(self):
        assert str(Word.from_str("xy") + Word.from_str("yx")) == "xyyx"
        assert str(Word.from_str("xy").prepend(1)) == "yxy"
        assert str(EMPTY_WORD + X) == "x"

    @pytest.mark.parametrize(
        ("letters", "z_form", "admissible", "leading"),
        [
            ("", True, True, 0),
            ("y", True, False, 1),
            ("xy", True, True, 0),
            ("yyxy", True, False, 2),
            ("xyx", False, False, 0),
            ("yyy", True, False, 3),
        ],
    )
    def test_word_flags(self, letters, z_form, admissible, leading):
        word = Word.from_str(letters)
        assert word.is_z_form is z_form
        assert word.is_admissible is admissible
        assert word.leading_ys() == leading


class TestConversions:
    """index_to_word / word_to_index and codes."""

    def test_z_letter(self):
        assert str(z_letter(1)) == "y"
        assert str(z_letter(3)) == "xxy"
        with pytest.raises(IndexDomainError):
            z_letter(0)

    @pytest.mark.parametrize(
        ("parts", "letters"),
        [((), ""), ((1,), "y"), ((3, 1), "xxyy"), ((2, 1, 2), "xyyxy"), ((1, 1, 2), "yyxy")],
    )
    def test_index_to_word(self, parts, letters):
        assert str(index_to_word(MultIndex(parts))) == letters

    def test_word_to_index_inverts(self):
        for k in range(1, 9):
            for index in iter_indices(k):
                assert word_to_index(index_to_word(index)) == index

    def test_word_to_index_rejects_trailing_x(self):
        with pytest.raises(NotZFormError, match="ends in x"):
            word_to_index(Word.from_str("xyx"))

    def test_codes(self):
        assert word_code(EMPTY_WORD) == 1
        assert word_code(Word.from_str("xy")) == 2
        assert index_code(M(2, 1)) == 4
        assert index_code(M(3)) == 2


class TestEnumeration:
    """Composition enumeration and Hoffman indices."""

    @pytest.mark.parametrize("k", range(1, 11))
    def test_counts(self, k):
        assert len(enumerate_indices(k)) == 2 ** (k - 1)
        expected_admissible = 2 ** (k - 2) if k >= 2 else 0
        assert len(enumerate_indices(k, admissible_only=True)) == expected_admissible

    def test_weight_zero_is_empty_index(self):
        assert enumerate_indices(0) == [M()]

    def test_negative_weight(self):
        with pytest.raises(ValueError, match="non-negative"):
            enumerate_indices(-1)

    def test_order_is_word_code(self):
        indices = enumerate_indices(6)
        codes = [index_code(index) for index in indices]
        assert codes == sorted(codes)
        assert all(index.weight == 6 for index in indices)

    def test_weight_three(self):
        assert enumerate_indices(3, admissible_only=True) == [M(3), M(2, 1)]

    def test_hoffman_weight_seven(self):
        assert hoffman_indices(7) == {M(2, 2, 3), M(2, 3, 2), M(3, 2, 2)}

    def test_hoffman_small_weights(self):
        assert hoffman_indices(1) == frozenset()
        assert hoffman_indices(4) == {M(2, 2)}
        assert hoffman_indices(5) == {M(2, 3), M(3, 2)}

    @pytest.mark.parametrize("k", range(2, 15))
    def test_hoffman_depth_counts(self, k):
        for r in range(1, k):
            expected = comb(r, k - 2 * r) if k - 2 * r >= 0 else 0
            assert len(hoffman_indices(k, r)) == expected

    @pytest.mark.parametrize(("k", "total"), [(2, 1), (6, 2), (10, 7), (12, 12), (14, 21)])
    def test_hoffman_totals(self, k, total):
        assert len(hoffman_indices(k)) == total


class TestColumnTable:
    """Column order, depth blocks and the audit dump."""

    def test_weight_four_order(self):
        table = build_column_table(4)
        assert table.order == (M(2, 1, 1), M(3, 1), M(2, 2), M(4))

    def test_weight_five_order(self):
        table = build_column_table(5)
        assert [str(index) for index in table] == [
            "2,1,1,1",
            "3,1,1",
            "2,2,1",
            "2,1,2",
            "4,1",
            "3,2",
            "2,3",
            "5",
        ]
        assert table.hoffman_columns() == [6, 7]
        assert table.depth_blocks() == {4: range(1, 2), 3: range(2, 5), 2: range(5, 8), 1: range(8, 9)}

    def test_weight_two(self):
        table = build_column_table(2)
        assert len(table) == 1
        assert table.index(1) == M(2)
        assert table.hoffman_columns() == [1]

    def test_column_id_round_trip(self):
        table = build_column_table(6)
        for column in range(1, len(table) + 1):
            assert table.column_id(table.index(column)) == column
        assert M(4, 2) in table
        assert M(1, 5) not in table

    def test_column_id_rejects_foreign_index(self):
        table = build_column_table(4)
        with pytest.raises(IndexDomainError):
            table.column_id(M(1, 3))
        with pytest.raises(IndexDomainError):
            table.column_id(M(2, 3))
        with pytest.raises(IndexDomainError):
            table.index(5)

    @pytest.mark.parametrize("k", range(2, 11))
    def test_order_conditions_hold(self, k):
        table = build_column_table(k)
        assert table.column_count == 2 ** (k - 2)
        assert depth_order_violations(table) == []
        assert hoffman_order_violations(table) == []

    @pytest.mark.parametrize("k", range(2, 11))
    def test_depth_block_sizes(self, k):
        blocks = build_column_table(k).depth_blocks()
        assert sorted(blocks) == list(range(1, k))
        for r, block in blocks.items():
            assert len(block) == comb(k - 2, r - 1)

    def test_violations_detect_bad_order(self):
        table = build_column_table(4)
        reversed_table = type(table)(4, tuple(reversed(table.order)))
        assert depth_order_violations(reversed_table)
        assert hoffman_order_violations(reversed_table) == [(2, 3)]

    def test_rejects_small_weight(self):
        with pytest.raises(ValueError, match="weight >= 2"):
            build_column_table(1)

    def test_dumps(self):
        assert build_column_table(4).dumps() == "# weight 4\n1 2,1,1\n2 3,1\n3 2,2\n4 4\n"
