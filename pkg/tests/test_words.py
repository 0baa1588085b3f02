from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from subsemigroup.errors import PreconditionError, ValidationError
from subsemigroup.words import (
    SENTINEL,
    Alphabet,
    agree_on,
    is_prefix,
    letter_at,
    metric_value,
    shift,
    word_metric,
)

words_ab = st.text(alphabet="ab", min_size=1, max_size=12)


class TestAlphabet:
    def test_order_and_membership(self):
        ab = Alphabet("ab")
        assert list(ab) == ["a", "b"]
        assert "a" in ab and "c" not in ab
        assert ab.index("b") == 1

    def test_rejects_duplicates(self):
        with pytest.raises(ValidationError):
            Alphabet("aa")

    def test_rejects_singleton(self):
        with pytest.raises(ValidationError):
            Alphabet("a")

    def test_rejects_multichar_letters(self):
        with pytest.raises(ValidationError):
            Alphabet(["ab", "c"])

    def test_word_validation(self):
        ab = Alphabet("ab")
        assert ab.check_word("abba") == "abba"
        with pytest.raises(ValidationError):
            ab.check_word("abc")
        with pytest.raises(ValidationError):
            ab.check_word("")


class TestLetterAt:
    def test_within_range(self):
        assert letter_at("abba", 2) == "b"

    def test_past_the_end_gives_sentinel(self):
        assert letter_at("abba", 5) == SENTINEL

    def test_single_letter(self):
        assert letter_at("a", 1) == "a"

    def test_position_must_be_positive(self):
        with pytest.raises(ValidationError):
            letter_at("a", 0)


class TestWordMetric:
    def test_equal_words(self):
        assert word_metric("ab", "ab") == 0

    def test_disagreement_position(self):
        assert word_metric("ab", "ac") == 2
        assert metric_value(2) == Fraction(1, 2)

    def test_length_difference_uses_sentinel(self):
        assert word_metric("ab", "abb") == 3
        assert metric_value(3) == Fraction(1, 4)

    def test_symmetry(self):
        assert word_metric("abb", "ab") == 3

    @given(words_ab, words_ab, words_ab)
    def test_ultrametric(self, u, v, w):
        duw = metric_value(word_metric(u, w))
        duv = metric_value(word_metric(u, v))
        dvw = metric_value(word_metric(v, w))
        assert duw <= max(duv, dvw)

    @given(words_ab, words_ab, st.integers(min_value=1, max_value=14))
    def test_agreement_characterization(self, u, v, k):
        # d(u, v) <= 2**-(k-1) exactly when the first k-1 positions agree.
        small = metric_value(word_metric(u, v)) <= Fraction(1, 2 ** (k - 1))
        assert small == agree_on(u, v, k - 1)


class TestShift:
    def test_drop_first(self):
        assert shift("abba", 1) == "bba"

    def test_identity(self):
        assert shift("abba", 0) == "abba"

    def test_would_be_empty(self):
        with pytest.raises(PreconditionError):
            shift("abba", 4)

    @given(words_ab, st.integers(0, 6), st.integers(0, 6))
    def test_composition(self, w, i, j):
        if i + j < len(w):
            assert shift(shift(w, i), j) == shift(w, i + j)


class TestIsPrefix:
    def test_proper_prefix(self):
        assert is_prefix("a", "ab")

    def test_not_a_prefix(self):
        assert not is_prefix("ab", "aab")

    def test_reflexive(self):
        assert is_prefix("ab", "ab")

    @given(words_ab, words_ab, words_ab)
    def test_transitive(self, u, v, w):
        if is_prefix(u, v) and is_prefix(v, w):
            assert is_prefix(u, w)
