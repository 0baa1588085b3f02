import random

import pytest
from hypothesis import given, strategies as st

from conftest import random_system
from subsemigroup.errors import EnumerationCapError, ValidationError
from subsemigroup.semigroup import (
    GeneratorSet,
    composition_words,
    enumerate_realizations,
    fixed_letter_free,
    fixed_letter_witness,
    is_irreducible,
    min_image_length,
    min_image_lengths,
    realize,
    word_image_prefix,
    word_length_vector,
)
from subsemigroup.substitution import Substitution, apply, compose
from subsemigroup.words import Alphabet

AB = Alphabet("ab")


class TestGeneratorSet:
    def test_duplicate_names_rejected(self):
        f = Substitution(AB, {"a": "ab", "b": "ba"}, name="f")
        with pytest.raises(ValidationError):
            GeneratorSet(AB, [f, f])

    def test_unknown_name(self, thue_morse):
        with pytest.raises(ValidationError):
            thue_morse.generator("z")

    def test_word_formatting_roundtrip(self, thue_morse):
        word = ("f", "g", "f")
        assert thue_morse.format_word(word) == "fgf"
        assert thue_morse.parse_word("fgf") == word


class TestRealize:
    def test_rightmost_applied_first(self, fibonacci):
        # the word "fg" must realize f o g, not g o f
        k = realize(fibonacci, ("f", "g"))
        assert k.as_dict() == {"a": "aab", "b": "ab"}

    def test_double_thue_morse(self, thue_morse):
        sub = realize(thue_morse, ("f", "f"))
        assert sub.as_dict() == {"a": "abba", "b": "baab"}

    def test_singleton(self, thue_morse):
        assert realize(thue_morse, ("f",)) == thue_morse.generator("f")

    def test_split_homomorphism(self, thue_morse):
        rng = random.Random(5)
        names = ["f", "g"]
        for _ in range(25):
            w = tuple(rng.choice(names) for _ in range(rng.randrange(2, 7)))
            cut = rng.randrange(1, len(w))
            left, right = w[:cut], w[cut:]
            assert realize(thue_morse, w) == compose(
                realize(thue_morse, left), realize(thue_morse, right)
            )


class TestEnumeration:
    def test_depth_two_words(self, thue_morse):
        words = list(composition_words(thue_morse, 2))
        assert words == [("f", "f"), ("f", "g"), ("g", "f"), ("g", "g")]

    def test_depth_one_is_generators(self, sturmian):
        words = list(composition_words(sturmian, 1))
        assert words == [("f",), ("g",), ("h",)]

    def test_deterministic(self, sturmian):
        first = list(enumerate_realizations(sturmian, 3, resolution=4))
        second = list(enumerate_realizations(sturmian, 3, resolution=4))
        assert first == second

    def test_cap_is_a_clean_error(self, sturmian):
        with pytest.raises(EnumerationCapError):
            list(composition_words(sturmian, 10, cap=100))

    def test_resolution_truncates(self, thue_morse):
        for word, images in enumerate_realizations(thue_morse, 3, resolution=4):
            full = realize(thue_morse, word)
            for ch in "ab":
                assert images[ch] == full.image(ch)[:4]


class TestWordImagePrefix:
    def test_matches_full_realization(self, sturmian):
        rng = random.Random(11)
        for _ in range(40):
            depth = rng.randrange(1, 6)
            word = tuple(rng.choice("fgh") for _ in range(depth))
            k = rng.randrange(1, 9)
            full = realize(sturmian, word)
            for ch in "ab":
                assert word_image_prefix(sturmian, word, ch, k) == full.image(ch)[:k]

    def test_length_vector_matches_materialization(self, sturmian):
        rng = random.Random(12)
        for _ in range(30):
            depth = rng.randrange(1, 8)
            word = tuple(rng.choice("fgh") for _ in range(depth))
            full = realize(sturmian, word)
            vec = word_length_vector(sturmian, word)
            assert vec == {ch: len(full.image(ch)) for ch in "ab"}


class TestFixedLetterFree:
    def test_shared_fixed_letter(self):
        f = Substitution(AB, {"a": "a", "b": "ab"}, name="f")
        g = Substitution(AB, {"a": "a", "b": "bb"}, name="g")
        gens = GeneratorSet(AB, [f, g])
        witness = fixed_letter_witness(gens)
        assert witness == (("f",), "a")

    def test_thue_morse_is_free(self, thue_morse):
        assert fixed_letter_free(thue_morse)

    def test_swap_generator_gives_two_step_witness(self, sturmian):
        witness = fixed_letter_witness(sturmian)
        assert witness is not None
        word, letter = witness
        assert realize(sturmian, word).image(letter) == letter

    def test_witness_always_validates(self):
        rng = random.Random(99)
        found = 0
        for _ in range(300):
            gens = random_system(rng)
            witness = fixed_letter_witness(gens)
            if witness is not None:
                found += 1
                word, letter = witness
                assert realize(gens, word).image(letter) == letter
        assert found > 50


class TestMinImageLength:
    def test_thue_morse_powers_of_two(self, thue_morse):
        assert min_image_lengths(thue_morse, 10) == [2**n for n in range(1, 11)]

    def test_fibonacci_depth_one(self, fibonacci):
        assert min_image_length(fibonacci, 1) == 1

    def test_fibonacci_power_family(self, fibonacci):
        from subsemigroup.dimension import power_generating_set

        powered = power_generating_set(fibonacci, 2)
        assert min_image_length(powered, 1) == 2

    def test_agrees_with_exhaustive_enumeration(self):
        rng = random.Random(40)
        for _ in range(60):
            gens = random_system(rng, max_letters=3, max_gens=2)
            for depth in (1, 2, 3, 4):
                brute = min(
                    min(word_length_vector(gens, w).values())
                    for w in composition_words(gens, depth)
                )
                assert min_image_length(gens, depth) == brute


class TestIrreducible:
    def test_thue_morse(self, thue_morse):
        assert is_irreducible(thue_morse)

    def test_countable_pair(self, countable_pair):
        assert is_irreducible(countable_pair)

    def test_disconnected_images(self):
        f = Substitution(AB, {"a": "aa", "b": "bb"}, name="f")
        assert not is_irreducible(GeneratorSet(AB, [f]))
