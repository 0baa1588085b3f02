"""Ready-made generator sets used across tests, demos and documentation."""

from __future__ import annotations

from .semigroup import GeneratorSet
from .substitution import Substitution, compose
from .words import Alphabet

AB = Alphabet("ab")


def thue_morse_pair() -> GeneratorSet:
    """The Thue-Morse substitution together with its letter-swapped twin."""
    return GeneratorSet(
        AB,
        [
            Substitution(AB, {"a": "ab", "b": "ba"}, name="f"),
            Substitution(AB, {"a": "ba", "b": "ab"}, name="g"),
        ],
    )


def fibonacci_pair() -> GeneratorSet:
    """The Fibonacci substitution and its reversal; family length 1."""
    return GeneratorSet(
        AB,
        [
            Substitution(AB, {"a": "ab", "b": "a"}, name="f"),
            Substitution(AB, {"a": "ba", "b": "a"}, name="g"),
        ],
    )


def sturmian_triple() -> GeneratorSet:
    """Generators of all Sturmian substitutions; the swap gives fixed letters."""
    return GeneratorSet(
        AB,
        [
            Substitution(AB, {"a": "ab", "b": "a"}, name="f"),
            Substitution(AB, {"a": "ba", "b": "a"}, name="g"),
            Substitution(AB, {"a": "b", "b": "a"}, name="h"),
        ],
    )


def sturmian_injective_pair() -> GeneratorSet:
    """A derived Sturmian pair whose generators are prefix-injective.

    The second generator is the composite f o g of the Fibonacci pair; with
    it, two fixed points share the first letter a, which is what the
    uncountability certificate needs.
    """
    fib = fibonacci_pair()
    f, g = fib.generators
    return GeneratorSet(
        AB,
        [
            Substitution(AB, g.images, name="g"),
            Substitution(AB, compose(f, g).images, name="k"),
        ],
    )


def fixed_letter_pair() -> GeneratorSet:
    """Both generators fix the letter a; the classic non-example."""
    return GeneratorSet(
        AB,
        [
            Substitution(AB, {"a": "a", "b": "ab"}, name="f"),
            Substitution(AB, {"a": "a", "b": "bb"}, name="g"),
        ],
    )


def countable_pair() -> GeneratorSet:
    """Three letters, two generators, one relation: f o g equals g o g.

    The relation collapses the semigroup to powers g^m o f^n, so the limit
    set is infinite but countable.
    """
    abc = Alphabet("abc")
    return GeneratorSet(
        abc,
        [
            Substitution(abc, {"a": "ac", "b": "cb", "c": "cba"}, name="f"),
            Substitution(abc, {"a": "bac", "b": "c", "c": "cba"}, name="g"),
        ],
    )


def five_letter_triple() -> GeneratorSet:
    """Five letters, three generators; the letter-classification showcase.

    Its first-letter graph has one non-recurrent letter, three components
    and two terminal components.
    """
    abcde = Alphabet("abcde")
    return GeneratorSet(
        abcde,
        [
            Substitution(
                abcde,
                {"a": "ea", "b": "de", "c": "ce", "d": "da", "e": "eb"},
                name="f",
            ),
            Substitution(
                abcde,
                {"a": "bc", "b": "bd", "c": "ce", "d": "db", "e": "ec"},
                name="g",
            ),
            Substitution(
                abcde,
                {"a": "ca", "b": "cb", "c": "cc", "d": "ed", "e": "dc"},
                name="h",
            ),
        ],
    )
