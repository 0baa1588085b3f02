"""Anchored fixed points and finite-resolution prefix languages.

An anchor is a composition word together with a letter whose image starts
with that same letter.  Iterating the realized substitution on the letter
then produces nested prefixes of a unique infinite fixed word, which is the
only way infinite fixed points arise once no letter is fixed outright.
Prefix languages are the package's finite stand-in for sets of infinite
words: deduplicated, fixed-length, canonically ordered.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, NamedTuple

from .errors import PreconditionError, ValidationError
from .semigroup import (
    DEFAULT_CAP,
    CompositionWord,
    GeneratorSet,
    composition_words,
    fixed_letter_free,
    fixed_letter_witness,
    word_first_letter,
    word_image_prefix,
)


@dataclass(frozen=True)
class PrefixLanguage:
    """A deduplicated set of words that all share one exact length ``k``."""

    k: int
    words: tuple[str, ...]

    def __init__(self, k: int, words: Iterable[str]) -> None:
        if k < 1:
            raise ValidationError("prefix resolution must be positive")
        unique = sorted(set(words))
        for w in unique:
            if len(w) != k:
                raise ValidationError(
                    f"member {w!r} does not have the stated length {k}"
                )
        object.__setattr__(self, "k", k)
        object.__setattr__(self, "words", tuple(unique))
        object.__setattr__(self, "_members", frozenset(unique))

    def __contains__(self, w: str) -> bool:
        return w in self._members

    def __len__(self) -> int:
        return len(self.words)

    def __iter__(self):
        return iter(self.words)

    def __le__(self, other: "PrefixLanguage") -> bool:
        return self._members <= other._members

    def union(self, other: "PrefixLanguage") -> "PrefixLanguage":
        if self.k != other.k:
            raise ValidationError("cannot merge languages of different resolutions")
        return PrefixLanguage(self.k, self.words + other.words)


class Anchor(NamedTuple):
    """A composition word and a letter its realization sends to itself."""

    word: CompositionWord
    letter: str


def require_fixed_letter_free(gens: GeneratorSet) -> None:
    witness = fixed_letter_witness(gens)
    if witness is not None:
        word, letter = witness
        raise PreconditionError(
            f"the semigroup fixes letter {letter!r} "
            f"(via {gens.format_word(word)!r}); a fixed-letter-free system is required"
        )


def find_anchors(gens: GeneratorSet, depth: int, cap: int | None = DEFAULT_CAP) -> list[Anchor]:
    """All anchors of word depth up to ``depth``, in (depth, word, letter) order."""
    if depth < 1:
        raise ValidationError("depth must be positive")
    require_fixed_letter_free(gens)
    anchors = []
    for d in range(1, depth + 1):
        for word in composition_words(gens, d, cap):
            for ch in gens.alphabet:
                if word_first_letter(gens, word, ch) == ch:
                    anchors.append(Anchor(word, ch))
    return anchors


def fixed_point_prefix(gens: GeneratorSet, anchor: Anchor, k: int) -> str:
    """First ``k`` letters of the unique infinite fixed word of the anchor.

    Each pass applies the realized substitution to the current prefix and
    truncates at ``k``; the image of the anchored letter extends it by at
    least one letter per pass, so at most ``k`` passes are needed.
    """
    if k < 1:
        raise ValidationError("prefix resolution must be positive")
    word, letter = anchor
    start = word_image_prefix(gens, word, letter, 2)
    if not start.startswith(letter):
        raise PreconditionError(
            f"{gens.format_word(word)!r} does not anchor at letter {letter!r}"
        )
    if start == letter:
        raise PreconditionError(
            f"{gens.format_word(word)!r} fixes letter {letter!r}; "
            "its fixed point is not an infinite word"
        )
    current = letter
    while len(current) < k:
        prev = len(current)
        current = _word_prefix_image(gens, word, current, k)
        if len(current) <= prev:
            raise PreconditionError("fixed-point iteration stopped growing")
    return current[:k]


def _word_prefix_image(gens: GeneratorSet, word: CompositionWord, w: str, k: int) -> str:
    """Apply a realized composition word to a finite word, truncated at ``k``."""
    from .substitution import apply_prefix

    current = w
    for name in reversed(word):
        current = apply_prefix(gens.generator(name), current, k)
    return current


def fix_language(
    gens: GeneratorSet, depth: int, k: int, cap: int | None = DEFAULT_CAP
) -> PrefixLanguage:
    """Prefixes of every fixed point anchored at word depth up to ``depth``."""
    anchors = find_anchors(gens, depth, cap)
    return PrefixLanguage(
        k, (fixed_point_prefix(gens, anchor, k) for anchor in anchors)
    )


def image_closure_language(
    gens: GeneratorSet,
    fix_depth: int,
    image_depth: int,
    k: int,
    cap: int | None = DEFAULT_CAP,
) -> PrefixLanguage:
    """Fixed-point prefixes together with their images under short composites.

    Approximates the closure of the semigroup orbit of the fixed-point set:
    for every anchored fixed point and every composition word of depth up
    to ``image_depth``, take the ``k``-prefix of the image of the fixed
    point.  A ``k``-letter prefix of the fixed point already determines the
    ``k``-prefix of its image, because images are nonempty.
    """
    if image_depth < 0:
        raise ValidationError("image depth must be nonnegative")
    prefixes = [
        fixed_point_prefix(gens, anchor, k)
        for anchor in find_anchors(gens, fix_depth, cap)
    ]
    members = list(prefixes)
    for d in range(1, image_depth + 1):
        for word in composition_words(gens, d, cap):
            for p in prefixes:
                members.append(_word_prefix_image(gens, word, p, k)[:k])
    return PrefixLanguage(k, members)
