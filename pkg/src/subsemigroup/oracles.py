"""Brute-force oracles that cross-check the fast paths.

Everything here recomputes from first principles: sliding-window counts,
exhaustive enumeration with full materialization, letterwise comparison.
None of it shares traversal logic or caches with the implementations it
validates; slow and obviously correct is the point.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple

from .errors import ValidationError
from .semigroup import (
    DEFAULT_CAP,
    CompositionWord,
    GeneratorSet,
    composition_words,
    realize,
)
from .substitution import Substitution
from .words import Alphabet


def balanced(w: str, alphabet: Alphabet) -> bool:
    """Whether every pair of equal-length factors has near-equal letter counts.

    Over a two-letter alphabet, a word is balanced when for every factor
    length the counts of the first letter across all factors of that length
    differ by at most one.  Direct O(n^2) window counting, no shortcuts.
    """
    if len(alphabet) != 2:
        raise ValidationError("balance is defined over two-letter alphabets")
    alphabet.check_word(w)
    first = alphabet.letters[0]
    counts = [0]
    for ch in w:
        counts.append(counts[-1] + (1 if ch == first else 0))
    for length in range(1, len(w) + 1):
        window = [counts[i + length] - counts[i] for i in range(len(w) - length + 1)]
        if max(window) - min(window) > 1:
            return False
    return True


def brute_fixed_letter(
    gens: GeneratorSet, depth: int, cap: int | None = DEFAULT_CAP
) -> tuple[CompositionWord, str] | None:
    """Exhaustively search realized words up to ``depth`` for a fixed letter."""
    if depth < 1:
        raise ValidationError("depth must be positive")
    for d in range(1, depth + 1):
        for word in composition_words(gens, d, cap):
            sub = realize(gens, word)
            for ch in gens.alphabet:
                if sub.image(ch) == ch:
                    return word, ch
    return None


class RelationClaim(NamedTuple):
    """Two composition words claimed to realize the same substitution."""

    left: CompositionWord
    right: CompositionWord


def check_relation(gens: GeneratorSet, claim: RelationClaim) -> bool:
    """Realize both sides in full and compare image words letter by letter."""
    return realize(gens, claim.left) == realize(gens, claim.right)


@dataclass(frozen=True)
class NormalFormReport:
    """Which short composition words reduce to the two-generator normal form."""

    depth: int
    checked: int
    exceptions: tuple[str, ...]

    @property
    def complete(self) -> bool:
        return not self.exceptions


def normal_form_coverage(
    gens: GeneratorSet, depth: int, cap: int | None = DEFAULT_CAP
) -> NormalFormReport:
    """Test whether every word up to ``depth`` equals second^m o first^n.

    Takes the two generators in declared order as (first, second) and
    collects the realizations of all normal forms ``second^m o first^n``
    with ``1 <= m+n <= depth``; every composition word whose realization
    matches none of them is reported as an exception.
    """
    if depth < 1:
        raise ValidationError("depth must be positive")
    if len(gens) != 2:
        raise ValidationError("normal-form coverage is defined for two generators")
    first, second = gens.names()
    normal_images: set[tuple[str, ...]] = set()
    for total in range(1, depth + 1):
        for m in range(total + 1):
            word = (second,) * m + (first,) * (total - m)
            normal_images.add(realize(gens, word).images)
    exceptions = []
    checked = 0
    for d in range(1, depth + 1):
        for word in composition_words(gens, d, cap):
            checked += 1
            if realize(gens, word).images not in normal_images:
                exceptions.append(gens.format_word(word))
    return NormalFormReport(depth, checked, tuple(exceptions))
