"""Shift-closed hulls of letter limit sets, at finite resolution.

The hull of a letter gathers every shift of every limit word of that
letter.  The finite stand-in enumerates depth-``n`` image words, applies
all shifts up to an explicit budget, and keeps the ``k``-prefixes.  The
budget is explicit because the true hull shifts unboundedly; the gate
``min_image_length(depth) >= k + budget`` keeps every shifted prefix fully
determined.  The cover semantics stay one-sided, exactly as for the limit
language itself.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import PreconditionError, ValidationError
from .fixedpoints import PrefixLanguage
from .limitset import _gate
from .semigroup import (
    DEFAULT_CAP,
    GeneratorSet,
    composition_words,
    is_irreducible,
    word_image_prefix,
)


@dataclass(frozen=True)
class HullLanguage:
    """Prefix language of shifted limit words of one base letter."""

    letter: str
    k: int
    shift_budget: int
    words: PrefixLanguage


def hull_language(
    gens: GeneratorSet,
    letter: str,
    depth: int,
    k: int,
    shift_budget: int,
    allow_partial: bool = False,
    cap: int | None = DEFAULT_CAP,
) -> HullLanguage:
    """All ``k``-prefixes of shifts (up to the budget) of depth-``depth`` images."""
    if k < 1:
        raise ValidationError("prefix resolution must be positive")
    if shift_budget < 0:
        raise ValidationError("shift budget must be nonnegative")
    gens.alphabet.index(letter)
    _gate(gens, depth, k, allow_partial, cap, extra=shift_budget)
    members = []
    for word in composition_words(gens, depth, cap):
        image = word_image_prefix(gens, word, letter, k + shift_budget)
        for j in range(shift_budget + 1):
            if len(image) >= j + k:
                members.append(image[j : j + k])
    return HullLanguage(letter, k, shift_budget, PrefixLanguage(k, members))


@dataclass(frozen=True)
class HullEqualityReport:
    """Pairwise comparison of the hull languages of all letters."""

    depth: int
    k: int
    shift_budget: int
    sizes: tuple[tuple[str, int], ...]
    differences: tuple[tuple[str, str, str], ...]

    @property
    def all_equal(self) -> bool:
        return not self.differences


def hull_equality_report(
    gens: GeneratorSet,
    depth: int,
    k: int,
    shift_budget: int,
    allow_partial: bool = False,
    cap: int | None = DEFAULT_CAP,
) -> HullEqualityReport:
    """Compare hull languages across letters; irreducibility is required.

    For irreducible systems the true hulls of all letters coincide, and
    this report checks the finite reflection at the stated parameters.
    Differences list (letter with the member, letter missing it, member).
    """
    if not is_irreducible(gens):
        raise PreconditionError(
            "hull comparison requires an irreducible system: some letter "
            "never reaches some other letter through image words"
        )
    hulls = {
        ch: hull_language(gens, ch, depth, k, shift_budget, allow_partial, cap)
        for ch in gens.alphabet
    }
    differences = []
    letters = gens.alphabet.letters
    for a in letters:
        for b in letters:
            if a == b:
                continue
            for member in hulls[a].words:
                if member not in hulls[b].words:
                    differences.append((a, b, member))
    return HullEqualityReport(
        depth,
        k,
        shift_budget,
        tuple((ch, len(hulls[ch].words)) for ch in letters),
        tuple(differences),
    )


@dataclass(frozen=True)
class ShiftInvarianceReport:
    """Check that shifting any member's source stays inside the language."""

    checked: int
    violations: tuple[tuple[str, int, str], ...]

    @property
    def clean(self) -> bool:
        return not self.violations


def shift_invariance_check(
    gens: GeneratorSet,
    hull: HullLanguage,
    depth: int,
    allow_partial: bool = False,
    cap: int | None = DEFAULT_CAP,
) -> ShiftInvarianceReport:
    """Re-enumerate the hull's sources and verify one extra shift stays inside.

    For every source image and shift index below the budget, the prefix one
    shift further along must also be a member; this is the finite
    reflection of shift invariance of the hull.
    """
    language = hull.words
    k = hull.k
    violations = []
    checked = 0
    for word in composition_words(gens, depth, cap):
        image = word_image_prefix(gens, word, hull.letter, k + hull.shift_budget)
        for j in range(hull.shift_budget):
            if len(image) < j + 1 + k:
                continue
            checked += 1
            shifted = image[j + 1 : j + 1 + k]
            if shifted not in language:
                violations.append((gens.format_word(word), j + 1, shifted))
    return ShiftInvarianceReport(checked, tuple(violations))
