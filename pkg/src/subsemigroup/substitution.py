"""Substitutions: non-erasing letter-to-word morphisms over a fixed alphabet.

A substitution maps every letter to a nonempty word and extends to words by
concatenation.  Composition, the first-letter action, exact image-length
vectors and the per-substitution predicates used elsewhere all live here.
Image lengths are plain Python integers, so they never overflow no matter
how deep a composite gets.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import ValidationError
from .words import Alphabet


@dataclass(frozen=True)
class Substitution:
    """Total map letter -> nonempty image word over one alphabet.

    Equality and hashing compare the alphabet and the image words only; the
    optional name is a label and never influences identity, so relations
    such as "this composite equals that square" are decided letterwise.
    """

    alphabet: Alphabet
    images: tuple[str, ...]
    name: str | None = field(default=None, compare=False)

    def __init__(self, alphabet: Alphabet, images, name: str | None = None) -> None:
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "name", name)
        if isinstance(images, dict):
            missing = [ch for ch in alphabet if ch not in images]
            if missing:
                raise ValidationError(f"no image for letter {missing[0]!r}")
            extra = [ch for ch in images if ch not in alphabet]
            if extra:
                raise ValidationError(f"image given for unknown letter {extra[0]!r}")
            images = tuple(images[ch] for ch in alphabet)
        else:
            images = tuple(images)
            if len(images) != len(alphabet):
                raise ValidationError(
                    f"expected {len(alphabet)} images, got {len(images)}"
                )
        for ch, img in zip(alphabet, images):
            if not img:
                raise ValidationError(
                    f"erasing morphism rejected: image of {ch!r} is empty"
                )
            for c in img:
                if c not in alphabet:
                    raise ValidationError(
                        f"image of {ch!r} contains letter {c!r} outside the alphabet"
                    )
        object.__setattr__(self, "images", images)

    def image(self, ch: str) -> str:
        """Image word of a single letter."""
        return self.images[self.alphabet.index(ch)]

    def as_dict(self) -> dict[str, str]:
        return {ch: img for ch, img in zip(self.alphabet, self.images)}

    def __str__(self) -> str:
        body = ", ".join(f"{ch}->{img}" for ch, img in zip(self.alphabet, self.images))
        return f"{self.name or 'substitution'}({body})"


def apply(f: Substitution, w: str) -> str:
    """Image of the word ``w``: the concatenation of its letters' images."""
    f.alphabet.check_word(w)
    return "".join(f.image(ch) for ch in w)


def apply_prefix(f: Substitution, w: str, k: int) -> str:
    """First ``min(k, |f(w)|)`` letters of ``f(w)`` without building all of it.

    Because images are nonempty, the first ``k`` letters of ``w`` already
    determine the first ``k`` letters of ``f(w)``; feeding a ``k``-prefix in
    therefore loses nothing as long as the input was either complete or
    already ``k`` letters long.
    """
    if k < 1:
        raise ValidationError("prefix resolution must be positive")
    f.alphabet.check_word(w)
    parts: list[str] = []
    total = 0
    for ch in w:
        parts.append(f.image(ch))
        total += len(parts[-1])
        if total >= k:
            break
    return "".join(parts)[:k]


def compose(f: Substitution, g: Substitution, name: str | None = None) -> Substitution:
    """The substitution applying ``g`` first and then ``f``."""
    if f.alphabet != g.alphabet:
        raise ValidationError("cannot compose substitutions over different alphabets")
    return Substitution(
        f.alphabet, tuple(apply(f, img) for img in g.images), name=name
    )


def first_letter(f: Substitution, ch: str) -> str:
    """First letter of ``f``'s image of ``ch``; the action on single letters."""
    return f.image(ch)[0]


def first_letter_map(f: Substitution) -> dict[str, str]:
    """The full first-letter action, one entry per letter."""
    return {ch: f.image(ch)[0] for ch in f.alphabet}


def length_vector(f: Substitution) -> dict[str, int]:
    """Exact image length per letter."""
    return {ch: len(f.image(ch)) for ch in f.alphabet}


def compose_lengths(outer: dict[str, int], g: Substitution) -> dict[str, int]:
    """Length vector of ``outer_substitution o g`` from outer lengths alone.

    ``outer`` must be the length vector of some substitution ``f``; the
    result is the length vector of ``f o g``, computed without materializing
    any image word.
    """
    return {ch: sum(outer[c] for c in g.image(ch)) for ch in g.alphabet}


def has_fixed_letter(f: Substitution) -> str | None:
    """A letter ``a`` with ``f(a) = a``, or None if no letter is fixed."""
    for ch in f.alphabet:
        if f.image(ch) == ch:
            return ch
    return None


def prefix_injectivity_witness(f: Substitution) -> tuple[str, str] | None:
    """A pair ``(a, b)`` of distinct letters with ``f(a)`` a prefix of ``f(b)``.

    Returns None when no such pair exists, i.e. when ``f`` acts injectively
    on words.  The scan runs in alphabet order, so the witness is stable.
    """
    for a in f.alphabet:
        for b in f.alphabet:
            if a != b and f.image(b).startswith(f.image(a)):
                return (a, b)
    return None


def is_prefix_injective(f: Substitution) -> bool:
    """True when no letter image is a prefix of another letter's image."""
    return prefix_injectivity_witness(f) is None
