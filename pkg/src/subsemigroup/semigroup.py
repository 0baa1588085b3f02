"""Finite generating sets and the semigroup they span.

A composition word names a finite composition of generators: the word
``f1 f2 ... fn`` (read left to right) realizes ``f1 o f2 o ... o fn``, so
the RIGHTMOST generator is applied first.  Every depth-indexed operation in
the package enumerates composition words of exactly that depth, in
lexicographic order of generator names, behind a configurable cap.

Minimal image lengths are computed exactly by propagating length vectors
and pruning componentwise-dominated ones; a dominated vector can never beat
the frontier under any further composition, so the pruning is lossless.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterator

from .errors import EnumerationCapError, ValidationError
from .substitution import Substitution, apply_prefix, compose
from .words import Alphabet

#: Default bound on how many composition words an enumeration may touch.
DEFAULT_CAP = 10**6

CompositionWord = tuple[str, ...]


@dataclass(frozen=True)
class GeneratorSet:
    """A named, ordered, nonempty family of substitutions over one alphabet."""

    alphabet: Alphabet
    generators: tuple[Substitution, ...]

    def __init__(self, alphabet: Alphabet, generators) -> None:
        generators = tuple(generators)
        if not generators:
            raise ValidationError("generator set must be nonempty")
        names = set()
        for g in generators:
            if g.alphabet != alphabet:
                raise ValidationError(
                    f"generator {g.name!r} is over a different alphabet"
                )
            if not g.name:
                raise ValidationError("every generator needs a name")
            if g.name in names:
                raise ValidationError(f"duplicate generator name {g.name!r}")
            names.add(g.name)
        object.__setattr__(self, "alphabet", alphabet)
        object.__setattr__(self, "generators", generators)
        object.__setattr__(self, "_by_name", {g.name: g for g in generators})

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self):
        return iter(self.generators)

    def names(self) -> tuple[str, ...]:
        return tuple(g.name for g in self.generators)

    def generator(self, name: str) -> Substitution:
        try:
            return self._by_name[name]
        except KeyError:
            raise ValidationError(f"unknown generator name {name!r}") from None

    def format_word(self, word: CompositionWord) -> str:
        """Render a composition word as a string, unambiguously.

        Names are concatenated when every generator name is one character,
        otherwise joined with dots.
        """
        for name in word:
            self.generator(name)
        if all(len(n) == 1 for n in self._by_name):
            return "".join(word)
        return ".".join(word)

    def parse_word(self, text: str) -> CompositionWord:
        """Inverse of :meth:`format_word`."""
        if not text:
            raise ValidationError("composition words are nonempty")
        parts = tuple(text) if all(len(n) == 1 for n in self._by_name) else tuple(
            text.split(".")
        )
        for name in parts:
            self.generator(name)
        return parts


def check_cap(count: int, cap: int | None) -> None:
    """Raise unless ``count`` composition words fit under ``cap``."""
    if cap is not None and count > cap:
        raise EnumerationCapError(
            f"{count} composition words exceed the cap of {cap}; "
            "raise the cap to opt in"
        )


def composition_words(
    gens: GeneratorSet, depth: int, cap: int | None = DEFAULT_CAP
) -> Iterator[CompositionWord]:
    """All composition words of exactly ``depth``, lexicographic by name."""
    if depth < 1:
        raise ValidationError("depth must be positive")
    check_cap(len(gens) ** depth, cap)
    return itertools.product(sorted(g.name for g in gens), repeat=depth)


def realize(gens: GeneratorSet, word: CompositionWord) -> Substitution:
    """The substitution named by ``word``; the rightmost generator acts first."""
    if not word:
        raise ValidationError("composition words are nonempty")
    subs = [gens.generator(name) for name in word]
    result = subs[-1]
    for f in reversed(subs[:-1]):
        result = compose(f, result)
    return Substitution(gens.alphabet, result.images, name=gens.format_word(word))


def enumerate_realizations(
    gens: GeneratorSet,
    depth: int,
    resolution: int | None = None,
    cap: int | None = DEFAULT_CAP,
) -> Iterator[tuple[CompositionWord, dict[str, str]]]:
    """Yield ``(word, images)`` for every depth-``depth`` composition word.

    With a resolution, image words are truncated to that many letters; the
    full images are materialized otherwise.  Output order and content are
    deterministic.
    """
    for word in composition_words(gens, depth, cap):
        if resolution is None:
            sub = realize(gens, word)
            yield word, sub.as_dict()
        else:
            yield word, {
                ch: word_image_prefix(gens, word, ch, resolution)
                for ch in gens.alphabet
            }


def word_image_prefix(
    gens: GeneratorSet, word: CompositionWord, ch: str, k: int
) -> str:
    """First ``k`` letters of the realized image of ``ch``, or all of it if shorter.

    Applies the word right to left, truncating every intermediate at ``k``
    letters; a truncated intermediate of full length ``k`` still determines
    the next stage's ``k``-prefix exactly, so the result is exact.
    """
    if not word:
        raise ValidationError("composition words are nonempty")
    current = ch
    for name in reversed(word):
        current = apply_prefix(gens.generator(name), current, k)
    return current


def word_first_letter(gens: GeneratorSet, word: CompositionWord, ch: str) -> str:
    """First letter of the realized image of ``ch``, via the first-letter action."""
    current = ch
    for name in reversed(word):
        current = gens.generator(name).image(current)[0]
    return current


def word_length_vector(gens: GeneratorSet, word: CompositionWord) -> dict[str, int]:
    """Exact image lengths of the realization of ``word``, never materialized."""
    from .substitution import compose_lengths, length_vector

    if not word:
        raise ValidationError("composition words are nonempty")
    vec = length_vector(gens.generator(word[0]))
    for name in word[1:]:
        vec = compose_lengths(vec, gens.generator(name))
    return vec


def fixed_letter_witness(
    gens: GeneratorSet,
) -> tuple[CompositionWord, str] | None:
    """A composition word and letter it fixes, or None if the semigroup has none.

    A composite can fix a letter only by passing it along single-letter
    images, so the semigroup has a fixed letter exactly when the graph with
    an edge ``a -> f(a)`` for every generator ``f`` with ``|f(a)| = 1``
    contains a directed cycle.  The witness follows the shortest such cycle
    from the smallest letter, generators tried in name order.
    """
    edges: dict[str, list[tuple[str, str]]] = {ch: [] for ch in gens.alphabet}
    for g in sorted(gens, key=lambda g: g.name):
        for ch in gens.alphabet:
            img = g.image(ch)
            if len(img) == 1:
                edges[ch].append((img, g.name))
    for start in gens.alphabet:
        # BFS over single-letter-image edges, looking for a cycle back to start.
        paths: dict[str, tuple[str, ...]] = {start: ()}
        frontier = [start]
        while frontier:
            nxt: list[str] = []
            for ch in frontier:
                for target, gname in edges[ch]:
                    if target == start:
                        labels = paths[ch] + (gname,)
                        # Generators are applied first to last along the cycle,
                        # so the composition word lists them in reverse.
                        return tuple(reversed(labels)), start
                    if target not in paths:
                        paths[target] = paths[ch] + (gname,)
                        nxt.append(target)
            frontier = nxt
    return None


def fixed_letter_free(gens: GeneratorSet) -> bool:
    """True when no composite of the generators fixes any letter."""
    return fixed_letter_witness(gens) is None


def _pareto_min(vectors: set[tuple[int, ...]]) -> list[tuple[int, ...]]:
    """Componentwise-minimal elements of a set of equal-length int tuples."""
    frontier: list[tuple[int, ...]] = []
    for v in sorted(vectors):
        if not any(all(f[i] <= v[i] for i in range(len(v))) for f in frontier):
            frontier = [f for f in frontier if not all(v[i] <= f[i] for i in range(len(v)))]
            frontier.append(v)
    return frontier


def length_frontier_profile(
    gens: GeneratorSet, depth: int, cap: int | None = DEFAULT_CAP
) -> list[list[tuple[int, ...]]]:
    """Pareto-minimal length vectors of realized words, per depth 1..depth."""
    if depth < 1:
        raise ValidationError("depth must be positive")
    check_cap(len(gens) ** depth, cap)
    letters = gens.alphabet.letters
    images = [
        tuple(tuple(gens.alphabet.index(c) for c in g.image(ch)) for ch in letters)
        for g in gens
    ]
    frontier = _pareto_min(
        {tuple(len(g.image(ch)) for ch in letters) for g in gens}
    )
    profile = [frontier]
    for _ in range(depth - 1):
        candidates = {
            tuple(sum(vec[i] for i in img[a]) for a in range(len(letters)))
            for vec in frontier
            for img in images
        }
        frontier = _pareto_min(candidates)
        profile.append(frontier)
    return profile


def min_image_length(
    gens: GeneratorSet, depth: int, cap: int | None = DEFAULT_CAP
) -> int:
    """Exact minimum of ``|F(w)(a)|`` over depth-``depth`` words and letters."""
    frontier = length_frontier_profile(gens, depth, cap)[-1]
    return min(min(vec) for vec in frontier)


def min_image_lengths(
    gens: GeneratorSet, depth: int, cap: int | None = DEFAULT_CAP
) -> list[int]:
    """``min_image_length`` for every depth 1..depth in one pass."""
    profile = length_frontier_profile(gens, depth, cap)
    return [min(min(vec) for vec in frontier) for frontier in profile]


def is_irreducible(gens: GeneratorSet) -> bool:
    """True when every letter's image chain eventually mentions every letter.

    Builds the occurrence graph (edge ``a -> b`` when ``b`` occurs in some
    generator's image of ``a``); occurrence composes through the morphism
    law, so the semigroup is irreducible exactly when every letter reaches
    every letter along nonempty walks.
    """
    letters = gens.alphabet.letters
    adjacency = {
        a: {b for g in gens for b in g.image(a)} for a in letters
    }
    for a in letters:
        reached: set[str] = set()
        frontier = set(adjacency[a])
        while frontier:
            reached |= frontier
            frontier = {c for b in frontier for c in adjacency[b]} - reached
        if reached != set(letters):
            return False
    return True
