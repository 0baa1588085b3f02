"""Finite-resolution covers of forward limit sets.

The semigroup orbit of a letter set accumulates only at infinite words, and
every accumulation point has some depth-``n`` image word as a prefix.  The
operations here work with exactly that cover: the ``k``-letter prefixes of
all depth-``n`` images.  The cover is one-sided by construction.  Every
point of the limit set lies in one of the emitted cylinders, but an emitted
prefix need not extend to a limit point, so reports speak of covers, never
of exact membership.

Resolution discipline: a prefix is only emitted when the underlying image
word really has ``k`` letters.  In strict mode (the default) the minimal
image length at the requested depth must reach ``k``, so nothing is
dropped; ``allow_partial=True`` instead skips undetermined images, which is
the honest option for systems whose minimal lengths do not grow.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple, Sequence

from .errors import ResolutionError, ValidationError
from .fixedpoints import (
    Anchor,
    PrefixLanguage,
    find_anchors,
    fixed_point_prefix,
    require_fixed_letter_free,
)
from .flgraph import build, limitset_order, reachability_steps
from .semigroup import (
    DEFAULT_CAP,
    CompositionWord,
    GeneratorSet,
    composition_words,
    min_image_length,
    word_image_prefix,
)
from .substitution import (
    apply_prefix,
    compose_lengths,
    length_vector,
    prefix_injectivity_witness,
)
from .words import word_metric


class CylinderDescriptor(NamedTuple):
    """One cover element: the set of infinite words starting with ``prefix``.

    ``prefix`` is the (possibly truncated) image of ``letter`` under the
    realized ``word``; ``length_bound`` is the guaranteed minimal length of
    the untruncated image, so the cylinder has diameter at most
    ``2**-length_bound``.
    """

    word: CompositionWord
    letter: str
    prefix: str
    length_bound: int


def family_length(gens: GeneratorSet) -> int:
    """Least image length among all generators and letters."""
    return min(len(img) for g in gens for img in g.images)


def _gate(gens, depth, k, allow_partial, cap, extra=0):
    if not allow_partial:
        require_fixed_letter_free(gens)
        reach = min_image_length(gens, depth, cap)
        if reach < k + extra:
            raise ResolutionError(
                f"depth {depth} only determines {reach} letters, but "
                f"{k + extra} are required; increase the depth or pass "
                "allow_partial=True to skip undetermined images"
            )


def limit_cylinders(
    gens: GeneratorSet,
    letters: Iterable[str],
    depth: int,
    k: int,
    allow_partial: bool = False,
    cap: int | None = DEFAULT_CAP,
) -> Iterator[CylinderDescriptor]:
    """The depth-``depth`` cover of the limit set of ``letters`` at resolution ``k``."""
    if k < 1:
        raise ValidationError("prefix resolution must be positive")
    letters = list(letters)
    for ch in letters:
        gens.alphabet.index(ch)
    _gate(gens, depth, k, allow_partial, cap)
    bound = family_length(gens) ** depth
    for word in composition_words(gens, depth, cap):
        for ch in letters:
            prefix = word_image_prefix(gens, word, ch, k)
            if len(prefix) < k:
                continue
            yield CylinderDescriptor(word, ch, prefix, bound)


def limit_language(
    gens: GeneratorSet,
    letters: Iterable[str],
    depth: int,
    k: int,
    allow_partial: bool = False,
    cap: int | None = DEFAULT_CAP,
) -> PrefixLanguage:
    """Deduplicated ``k``-prefixes of all depth-``depth`` images of ``letters``."""
    return PrefixLanguage(
        k,
        (
            c.prefix
            for c in limit_cylinders(gens, letters, depth, k, allow_partial, cap)
        ),
    )


def cylinder_hit(
    gens: GeneratorSet,
    p: str,
    depth: int,
    allow_partial: bool = False,
    cap: int | None = DEFAULT_CAP,
) -> CylinderDescriptor | None:
    """First depth-``depth`` cover element whose image word starts with ``p``.

    A hit is necessary for the cylinder of ``p`` to meet the limit set, but
    not sufficient; None means no depth-``depth`` image extends ``p``.
    """
    gens.alphabet.check_word(p)
    _gate(gens, depth, len(p), allow_partial, cap)
    bound = family_length(gens) ** depth
    for word in composition_words(gens, depth, cap):
        for ch in gens.alphabet:
            image = word_image_prefix(gens, word, ch, len(p))
            if image == p:
                return CylinderDescriptor(word, ch, image, bound)
    return None


class SadicResult(NamedTuple):
    """Outcome of following a finite directive sequence.

    ``prefix`` is the determined ``k``-prefix or None; ``stabilized_at`` is
    the first step whose composed lengths pin the prefix; ``trajectory``
    lists the truncated partial values, one per step.
    """

    prefix: str | None
    stabilized_at: int | None
    trajectory: tuple[str, ...]


def sadic_prefix(
    gens: GeneratorSet,
    directive: Sequence[str],
    seeds: str | Sequence[str],
    k: int,
) -> SadicResult:
    """Stabilized ``k``-prefix of the limit along a directive sequence.

    The word at step ``n`` is the composition of the first ``n`` directive
    entries applied to that step's seed letter.  Once the composed length
    vector guarantees that every word starting with the upcoming tail's
    first letter is mapped onto at least ``k`` common letters, the prefix
    can never change again; agreement of successive values alone is not
    trusted.  If the guarantee is not reached by the directive's end the
    result is undetermined (``prefix=None``).
    """
    if k < 1:
        raise ValidationError("prefix resolution must be positive")
    directive = tuple(directive)
    if not directive:
        raise ValidationError("directive must be nonempty")
    subs = [gens.generator(name) for name in directive]
    n = len(directive)
    if isinstance(seeds, str) and len(seeds) == 1:
        seed_list = [seeds] * n
    else:
        seed_list = list(seeds)
        if len(seed_list) != n:
            raise ValidationError("seeds must match the directive length")
    for ch in seed_list:
        gens.alphabet.index(ch)

    # First letter of the remaining tail value, for every split point.
    tail_first = [None] * (n + 1)
    tail_first[n] = seed_list[-1]
    for i in range(n - 1, 0, -1):
        tail_first[i] = subs[i].image(tail_first[i + 1])[0]

    trajectory = []
    stabilized_at = None
    vec = None
    for i, sub in enumerate(subs, start=1):
        vec = length_vector(sub) if vec is None else compose_lengths(vec, sub)
        trajectory.append(
            word_image_prefix(gens, directive[:i], seed_list[i - 1], k)
        )
        if stabilized_at is None and vec[tail_first[i]] >= k:
            stabilized_at = i
    if stabilized_at is None:
        return SadicResult(None, None, tuple(trajectory))
    prefix = word_image_prefix(gens, directive, seed_list[-1], k)
    return SadicResult(prefix, stabilized_at, tuple(trajectory))


@dataclass(frozen=True)
class UncountabilityCertificate:
    """Machine-checkable witness that the limit set is uncountable.

    Requires every generator to act prefix-injectively and two anchored
    fixed points to share a first letter while differing within the stated
    resolution; both facts re-verify from scratch via
    :func:`validate_certificate`.
    """

    first: Anchor
    second: Anchor
    letter: str
    prefix_first: str
    prefix_second: str
    disagreement: int
    k: int
    anchor_depth: int


@dataclass(frozen=True)
class UncountabilityReport:
    """Certificate when the hypotheses hold, otherwise the reason they fail.

    Inconclusive never means countable; the test is one-directional.
    """

    anchor_depth: int
    k: int
    injectivity: tuple[tuple[str, tuple[str, str] | None], ...]
    certificate: UncountabilityCertificate | None
    reason: str | None
    hint: str | None = None

    @property
    def status(self) -> str:
        return "certificate" if self.certificate else "inconclusive"


def certify_uncountable(
    gens: GeneratorSet,
    anchor_depth: int,
    k: int,
    cap: int | None = DEFAULT_CAP,
) -> UncountabilityReport:
    """Try to certify an uncountable limit set from fixed-point prefixes."""
    require_fixed_letter_free(gens)
    injectivity = tuple(
        (g.name, prefix_injectivity_witness(g)) for g in gens
    )
    failures = [(name, w) for name, w in injectivity if w is not None]
    if failures:
        name, (a, b) = failures[0]
        passing = [n for n, w in injectivity if w is None]
        hint = None
        if passing:
            hint = (
                f"try the derived pair {{{passing[0]}, {name}*{passing[0]}}}: "
                "composing can restore prefix-injectivity"
            )
        return UncountabilityReport(
            anchor_depth,
            k,
            injectivity,
            None,
            f"generator {name!r} is not prefix-injective: "
            f"image of {a!r} is a prefix of the image of {b!r}",
            hint,
        )
    anchors = find_anchors(gens, anchor_depth, cap)
    prefixes = [(a, fixed_point_prefix(gens, a, k)) for a in anchors]
    for i, (anchor_a, pa) in enumerate(prefixes):
        for anchor_b, pb in prefixes[i + 1 :]:
            if pa[0] == pb[0] and pa != pb:
                cert = UncountabilityCertificate(
                    first=anchor_a,
                    second=anchor_b,
                    letter=pa[0],
                    prefix_first=pa,
                    prefix_second=pb,
                    disagreement=word_metric(pa, pb),
                    k=k,
                    anchor_depth=anchor_depth,
                )
                return UncountabilityReport(anchor_depth, k, injectivity, cert, None)
    return UncountabilityReport(
        anchor_depth,
        k,
        injectivity,
        None,
        f"no two fixed-point prefixes at anchor depth {anchor_depth} share a "
        f"first letter while differing within {k} letters; "
        "a deeper anchor search may still succeed",
    )


def validate_certificate(
    gens: GeneratorSet, cert: UncountabilityCertificate
) -> bool:
    """Re-derive every claim in a certificate from the generator set alone."""
    if any(prefix_injectivity_witness(g) is not None for g in gens):
        return False
    pa = fixed_point_prefix(gens, cert.first, cert.k)
    pb = fixed_point_prefix(gens, cert.second, cert.k)
    return (
        pa == cert.prefix_first
        and pb == cert.prefix_second
        and pa[0] == pb[0] == cert.letter
        and pa != pb
        and word_metric(pa, pb) == cert.disagreement
    )


@dataclass(frozen=True)
class InvarianceReport:
    """Outcome of the two-sided closure check between consecutive depths."""

    depth: int
    k: int
    checked_forward: int
    checked_backward: int
    forward_violations: tuple[tuple[str, str, str], ...]
    backward_violations: tuple[tuple[str, str, str], ...]

    @property
    def clean(self) -> bool:
        return not self.forward_violations and not self.backward_violations


def invariance_check(
    gens: GeneratorSet,
    letters: Iterable[str],
    depth: int,
    k: int,
    allow_partial: bool = False,
    cap: int | None = DEFAULT_CAP,
) -> InvarianceReport:
    """Check that the cover behaves like an invariant set across one depth step.

    Forward: prepending any generator to a depth-``depth`` cover element
    lands in the depth+1 language.  Backward: every depth+1 element whose
    word starts with a generator is that generator's image of its depth
    suffix, recomputed independently.
    """
    letters = list(letters)
    current = list(limit_cylinders(gens, letters, depth, k, allow_partial, cap))
    next_language = limit_language(gens, letters, depth + 1, k, allow_partial, cap)
    names = sorted(g.name for g in gens)

    forward_violations = []
    checked_forward = 0
    for cyl in current:
        for name in names:
            image = apply_prefix(gens.generator(name), cyl.prefix, k)
            checked_forward += 1
            if len(image) == k and image not in next_language:
                forward_violations.append(
                    (gens.format_word((name,) + cyl.word), cyl.letter, image)
                )

    backward_violations = []
    checked_backward = 0
    for cyl in limit_cylinders(gens, letters, depth + 1, k, allow_partial, cap):
        head, tail = cyl.word[0], cyl.word[1:]
        source = word_image_prefix(gens, tail, cyl.letter, k)
        rebuilt = apply_prefix(gens.generator(head), source, k)
        checked_backward += 1
        if rebuilt != cyl.prefix:
            backward_violations.append(
                (gens.format_word(cyl.word), cyl.letter, cyl.prefix)
            )
    return InvarianceReport(
        depth,
        k,
        checked_forward,
        checked_backward,
        tuple(forward_violations),
        tuple(backward_violations),
    )


@dataclass(frozen=True)
class OrderConsistencyReport:
    """Containment of letter limit-languages along first-letter reachability.

    For a walk of length ``m`` from ``a`` to ``b``, every depth-``d``
    ``k``-prefix seen from ``b`` must appear among the depth-``d+m``
    prefixes seen from ``a``; the depth offset accounts for realizing the
    walk inside the composition word.
    """

    depth: int
    k: int
    pairs_checked: int
    violations: tuple[tuple[str, str, str], ...]

    @property
    def clean(self) -> bool:
        return not self.violations


def order_consistency_report(
    gens: GeneratorSet,
    depth: int,
    k: int,
    allow_partial: bool = False,
    cap: int | None = DEFAULT_CAP,
) -> OrderConsistencyReport:
    """Verify the reachability order against actual limit languages."""
    graph = build(gens)
    pairs = limitset_order(graph)
    languages: dict[tuple[str, int], PrefixLanguage] = {}

    def language(ch: str, d: int) -> PrefixLanguage:
        if (ch, d) not in languages:
            languages[(ch, d)] = limit_language(
                gens, [ch], d, k, allow_partial, cap
            )
        return languages[(ch, d)]

    violations = []
    checked = 0
    for a, b in sorted(pairs):
        if a == b:
            continue
        m = reachability_steps(graph, a, b)
        checked += 1
        upper = language(a, depth + m)
        for p in language(b, depth):
            if p not in upper:
                violations.append((a, b, p))
    return OrderConsistencyReport(depth, k, checked, tuple(violations))
