"""Size bounds for limit sets via family length and family size.

A family of ``s`` substitutions whose shortest letter image has ``r > 1``
letters covers its limit set by ``|A| * s**n`` cylinders of diameter at
most ``2**-(r**n)``, which pins the logarithmic Hausdorff dimension at
``log_r(s)`` or below.  The bound is kept as the exact integer pair
``(r, s)``; decimals are rendering only and never feed back into logic.

The extremal construction goes the other way: families whose letter images
all start with that letter, all have length exactly ``r``, and are pairwise
distinct per letter generate ``s**n`` distinct depth-``n`` images, which is
what makes the bound sharp.
"""

from __future__ import annotations

import decimal
from dataclasses import dataclass
from itertools import product

from .errors import PreconditionError, ValidationError
from .semigroup import DEFAULT_CAP, GeneratorSet, check_cap, composition_words, realize
from .substitution import Substitution
from .words import Alphabet


@dataclass(frozen=True)
class DimensionReport:
    """Family length ``r``, family size ``s`` and the rendered bound.

    The bound applies only when ``r > 1``; powering the generating set
    raises ``r`` without changing the limit set, so an inapplicable report
    points there.
    """

    r: int
    s: int
    applicable: bool
    bound_decimal: str | None

    def to_json_dict(self) -> dict:
        return {
            "r": str(self.r),
            "s": str(self.s),
            "applicable": self.applicable,
            "bound": None
            if not self.applicable
            else {"base": str(self.r), "argument": str(self.s), "decimal": self.bound_decimal},
        }


def render_log(base: int, argument: int) -> str:
    """Deterministic decimal rendering of ``log_base(argument)``.

    Integer values render as ``t.0`` after an exact integer-power check;
    everything else gets twelve decimal places from exact decimal
    arithmetic.
    """
    if base < 2 or argument < 1:
        raise ValidationError("logarithm parameters out of range")
    power = 1
    t = 0
    while power < argument:
        power *= base
        t += 1
    if power == argument:
        return f"{t}.0"
    with decimal.localcontext() as ctx:
        ctx.prec = 40
        value = decimal.Decimal(argument).ln() / decimal.Decimal(base).ln()
        return str(value.quantize(decimal.Decimal("1.000000000000")))


def dimension_bound(gens: GeneratorSet) -> DimensionReport:
    """Exact ``(r, s)`` parameters and the dimension bound they imply."""
    r = min(len(img) for g in gens for img in g.images)
    s = len(gens)
    if r <= 1:
        return DimensionReport(r, s, False, None)
    return DimensionReport(r, s, True, render_log(r, s))


def power_generating_set(
    gens: GeneratorSet, k: int, cap: int | None = DEFAULT_CAP
) -> GeneratorSet:
    """The generating set of all depth-``k`` composites, named by their words.

    Generates a semigroup with the same forward limit set, so dimension
    bounds computed on the powered set transfer to the original one.
    """
    if k < 1:
        raise ValidationError("power must be positive")
    if k == 1:
        return gens
    check_cap(len(gens) ** k, cap)
    powered = [
        Substitution(
            gens.alphabet,
            realize(gens, word).images,
            name=gens.format_word(word),
        )
        for word in composition_words(gens, k, cap)
    ]
    return GeneratorSet(gens.alphabet, powered)


def extremal_family(
    alphabet: Alphabet, r: int, s: int
) -> GeneratorSet:
    """A family of ``s`` substitutions attaining the ``log_r(s)`` bound.

    Every image of a letter ``a`` starts with ``a``, has length exactly
    ``r``, and the ``s`` images of ``a`` are pairwise distinct; the
    construction picks the lexicographically least valid words per letter,
    so the output is reproducible.
    """
    if r < 2:
        raise ValidationError("family length must be at least 2")
    if s < 1:
        raise ValidationError("family size must be positive")
    limit = len(alphabet) ** (r - 1)
    if s > limit:
        raise PreconditionError(
            f"cannot build {s} distinct images of length {r} with a fixed "
            f"first letter over {len(alphabet)} letters; the maximum is {limit}"
        )
    choices: dict[str, list[str]] = {}
    for ch in alphabet:
        suffixes = product(alphabet.letters, repeat=r - 1)
        choices[ch] = [ch + "".join(tail) for _, tail in zip(range(s), suffixes)]
    subs = [
        Substitution(
            alphabet,
            {ch: choices[ch][i] for ch in alphabet},
            name=f"f{i + 1}",
        )
        for i in range(s)
    ]
    return GeneratorSet(alphabet, subs)


def distinctness_check(
    gens: GeneratorSet, n: int, cap: int | None = DEFAULT_CAP
) -> tuple[bool, tuple[str, str, str] | None]:
    """Whether all depth-``n`` composites give distinct images per letter.

    Materializes every image, so the cap guards ``s**n`` words; on failure
    the earliest colliding pair of composition words and the letter are
    returned.
    """
    if n < 1:
        raise ValidationError("depth must be positive")
    check_cap(len(gens) ** n, cap)
    seen: dict[str, dict[str, tuple[str, ...]]] = {ch: {} for ch in gens.alphabet}
    collision = None
    for word in composition_words(gens, n, cap):
        sub = realize(gens, word)
        for ch in gens.alphabet:
            image = sub.image(ch)
            if image in seen[ch]:
                pair = (
                    gens.format_word(seen[ch][image]),
                    gens.format_word(word),
                    ch,
                )
                if collision is None or pair < collision:
                    collision = pair
            else:
                seen[ch][image] = word
    return (collision is None), collision
