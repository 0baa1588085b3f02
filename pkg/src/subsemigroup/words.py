"""Alphabets, finite words, the word metric and the shift map.

Words are plain Python strings of single-character letters; an
:class:`Alphabet` owns the letter set and validates membership.  Positions
are 1-based throughout, matching the usual convention for symbolic
sequences.  Reads past the end of a word return :data:`SENTINEL`, a marker
letter that no alphabet may contain; it exists only so that words of
different lengths can be compared position by position, and it is never
serialized.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import PreconditionError, ValidationError

#: Out-of-range marker returned by :func:`letter_at`; excluded from alphabets.
SENTINEL = "\x00"


@dataclass(frozen=True)
class Alphabet:
    """An ordered set of at least two distinct single-character letters."""

    letters: tuple[str, ...]

    def __init__(self, letters) -> None:
        letters = tuple(letters)
        if len(letters) < 2:
            raise ValidationError("alphabet must contain at least two letters")
        seen = set()
        for ch in letters:
            if not isinstance(ch, str) or len(ch) != 1:
                raise ValidationError(f"letter {ch!r} is not a single character")
            if not ch.isprintable() or ch.isspace():
                raise ValidationError(f"letter {ch!r} is not printable")
            if ch in seen:
                raise ValidationError(f"duplicate letter {ch!r}")
            seen.add(ch)
        object.__setattr__(self, "letters", letters)
        object.__setattr__(self, "_index", {ch: i for i, ch in enumerate(letters)})

    def __len__(self) -> int:
        return len(self.letters)

    def __contains__(self, ch: str) -> bool:
        return ch in self._index

    def __iter__(self):
        return iter(self.letters)

    def index(self, ch: str) -> int:
        try:
            return self._index[ch]
        except KeyError:
            raise ValidationError(f"letter {ch!r} not in alphabet {''.join(self.letters)!r}") from None

    def check_word(self, w: str) -> str:
        """Validate that ``w`` is a nonempty word over this alphabet."""
        if not w:
            raise ValidationError("the empty word is excluded")
        for ch in w:
            if ch not in self._index:
                raise ValidationError(
                    f"letter {ch!r} not in alphabet {''.join(self.letters)!r}"
                )
        return w

    def key(self, w: str) -> tuple[int, ...]:
        """Sort key ordering words by this alphabet's letter order."""
        return tuple(self._index[ch] for ch in w)


def letter_at(w: str, k: int) -> str:
    """Letter at 1-based position ``k``, or :data:`SENTINEL` past the end."""
    if k < 1:
        raise ValidationError("positions are 1-based")
    return w[k - 1] if k <= len(w) else SENTINEL


def word_metric(u: str, v: str) -> int:
    """First position where ``u`` and ``v`` disagree, or 0 if they are equal.

    The actual metric value is ``2**-(n-1)`` for a disagreement at position
    ``n``; returning the position keeps all comparisons exact.  Words of
    different lengths disagree at the shorter one's first sentinel position.
    """
    if u == v:
        return 0
    n = min(len(u), len(v))
    for i in range(n):
        if u[i] != v[i]:
            return i + 1
    return n + 1


def metric_value(n: int) -> Fraction:
    """Exact metric value for a :func:`word_metric` result."""
    if n < 0:
        raise ValidationError("disagreement position must be nonnegative")
    return Fraction(0) if n == 0 else Fraction(1, 2 ** (n - 1))


def shift(w: str, j: int = 1) -> str:
    """Drop the first ``j`` letters of ``w``; the result must stay nonempty."""
    if j < 0:
        raise ValidationError("shift count must be nonnegative")
    if j >= len(w):
        raise PreconditionError(
            f"shift by {j} of a word of length {len(w)} would be empty"
        )
    return w[j:]


def is_prefix(p: str, w: str) -> bool:
    """True if ``w`` starts with ``p`` (every word is its own prefix)."""
    return w.startswith(p)


def agree_on(u: str, v: str, k: int) -> bool:
    """True if ``u`` and ``v`` agree on their first ``k`` positions, sentinel-extended."""
    m = word_metric(u, v)
    return m == 0 or m > k
