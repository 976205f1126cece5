"""Hole-terminated partial words and their composition.

A partial word is a finite body of letters followed by a single hole, written
``"aab?"``. Composition interleaves: ``U ∘ V`` is ``|V|`` copies of U's body,
the j-th copy followed by the j-th symbol of V, so the last copy keeps V's
hole. The bare hole ``"?"`` is the two-sided identity.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import count
from typing import Iterable, Iterator, Union

from . import _backend
from .errors import DomainError, InvalidWordError, StreamExhaustedError

HOLE = "?"
HOLE_ALIASES = ("?", ".")
MAX_LENGTH = 2**64 - 1


def validate_letter(ch: str) -> str:
    if len(ch) != 1:
        raise InvalidWordError(f"a letter is a single character, got {ch!r}")
    if ch in HOLE_ALIASES:
        raise InvalidWordError(f"letter {ch!r} is reserved for the hole")
    if not ch.isprintable() or ch.isspace():
        raise InvalidWordError(f"letter {ch!r} must be printable and non-whitespace")
    return ch


def validate_word(word: str) -> str:
    """Return ``word`` unchanged if every character is a legal letter."""
    if not isinstance(word, str):
        raise InvalidWordError(f"a word must be a str, got {type(word).__name__}")
    for ch in word:
        validate_letter(ch)
    return word


@dataclass(frozen=True)
class PartialWord:
    """A word with exactly one hole, always in last position."""

    body: str = ""

    def __post_init__(self):
        validate_word(self.body)

    @classmethod
    def parse(cls, text: str) -> "PartialWord":
        """Parse ``"abc?"``; a trailing ``'.'`` is accepted for the hole."""
        if not text:
            raise InvalidWordError("empty string is not a partial word")
        if text[-1] not in HOLE_ALIASES:
            raise InvalidWordError(f"partial word {text!r} must end with the hole '?'")
        return cls(text[:-1])

    def __len__(self) -> int:
        return len(self.body) + 1

    def __str__(self) -> str:
        return self.body + HOLE

    def __matmul__(self, other: "PartialWord") -> "PartialWord":
        return compose(self, other)


PartialLike = Union[PartialWord, str]


def as_partial(u: PartialLike) -> PartialWord:
    return u if isinstance(u, PartialWord) else PartialWord.parse(u)


def compose(u: PartialLike, v: PartialLike) -> PartialWord:
    """Composition ``u ∘ v``; ``len(result) == len(u) * len(v)``."""
    u, v = as_partial(u), as_partial(v)
    return PartialWord(_backend.compose_bodies(u.body, v.body))


def compose_all(words: Iterable[PartialLike]) -> PartialWord:
    """Left-associated product of the words; the empty product is ``"?"``."""
    result = PartialWord()
    for w in words:
        result = compose(result, w)
    return result


def iterate(u: PartialLike, n: int) -> PartialWord:
    """The n-th iterate ``u^(n) = u^(n-1) ∘ u``."""
    u = as_partial(u)
    if n < 1:
        raise DomainError(f"iteration count must be >= 1, got {n}")
    if len(u) == 1:
        return u
    if len(u) ** n > MAX_LENGTH:
        raise DomainError(f"iterate length {len(u)}**{n} exceeds {MAX_LENGTH}")
    # Associativity lets us square instead of folding n times.
    result, base = None, u
    while n:
        if n & 1:
            result = base if result is None else compose(result, base)
        n >>= 1
        if n:
            base = compose(base, base)
    return result


def expand(u: PartialLike, length: int) -> str:
    """First ``length`` letters of the limit word ``u^(∞)``."""
    u = as_partial(u)
    if len(u) < 2:
        raise DomainError("the bare hole '?' has no limit word")
    if length < 0:
        raise DomainError(f"length must be >= 0, got {length}")
    return _backend.toeplitz_prefix(u.body, length)


def limit_stream(u: PartialLike) -> Iterator[str]:
    """Lazily yield the letters of ``u^(∞)``."""
    u = as_partial(u)
    if len(u) < 2:
        raise DomainError("the bare hole '?' has no limit word")
    body, r = u.body, len(u)
    for n in count(1):
        while n % r == 0:
            n //= r
        yield body[n % r - 1]


def compose_stream(u: PartialLike, source: Iterable[str]) -> Iterator[str]:
    """``u ∘ source`` for an infinite letter stream, evaluated lazily.

    One source letter is pulled at the start of each block of ``len(u)``
    output letters.
    """
    body = as_partial(u).body
    it = iter(source)
    while True:
        try:
            letter = next(it)
        except StopIteration:
            raise StreamExhaustedError("source stream ended; streams must be infinite") from None
        yield from body
        yield letter
