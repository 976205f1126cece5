"""Fixed points of Toeplitz substitutions ``a -> W a``.

For ``|W| = m - 1`` the fixed point X starting with ``W[0]`` satisfies
``X(n) = W[n mod m]`` when ``m`` does not divide ``n`` and ``X(n) = X(n/m)``
otherwise. All positions are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from . import _backend
from .errors import DomainError, IndexOverflowError, InvalidSpecError, PreconditionError
from .holeword import PartialWord, limit_stream, validate_word

MAX_INDEX = 2**64 - 1


def check_index(n: int, what: str = "index") -> int:
    if n < 1:
        raise DomainError(f"{what} must be >= 1 (indices are 1-based), got {n}")
    if n > MAX_INDEX:
        raise IndexOverflowError(f"{what} {n} exceeds the supported maximum 2**64-1")
    return n


@dataclass(frozen=True)
class ToeplitzSpec:
    """The modulus ``m`` and the generator word ``W`` with ``|W| = m - 1``."""

    m: int
    generator: str

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 2:
            raise InvalidSpecError(f"modulus must satisfy m >= 2, got {self.m!r}")
        validate_word(self.generator)
        if len(self.generator) != self.m - 1:
            raise InvalidSpecError(
                f"generator length must equal m - 1 = {self.m - 1}, "
                f"got {len(self.generator)} for {self.generator!r}"
            )

    @classmethod
    def from_generator(cls, generator: str) -> "ToeplitzSpec":
        return cls(len(generator) + 1, generator)

    @property
    def partial_word(self) -> PartialWord:
        return PartialWord(self.generator)

    def __str__(self) -> str:
        return f"({self.m}, {self.generator})"


def fixed_prefix(spec: ToeplitzSpec, length: int) -> str:
    """X(1)...X(length)."""
    if length < 0:
        raise DomainError(f"length must be >= 0, got {length}")
    return _backend.toeplitz_prefix(spec.generator, length)


def iter_fixed_point(spec: ToeplitzSpec) -> Iterator[str]:
    return limit_stream(spec.partial_word)


def access(spec: ToeplitzSpec, n: int) -> str:
    """X(n) in O(log_m n) steps."""
    check_index(n)
    m = spec.m
    while n % m == 0:
        n //= m
    return spec.generator[n % m - 1]


def is_constant(spec: ToeplitzSpec) -> bool:
    w = spec.generator
    return w.count(w[0]) == len(w)


@dataclass(frozen=True)
class PeriodicityReport:
    periodic: bool
    witness: Optional[int] = None

    def __bool__(self) -> bool:
        return self.periodic


def is_almost_periodic(word: str, q: int) -> PeriodicityReport:
    """Check ``word[j] == word[j+q]`` for every j not divisible by q.

    Words no longer than ``q`` are vacuously almost q-periodic. The witness is
    the smallest violating 1-based j.
    """
    if q < 2:
        raise DomainError(f"period must be >= 2, got {q}")
    j = _backend.almost_periodic_witness(word, q)
    return PeriodicityReport(True) if j == 0 else PeriodicityReport(False, j)


@dataclass(frozen=True)
class PrefixConditionReport:
    """Outcome of checking both membership conditions on a finite prefix.

    ``condition`` is 1 for ``X(mj) = X(j)`` and 2 for ``X(j) = X(j+m)``
    (m not dividing j).
    """

    passed: bool
    condition: Optional[int] = None
    witness: Optional[int] = None

    def __bool__(self) -> bool:
        return self.passed


def check_prefix_conditions(word: str, m: int) -> PrefixConditionReport:
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    if len(word) < m:
        raise PreconditionError(f"word length {len(word)} is shorter than m = {m}", "word_shorter_than_m")
    cond, j = _backend.prefix_conditions(word, m)
    return PrefixConditionReport(True) if cond == 0 else PrefixConditionReport(False, cond, j)
