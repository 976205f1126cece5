"""Lattice subsequences ``X(qN) = X(q), X(2q), X(3q), ...`` of Toeplitz fixed points.

Whether ``X(qN)`` is again a modulo-m Toeplitz fixed point depends only on the
m-adic part ``p`` of ``q`` once powers of m are stripped:

* ``p == 1``: always.
* ``p`` does not divide ``m**2``: never (unless X is constant).
* ``p | m``: iff ``X(1..m)`` is almost p-periodic.
* otherwise: iff ``X(1..m**2)`` is almost p-periodic.

The generator word of the subsequence is always read at the original ``q``,
because ``X(qN)`` and ``X(pN)`` are different sequences in general.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field, replace
from math import gcd
from typing import Optional

from . import _backend
from .errors import DomainError, IndexOverflowError, PreconditionError, ToeplitzError
from .holeword import PartialWord, compose, expand
from .toeplitz import MAX_INDEX, ToeplitzSpec, check_index, fixed_prefix, is_almost_periodic, is_constant


class Verdict(str, enum.Enum):
    MEMBER = "Member"
    NOT_MEMBER = "NotMember"


class Reason(str, enum.Enum):
    P_NOT_DIVIDING_M_SQUARED = "PNotDividingMSquared"
    ALMOST_PERIODICITY_FAILS = "AlmostPeriodicityFails"


@dataclass(frozen=True)
class QReduction:
    """``q = m**k * h * p`` with ``gcd(h, m) == 1``, p built from primes of m, ``m ∤ p``."""

    q: int
    k: int
    h: int
    p: int

    def to_dict(self) -> dict:
        return {"k": self.k, "h": self.h, "p": self.p}


def reduce_q(q: int, m: int) -> QReduction:
    if q < 1:
        raise DomainError(f"q must be >= 1, got {q}")
    if m < 2:
        raise DomainError(f"modulus must be >= 2, got {m}")
    h = q
    while (g := gcd(h, m)) > 1:
        h //= g
    p, k = q // h, 0
    while p % m == 0:
        p //= m
        k += 1
    return QReduction(q, k, h, p)


def adic_exponent(q: int, m: int) -> Optional[int]:
    """Smallest ``s >= 0`` with ``q | m**s``, or None if no power of m works."""
    if reduce_q(q, m).h != 1:
        return None
    s, power = 0, 1
    while power % q:
        power *= m
        s += 1
    return s


@dataclass(frozen=True)
class UvSplit:
    U: PartialWord
    V: PartialWord
    s: int

    def to_dict(self) -> dict:
        return {"U": str(self.U), "V": str(self.V), "s": self.s}


@dataclass(frozen=True)
class QtdDecomposition:
    Q: PartialWord
    T: PartialWord
    D: PartialWord
    d: int
    q1: int
    m1: int
    t: int
    generator: str  # generator word of X(qN), the limit of D∘T∘Q

    def to_dict(self) -> dict:
        return {
            "Q": str(self.Q),
            "T": str(self.T),
            "D": str(self.D),
            "d": self.d,
            "q1": self.q1,
            "m1": self.m1,
            "t": self.t,
        }


@dataclass(frozen=True)
class Decision:
    """Verdict on whether ``X(qN)`` is a modulo-m Toeplitz fixed point."""

    m: int
    q: int
    verdict: Verdict
    reduction: QReduction
    reason: Optional[Reason] = None
    checked_length: Optional[int] = None
    witness: Optional[int] = None
    generator: Optional[str] = None
    constant_shortcut: bool = False
    uv: Optional[UvSplit] = field(default=None, compare=False)
    decomposition: Optional[QtdDecomposition] = field(default=None, compare=False)

    @property
    def is_member(self) -> bool:
        return self.verdict is Verdict.MEMBER

    def __bool__(self) -> bool:
        return self.is_member

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "q": self.q,
            "verdict": self.verdict.value,
            "reduction": self.reduction.to_dict(),
            "reason": self.reason.value if self.reason else None,
            "checked_length": self.checked_length,
            "witness": self.witness,
            "generator": self.generator,
            "constant_shortcut": self.constant_shortcut,
            "decomposition": self.decomposition.to_dict() if self.decomposition else None,
            "uv": self.uv.to_dict() if self.uv else None,
        }


def _subsequence_generator(spec: ToeplitzSpec, q: int) -> str:
    if q * (spec.m - 1) > MAX_INDEX:
        raise IndexOverflowError(f"q * (m - 1) = {q * (spec.m - 1)} exceeds 2**64-1")
    return _backend.lattice_extract(spec.generator, q, spec.m - 1)


def decide(spec: ToeplitzSpec, q: int, *, with_structure: bool = False) -> Decision:
    """Decide membership of ``X(qN)``; on success also synthesize its generator.

    With ``with_structure`` the decision also carries the U∘V split and the
    Q∘T∘D decomposition whenever they apply.
    """
    check_index(q, "q")
    m = spec.m
    red = reduce_q(q, m)
    p = red.p
    if is_constant(spec):
        decision = Decision(m, q, Verdict.MEMBER, red, generator=spec.generator, constant_shortcut=True)
    elif p == 1:
        decision = Decision(m, q, Verdict.MEMBER, red, generator=_subsequence_generator(spec, q))
    elif (m * m) % p:
        return Decision(m, q, Verdict.NOT_MEMBER, red, reason=Reason.P_NOT_DIVIDING_M_SQUARED)
    else:
        length = m if m % p == 0 else m * m
        report = is_almost_periodic(fixed_prefix(spec, length), p)
        if not report.periodic:
            return Decision(
                m, q, Verdict.NOT_MEMBER, red,
                reason=Reason.ALMOST_PERIODICITY_FAILS,
                checked_length=length,
                witness=report.witness,
            )
        decision = Decision(m, q, Verdict.MEMBER, red, generator=_subsequence_generator(spec, q))
    if with_structure:
        uv = qtd = None
        if q % m and adic_exponent(q, m) is not None:
            uv = _split(spec, q)
            if m % q and not decision.constant_shortcut:
                qtd = _qtd(spec, q, decision)
        decision = replace(decision, uv=uv, decomposition=qtd)
    return decision


@dataclass(frozen=True)
class SubsequenceReport:
    holds: bool
    decision: Decision
    mismatch: Optional[int] = None  # smallest j with Y(j) != X(qj)

    def __bool__(self) -> bool:
        return self.holds


def is_q_subsequence(x: ToeplitzSpec, y: ToeplitzSpec, q: int) -> SubsequenceReport:
    """Is ``Y`` the q-subsequence of ``X``? Compares generators once membership holds."""
    if x.m != y.m:
        raise PreconditionError(f"moduli differ: {x.m} != {y.m}", "modulus_mismatch")
    decision = decide(x, q)
    if not decision.is_member:
        return SubsequenceReport(False, decision)
    j = _backend.first_mismatch(decision.generator, y.generator)
    return SubsequenceReport(j == 0, decision, j or None)


def _split(spec: ToeplitzSpec, q: int) -> UvSplit:
    if q == 1:
        return UvSplit(PartialWord(), spec.partial_word, 1)
    s = adic_exponent(q, spec.m)
    u = PartialWord(fixed_prefix(spec, q - 1))
    v = PartialWord(_backend.lattice_extract(spec.generator, q, spec.m**s // q - 1))
    return UvSplit(u, v, s)


def split_uv(spec: ToeplitzSpec, q: int) -> UvSplit:
    """Write ``X(1..m^s-1)?`` as ``U ∘ V`` with U the first q-1 letters.

    ``V ∘ U`` then generates ``X(qN)``. For ``q = 1`` the split is
    ``"?" ∘ (W?)`` with ``s = 1``.
    """
    m = spec.m
    check_index(q, "q")
    if q % m == 0:
        raise PreconditionError(f"m = {m} divides q = {q}", "m_divides_q")
    if adic_exponent(q, m) is None:
        raise PreconditionError(f"q = {q} divides no power of m = {m}", "q_not_dividing_power_of_m")
    if not decide(spec, q).is_member:
        raise PreconditionError(f"X({q}N) is not a modulo-{m} Toeplitz fixed point", "not_member")
    return _split(spec, q)


def _qtd(spec: ToeplitzSpec, q: int, decision: Decision) -> QtdDecomposition:
    m = spec.m
    d = gcd(m, q)
    q1, m1 = q // d, m // d
    t = d // q1 - 1
    a = spec.generator[0]
    big_q = PartialWord(a * (q1 - 1))
    big_t = PartialWord(_backend.lattice_extract(spec.generator, q1, t))
    big_d = PartialWord(a * (m1 - 1))
    if compose(big_q, compose(big_t, big_d)) != spec.partial_word:
        raise ToeplitzError(f"Q∘T∘D does not reproduce {spec.generator}? for q = {q}")
    generator = expand(compose(big_d, compose(big_t, big_q)), m - 1)
    if generator != decision.generator:
        raise ToeplitzError(f"D∘T∘Q generates {generator}, expected {decision.generator} for q = {q}")
    return QtdDecomposition(big_q, big_t, big_d, d, q1, m1, t, generator)


def decompose_qtd(spec: ToeplitzSpec, q: int) -> QtdDecomposition:
    """Factor ``W?`` as ``Q ∘ T ∘ D`` for a member q with ``q ∤ m`` and ``m ∤ q``.

    ``Q = a^(q1-1)?``, ``T = X(q1) X(2 q1) ... X(t q1)?``, ``D = a^(m1-1)?``
    where ``a = X(1)``, ``d = gcd(m, q)``, ``q1 = q/d``, ``m1 = m/d`` and
    ``t = d/q1 - 1``. The subsequence is the limit of ``D ∘ T ∘ Q``.
    """
    m = spec.m
    check_index(q, "q")
    if is_constant(spec):
        raise PreconditionError("X is a constant word", "constant_word")
    if m % q == 0:
        raise PreconditionError(f"q = {q} divides m = {m}", "q_divides_m")
    if q % m == 0:
        raise PreconditionError(f"m = {m} divides q = {q}", "m_divides_q")
    if adic_exponent(q, m) is None:
        raise PreconditionError(f"q = {q} divides no power of m = {m}", "q_not_dividing_power_of_m")
    decision = decide(spec, q)
    if not decision.is_member:
        d = gcd(m, q)
        q1 = q // d
        proper = q1 < d and d % q1 == 0
        raise PreconditionError(
            f"X({q}N) is not a modulo-{m} Toeplitz fixed point "
            f"(d = {d}, q1 = {q1}, q1 {'is' if proper else 'is not'} a proper factor of d)",
            "not_member",
        )
    return _qtd(spec, q, decision)


def inverse_factor(q: int, m: int) -> int:
    """``m**s // q`` for the least s with ``q | m**s``; then ``X = Y(rN)`` when ``Y = X(qN)``."""
    s = adic_exponent(q, m)
    if s is None:
        raise DomainError(f"q = {q} has a prime factor not dividing m = {m}")
    return m**s // q


def _factorize(n: int) -> dict[int, int]:
    factors: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            factors[d] = factors.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        factors[n] = factors.get(n, 0) + 1
    return factors


def candidate_factors(m: int) -> list[int]:
    """Divisors of ``m**2`` not divisible by m, ascending."""
    divisors = [1]
    for prime, e in _factorize(m).items():
        divisors = [x * prime**i for x in divisors for i in range(2 * e + 1)]
    return sorted(p for p in divisors if p % m)


def enumerate_subsequences(spec: ToeplitzSpec) -> list[tuple[int, Decision]]:
    """Decide every candidate m-adic part; the members classify all lattice subsequences."""
    return [(p, decide(spec, p)) for p in candidate_factors(spec.m)]
