"""Brute-force falsifier for membership verdicts.

The oracle never consults the decision rules. It extracts
``Y(j) = X(qj)`` directly, takes ``V = Y(1..m-1)`` as the only possible
generator, and compares Y with the fixed point of V letter by letter. A
mismatch is a proof of non-membership; agreement up to ``depth`` is bounded
evidence only.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from . import _backend
from .errors import IndexOverflowError, PreconditionError
from .lattice import Decision, adic_exponent, reduce_q
from .toeplitz import MAX_INDEX, ToeplitzSpec, check_index

CONSISTENT = "ConsistentUpTo"
REJECTED = "RejectedAt"


MAX_DEFAULT_DEPTH = 2**24


def default_depth(m: int, q: Optional[int] = None) -> int:
    """``max(m**4, 4096)``, raised to ``m**2 * m**s / p`` when q is given.

    Here p is the m-adic part of q and s the least exponent with
    ``p | m**s``. Rejections for p composed of only some of m's primes hide
    until j supplies the missing prime powers, far beyond ``m**4``
    (m = 6, q = 128 first fails at j = 10935). The q-aware term is capped at
    ``MAX_DEFAULT_DEPTH``.
    """
    depth = max(m**4, 4096)
    if q is not None:
        p = reduce_q(q, m).p
        s = adic_exponent(p, m)
        depth = max(depth, min(m * m * (m**s // p), MAX_DEFAULT_DEPTH))
        depth = min(depth, MAX_INDEX // q)
    return depth


@dataclass(frozen=True)
class OracleVerdict:
    outcome: str
    compared_depth: int
    extracted_generator: str
    rejected_at: Optional[int] = None

    @property
    def consistent(self) -> bool:
        return self.outcome == CONSISTENT

    def to_dict(self) -> dict:
        return {
            "outcome": self.outcome,
            "rejected_at": self.rejected_at,
            "compared_depth": self.compared_depth,
            "extracted_generator": self.extracted_generator,
        }


def brute_force_decide(spec: ToeplitzSpec, q: int, depth: Optional[int] = None) -> OracleVerdict:
    m = spec.m
    check_index(q, "q")
    if depth is None:
        depth = default_depth(m, q)
    if depth < m * m:
        raise PreconditionError(f"depth {depth} is below m**2 = {m * m}", "depth_too_small")
    if q * depth > MAX_INDEX:
        raise IndexOverflowError(f"q * depth = {q * depth} exceeds 2**64-1")
    extracted = _backend.lattice_extract(spec.generator, q, depth)
    generator = extracted[: m - 1]
    regenerated = _backend.toeplitz_prefix(generator, depth)
    j = _backend.first_mismatch(extracted, regenerated)
    if j:
        return OracleVerdict(REJECTED, depth, generator, j)
    return OracleVerdict(CONSISTENT, depth, generator)


@dataclass(frozen=True)
class CrossCheckReport:
    passed: bool
    q: int
    decision: Decision
    oracle: OracleVerdict
    message: str

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict:
        doc = self.decision.to_dict()
        doc.update(self.oracle.to_dict())
        doc["checked_q"] = self.q
        doc["passed"] = self.passed
        doc["message"] = self.message
        return doc


def cross_check(spec: ToeplitzSpec, q: int, decision: Decision, depth: Optional[int] = None) -> CrossCheckReport:
    """Compare a decision for ``q`` against the oracle at ``depth``."""
    verdict = brute_force_decide(spec, q, depth)
    problems = []
    if decision.q != q:
        problems.append(f"decision was made for q = {decision.q}, checked against q = {q}")
    if decision.is_member:
        if not verdict.consistent:
            problems.append(f"decision says Member but the oracle rejects at j = {verdict.rejected_at}")
        elif verdict.extracted_generator != decision.generator:
            problems.append(
                f"generator {decision.generator} differs from extracted {verdict.extracted_generator}"
            )
    elif verdict.consistent:
        problems.append(f"decision says NotMember but the oracle is consistent up to {verdict.compared_depth}")
    if problems:
        return CrossCheckReport(False, q, decision, verdict, "; ".join(problems))
    if verdict.consistent:
        message = f"agree: Member, consistent up to depth {verdict.compared_depth} (bounded evidence)"
    else:
        message = f"agree: NotMember, oracle mismatch at j = {verdict.rejected_at}"
    return CrossCheckReport(True, q, decision, verdict, message)
