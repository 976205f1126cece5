"""Lattice subsequences of modulo-m Toeplitz fixed points."""

from ._backend import BACKEND
from .errors import (
    DomainError,
    IndexOverflowError,
    InvalidSpecError,
    InvalidWordError,
    PreconditionError,
    StreamExhaustedError,
    ToeplitzError,
)
from .holeword import PartialWord, compose, compose_all, compose_stream, expand, iterate, limit_stream
from .lattice import (
    Decision,
    QReduction,
    QtdDecomposition,
    Reason,
    UvSplit,
    Verdict,
    candidate_factors,
    decide,
    decompose_qtd,
    enumerate_subsequences,
    inverse_factor,
    is_q_subsequence,
    reduce_q,
    split_uv,
)
from .oracle import OracleVerdict, brute_force_decide, cross_check, default_depth
from .toeplitz import (
    PeriodicityReport,
    ToeplitzSpec,
    access,
    check_prefix_conditions,
    fixed_prefix,
    is_almost_periodic,
    is_constant,
    iter_fixed_point,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Decision",
    "DomainError",
    "IndexOverflowError",
    "InvalidSpecError",
    "InvalidWordError",
    "OracleVerdict",
    "PartialWord",
    "PeriodicityReport",
    "PreconditionError",
    "QReduction",
    "QtdDecomposition",
    "Reason",
    "StreamExhaustedError",
    "ToeplitzError",
    "ToeplitzSpec",
    "UvSplit",
    "Verdict",
    "access",
    "brute_force_decide",
    "candidate_factors",
    "check_prefix_conditions",
    "compose",
    "compose_all",
    "compose_stream",
    "cross_check",
    "decide",
    "decompose_qtd",
    "default_depth",
    "enumerate_subsequences",
    "expand",
    "fixed_prefix",
    "inverse_factor",
    "is_almost_periodic",
    "is_constant",
    "is_q_subsequence",
    "iter_fixed_point",
    "iterate",
    "limit_stream",
    "reduce_q",
    "split_uv",
]
