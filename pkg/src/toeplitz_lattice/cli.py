"""Command-line interface.

Exit status: 0 on success (Member / check passed), 1 on a negative answer
(NotMember / check failed / nothing to decompose), 2 on usage or validation
errors. ``--json`` prints exactly one JSON document per invocation.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional, Sequence

from . import __version__
from .errors import PreconditionError, ToeplitzError
from .holeword import PartialWord, compose_all
from .lattice import decide, decompose_qtd, enumerate_subsequences, split_uv
from .oracle import cross_check, default_depth
from .toeplitz import ToeplitzSpec, access, fixed_prefix

DEPTH_ENV = "TOEPLITZ_DEPTH"


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected an integer >= 1, got {value}")
    return value


def _non_negative_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected an integer, got {text!r}") from None
    if value < 0:
        raise argparse.ArgumentTypeError(f"expected an integer >= 0, got {value}")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="emit one machine-readable JSON document")

    spec_args = argparse.ArgumentParser(add_help=False)
    spec_args.add_argument("--m", type=int, required=True, help="modulus m >= 2")
    spec_args.add_argument("--word", required=True, help="generator word W with |W| = m - 1")

    parser = argparse.ArgumentParser(
        prog="toeplitz-lattice",
        description="Lattice subsequences of modulo-m Toeplitz fixed points.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("generate", parents=[common, spec_args], help="print X(1..L)")
    p.add_argument("--length", type=_non_negative_int, required=True)

    p = sub.add_parser("access", parents=[common, spec_args], help="print X(N)")
    p.add_argument("--index", type=_positive_int, required=True)

    p = sub.add_parser("decide", parents=[common, spec_args], help="is X(qN) a modulo-m Toeplitz fixed point?")
    p.add_argument("--q", type=_positive_int, required=True)

    sub.add_parser("enumerate", parents=[common, spec_args], help="classify every candidate m-adic part p")

    p = sub.add_parser("decompose", parents=[common, spec_args], help="U∘V split and Q∘T∘D decomposition")
    p.add_argument("--q", type=_positive_int, required=True)

    p = sub.add_parser("verify", parents=[common, spec_args], help="cross-check decide against the oracle")
    p.add_argument("--q", type=_positive_int, required=True)
    p.add_argument("--depth", type=_positive_int, default=None, help=f"oracle depth (env {DEPTH_ENV})")

    p = sub.add_parser("compose", parents=[common], help="left-associated ∘-product of partial words")
    p.add_argument("words", nargs="+", metavar="WORD", help="hole-terminated word, e.g. 'aa?' (or aa.)")
    return parser


def _emit(args, doc: dict, text: str) -> None:
    if args.json:
        print(json.dumps(doc, ensure_ascii=False))
    else:
        print(text)


def _spec(args) -> ToeplitzSpec:
    return ToeplitzSpec(args.m, args.word)


def _describe_decision(spec: ToeplitzSpec, doc: dict) -> str:
    red = doc["reduction"]
    lines = [
        f"X({doc['q']}N) for m={spec.m}, W={spec.generator}: {doc['verdict']}",
        f"  reduction: q = {spec.m}^{red['k']} * {red['h']} * {red['p']}",
    ]
    if doc["constant_shortcut"]:
        lines.append("  constant word: every lattice subsequence equals X")
    if doc["generator"] is not None:
        lines.append(f"  generator: {doc['generator']}")
    if doc["reason"] == "PNotDividingMSquared":
        lines.append(f"  reason: p = {red['p']} does not divide m^2 = {spec.m ** 2}")
    elif doc["reason"] == "AlmostPeriodicityFails":
        j, p = doc["witness"], red["p"]
        lines.append(
            f"  reason: X(1..{doc['checked_length']}) is not almost {p}-periodic "
            f"(X({j}) != X({j + p}))"
        )
    if doc["uv"]:
        uv = doc["uv"]
        lines.append(f"  U∘V (s={uv['s']}): {uv['U']} ∘ {uv['V']}")
    if doc["decomposition"]:
        qtd = doc["decomposition"]
        lines.append(f"  Q∘T∘D: {qtd['Q']} ∘ {qtd['T']} ∘ {qtd['D']}")
    return "\n".join(lines)


def cmd_generate(args) -> int:
    spec = _spec(args)
    prefix = fixed_prefix(spec, args.length)
    _emit(args, {"command": "generate", "m": spec.m, "word": spec.generator, "length": args.length, "prefix": prefix}, prefix)
    return 0


def cmd_access(args) -> int:
    spec = _spec(args)
    letter = access(spec, args.index)
    _emit(args, {"command": "access", "m": spec.m, "word": spec.generator, "index": args.index, "letter": letter}, letter)
    return 0


def cmd_decide(args) -> int:
    spec = _spec(args)
    decision = decide(spec, args.q, with_structure=True)
    doc = decision.to_dict()
    _emit(args, {"command": "decide", "word": spec.generator, **doc}, _describe_decision(spec, doc))
    return 0 if decision.is_member else 1


def cmd_enumerate(args) -> int:
    spec = _spec(args)
    rows = enumerate_subsequences(spec)
    members = [p for p, d in rows if d.is_member]
    lines = [f"m={spec.m}, W={spec.generator}", f"{'p':>8}  {'verdict':<10} generator / reason"]
    for p, d in rows:
        detail = d.generator if d.is_member else d.reason.value
        if d.witness is not None:
            detail += f" (j={d.witness})"
        lines.append(f"{p:>8}  {d.verdict.value:<10} {detail}")
    lines.append(f"members: {members}")
    doc = {
        "command": "enumerate",
        "m": spec.m,
        "word": spec.generator,
        "members": members,
        "rows": [{"p": p, **d.to_dict()} for p, d in rows],
    }
    _emit(args, doc, "\n".join(lines))
    return 0


def cmd_decompose(args) -> int:
    spec = _spec(args)
    doc = {"command": "decompose", "m": spec.m, "word": spec.generator, "q": args.q,
           "uv": None, "uv_error": None, "decomposition": None, "decomposition_error": None}
    lines = [f"m={spec.m}, W={spec.generator}, q={args.q}"]
    try:
        uv = split_uv(spec, args.q)
        doc["uv"] = uv.to_dict()
        lines.append(f"U = {uv.U}  V = {uv.V}  (s={uv.s})")
        lines.append(f"U∘V = {uv.U @ uv.V}")
        lines.append(f"V∘U = {uv.V @ uv.U}")
    except PreconditionError as exc:
        doc["uv_error"] = {"condition": exc.condition, "message": str(exc)}
        lines.append(f"U∘V split not applicable: {exc}")
    try:
        qtd = decompose_qtd(spec, args.q)
        doc["decomposition"] = {**qtd.to_dict(), "generator": qtd.generator}
        lines.append(f"Q = {qtd.Q}  T = {qtd.T}  D = {qtd.D}  (d={qtd.d}, q1={qtd.q1}, m1={qtd.m1}, t={qtd.t})")
        lines.append(f"X({args.q}N) = [{qtd.D} ∘ {qtd.T} ∘ {qtd.Q}]^(∞), generator {qtd.generator}")
    except PreconditionError as exc:
        doc["decomposition_error"] = {"condition": exc.condition, "message": str(exc)}
        lines.append(f"Q∘T∘D decomposition not applicable: {exc}")
    _emit(args, doc, "\n".join(lines))
    return 0 if doc["uv"] or doc["decomposition"] else 1


def _resolve_depth(args, m: int, q: int) -> int:
    if args.depth is not None:
        return args.depth
    env = os.environ.get(DEPTH_ENV)
    if env:
        try:
            depth = int(env)
        except ValueError:
            raise ToeplitzError(f"{DEPTH_ENV} must be a positive integer, got {env!r}") from None
        if depth < 1:
            raise ToeplitzError(f"{DEPTH_ENV} must be a positive integer, got {env!r}")
        return depth
    return default_depth(m, q)


def cmd_verify(args) -> int:
    spec = _spec(args)
    depth = _resolve_depth(args, spec.m, args.q)
    report = cross_check(spec, args.q, decide(spec, args.q), depth)
    doc = {"command": "verify", "word": spec.generator, **report.to_dict()}
    text = f"{'PASS' if report.passed else 'FAIL'}: {report.message}"
    _emit(args, doc, text)
    return 0 if report.passed else 1


def cmd_compose(args) -> int:
    words = [PartialWord.parse(w) for w in args.words]
    result = str(compose_all(words))
    _emit(args, {"command": "compose", "operands": [str(w) for w in words], "result": result}, result)
    return 0


COMMANDS = {
    "generate": cmd_generate,
    "access": cmd_access,
    "decide": cmd_decide,
    "enumerate": cmd_enumerate,
    "decompose": cmd_decompose,
    "verify": cmd_verify,
    "compose": cmd_compose,
}


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except ToeplitzError as exc:
        condition = getattr(exc, "condition", type(exc).__name__)
        if args.json:
            print(json.dumps({"command": args.command, "error": str(exc), "condition": condition}))
        print(f"toeplitz-lattice {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
