"""JSON Schemas (draft 2020-12) for the ``--json`` output of every CLI subcommand."""

_int = {"type": "integer"}
_opt_int = {"type": ["integer", "null"]}
_str = {"type": "string"}
_opt_str = {"type": ["string", "null"]}
_partial = {"type": "string", "pattern": r"^[^?]*\?$"}

REDUCTION = {
    "type": "object",
    "required": ["k", "h", "p"],
    "properties": {"k": _int, "h": _int, "p": _int},
    "additionalProperties": False,
}

UV = {
    "type": ["object", "null"],
    "required": ["U", "V", "s"],
    "properties": {"U": _partial, "V": _partial, "s": _int},
}

DECOMPOSITION = {
    "type": ["object", "null"],
    "required": ["Q", "T", "D", "d", "q1", "m1", "t"],
    "properties": {
        "Q": _partial, "T": _partial, "D": _partial,
        "d": _int, "q1": _int, "m1": _int, "t": _int,
        "generator": _str,
    },
}

DECISION = {
    "type": "object",
    "required": [
        "m", "q", "verdict", "reduction", "reason", "checked_length", "witness",
        "generator", "constant_shortcut", "decomposition", "uv",
    ],
    "properties": {
        "m": _int,
        "q": _int,
        "verdict": {"enum": ["Member", "NotMember"]},
        "reduction": REDUCTION,
        "reason": {"enum": ["PNotDividingMSquared", "AlmostPeriodicityFails", None]},
        "checked_length": _opt_int,
        "witness": _opt_int,
        "generator": _opt_str,
        "constant_shortcut": {"type": "boolean"},
        "decomposition": DECOMPOSITION,
        "uv": UV,
    },
}

_failure = {
    "type": ["object", "null"],
    "required": ["condition", "message"],
    "properties": {"condition": _str, "message": _str},
}


def _command(name: str, required: list, properties: dict, base: dict = None) -> dict:
    schema = {
        "$schema": "https://json-schema.org/draft/2020-12/schema",
        "type": "object",
        "required": ["command", *required],
        "properties": {"command": {"const": name}, **properties},
    }
    if base is not None:
        schema = {**schema, "allOf": [base]}
    return schema


SCHEMAS = {
    "generate": _command("generate", ["m", "word", "length", "prefix"],
                         {"m": _int, "word": _str, "length": _int, "prefix": _str}),
    "access": _command("access", ["m", "word", "index", "letter"],
                       {"m": _int, "word": _str, "index": _int, "letter": {"type": "string", "minLength": 1, "maxLength": 1}}),
    "decide": _command("decide", ["word"], {"word": _str}, DECISION),
    "enumerate": _command("enumerate", ["m", "word", "members", "rows"], {
        "m": _int,
        "word": _str,
        "members": {"type": "array", "items": _int},
        "rows": {"type": "array", "items": {"allOf": [DECISION], "required": ["p"], "properties": {"p": _int}}},
    }),
    "decompose": _command("decompose", ["m", "word", "q", "uv", "uv_error", "decomposition", "decomposition_error"], {
        "m": _int, "word": _str, "q": _int,
        "uv": UV, "uv_error": _failure,
        "decomposition": DECOMPOSITION, "decomposition_error": _failure,
    }),
    "verify": _command("verify", ["word", "outcome", "rejected_at", "compared_depth", "extracted_generator", "passed", "message"], {
        "word": _str,
        "outcome": {"enum": ["ConsistentUpTo", "RejectedAt"]},
        "rejected_at": _opt_int,
        "compared_depth": _int,
        "extracted_generator": _str,
        "checked_q": _int,
        "passed": {"type": "boolean"},
        "message": _str,
    }, DECISION),
    "compose": _command("compose", ["operands", "result"],
                        {"operands": {"type": "array", "items": _partial}, "result": _partial}),
}

ERROR = {
    "$schema": "https://json-schema.org/draft/2020-12/schema",
    "type": "object",
    "required": ["command", "error", "condition"],
    "properties": {"command": _str, "error": _str, "condition": _str},
}
