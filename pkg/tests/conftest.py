import itertools

import pytest

from toeplitz_lattice import ToeplitzSpec

EXAMPLE_32 = ToeplitzSpec(12, "aabaaaaabaa")
EXAMPLE_33 = ToeplitzSpec(6, "aaaba")

# Worked examples, constants, every binary generator for m <= 5, and a few
# larger / wider-alphabet words.
CORPUS = [
    EXAMPLE_32,
    EXAMPLE_33,
    ToeplitzSpec(2, "a"),
    ToeplitzSpec(12, "aaaaaaaaaaa"),
    *(ToeplitzSpec(m, "".join(w)) for m in range(2, 6) for w in itertools.product("ab", repeat=m - 1)),
    ToeplitzSpec(6, "abbab"),
    ToeplitzSpec(8, "abaabab"),
    ToeplitzSpec(9, "aabaabaa"),
    ToeplitzSpec(10, "abcabcabc"),
    ToeplitzSpec(12, "abaaabaaaba"),
    ToeplitzSpec(4, "αβα"),
]


def corpus_id(spec):
    return f"m{spec.m}-{spec.generator}"


@pytest.fixture(params=CORPUS, ids=corpus_id)
def spec(request):
    return request.param


# -- independent reference implementations, used only as test oracles -------


def naive_compose(u: str, v: str) -> str:
    """Product formula, literally: prod_j (u_1..u_{r-1} v_j) with v_s = '?'."""
    assert u.endswith("?") and v.endswith("?")
    out = []
    for vj in v:
        out.extend(u[:-1])
        out.append(vj)
    return "".join(out)


def naive_fixed_prefix(m: int, w: str, length: int) -> str:
    """Iterate sigma: a -> W a letter by letter starting from w_1."""
    x = w[0]
    while len(x) < length:
        x = "".join(w + c for c in x)
    return x[:length]


def naive_almost_periodic_witness(word: str, q: int):
    for j in range(1, len(word) + 1):
        if j + q <= len(word) and j % q != 0 and word[j - 1] != word[j + q - 1]:
            return j
    return None


# -- acceptance reporting -----------------------------------------------------

ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
