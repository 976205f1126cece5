"""Exit criteria. Each test records one PASS/FAIL line, shown in the terminal summary."""

import itertools
import json
import random
import time
from contextlib import contextmanager
from math import gcd

from conftest import ACCEPTANCE_LINES, CORPUS, EXAMPLE_32, EXAMPLE_33
from toeplitz_lattice import (
    PartialWord,
    ToeplitzSpec,
    access,
    brute_force_decide,
    check_prefix_conditions,
    compose,
    compose_all,
    cross_check,
    decide,
    decompose_qtd,
    enumerate_subsequences,
    expand,
    fixed_prefix,
    inverse_factor,
    is_constant,
    split_uv,
)
from toeplitz_lattice.cli import main
from toeplitz_lattice.lattice import adic_exponent


@contextmanager
def criterion(number, title):
    start = time.perf_counter()
    try:
        yield
    except BaseException as exc:
        detail = str(exc).splitlines()[0] if str(exc) else type(exc).__name__
        line = f"[criterion {number}] FAIL  {title}: {detail[:300]}"
        ACCEPTANCE_LINES.append(line)
        print(line)
        raise
    line = f"[criterion {number}] PASS  {title} ({time.perf_counter() - start:.2f}s)"
    ACCEPTANCE_LINES.append(line)
    print(line)


def cli_json(capsys, *argv):
    code = main([*argv, "--json"])
    return code, json.loads(capsys.readouterr().out)


def test_criterion_1_example_32(capsys):
    with criterion(1, "m=12, W=aabaaaaabaa: members {1,3,6,18}, Q∘T∘D for q=18, generators of X(3N), X(6N), X(18N)"):
        start = time.perf_counter()
        args = ["--m", "12", "--word", "aabaaaaabaa"]
        _, doc = cli_json(capsys, "enumerate", *args)
        assert doc["members"] == [1, 3, 6, 18]
        assert [p for p, d in enumerate_subsequences(EXAMPLE_32) if d.is_member] == [1, 3, 6, 18]

        _, doc = cli_json(capsys, "decompose", *args, "--q", "18")
        qtd = doc["decomposition"]
        assert (qtd["Q"], qtd["T"], qtd["D"]) == ("aa?", "b?", "a?")
        lib = decompose_qtd(EXAMPLE_32, 18)
        assert (str(lib.Q), str(lib.T), str(lib.D)) == ("aa?", "b?", "a?")
        assert str(compose_all(["aa?", "b?", "a?"])) == "aabaaaaabaa?"

        for q, factors in [(3, ["b?", "a?", "aa?"]), (6, ["a?", "aa?", "b?"]), (18, ["a?", "b?", "aa?"])]:
            assert decide(EXAMPLE_32, q).generator == expand(compose_all(factors), 11)
        elapsed = time.perf_counter() - start
        assert elapsed < 1.0, f"took {elapsed:.3f}s"


def test_criterion_2_example_33():
    with criterion(2, "m=6, W=aaaba: members {1,2}; X(5N) gen abaaa; X(2N) gen equals oracle at depth 1296"):
        assert [p for p, d in enumerate_subsequences(EXAMPLE_33) if d.is_member] == [1, 2]
        assert decide(EXAMPLE_33, 5).generator == "abaaa"
        oracle = brute_force_decide(EXAMPLE_33, 2, 1296)
        assert oracle.consistent
        assert decide(EXAMPLE_33, 2).generator == oracle.extracted_generator
        # The printed "ababa" is not what the sequence gives; see README.
        assert oracle.extracted_generator == "abaab"


def test_criterion_3_decide_oracle_sweep():
    with criterion(3, "decide/oracle sweep, m in 2..8, all binary words, q <= m^3, depth m^4"):
        start = time.perf_counter()
        disagreements = []
        checks = 0
        for m in range(2, 9):
            for w in itertools.product("ab", repeat=m - 1):
                spec = ToeplitzSpec(m, "".join(w))
                for q in range(1, m**3 + 1):
                    report = cross_check(spec, q, decide(spec, q), m**4)
                    checks += 1
                    if not report.passed:
                        disagreements.append(f"m={m} W={spec.generator} q={q}")
        elapsed = time.perf_counter() - start
        assert elapsed < 300, f"sweep took {elapsed:.1f}s"
        assert not disagreements, (
            f"{len(disagreements)} of {checks} checks disagree at depth m^4 "
            f"(all are NotMember verdicts the oracle only rejects deeper): {', '.join(disagreements)}"
        )


def test_criterion_4_algebraic_laws():
    with criterion(4, "associativity (2000 random triples, |.| <= 8), identity '?', length law"):
        rng = random.Random(20261017)

        def word():
            return PartialWord("".join(rng.choice("ab") for _ in range(rng.randint(0, 7))))

        for _ in range(2000):
            u, v, w = word(), word(), word()
            assert compose(compose(u, v), w) == compose(u, compose(v, w))
            assert len(compose(u, v)) == len(u) * len(v)
            assert compose("?", u) == u and compose(u, "?") == u


def test_criterion_5_prefix_invariants():
    with criterion(5, "prefix conditions on fixed_prefix(m^3); access == fixed_prefix for n <= 10^5"):
        for spec in CORPUS:
            assert check_prefix_conditions(fixed_prefix(spec, spec.m**3), spec.m), spec
            prefix = fixed_prefix(spec, 10**5)
            bad = next((n for n in range(1, 10**5 + 1) if access(spec, n) != prefix[n - 1]), None)
            assert bad is None, f"{spec} disagrees at n={bad}"


def test_criterion_6_coprime_and_m_power_invariance():
    with criterion(6, "decide(h*q) verdict == decide(q) for gcd(h,m)=1, h<=20, q<=m^3; decide(m*q) == decide(q)"):
        for spec in CORPUS:
            m = spec.m
            for q in range(1, m**3 + 1):
                base = decide(spec, q)
                for h in range(2, 21):
                    if gcd(h, m) == 1:
                        assert decide(spec, h * q).verdict is base.verdict, (spec, q, h)
                up = decide(spec, m * q)
                assert (up.verdict, up.generator) == (base.verdict, base.generator), (spec, q)


def test_criterion_7_inverse_relation():
    with criterion(7, "Y(rN) = X with r = inverse_factor(p, m), j <= 10^4"):
        for spec in CORPUS:
            x = fixed_prefix(spec, 10**4)
            for p, d in enumerate_subsequences(spec):
                if not d.is_member:
                    continue
                r = inverse_factor(p, spec.m)
                y = ToeplitzSpec(spec.m, d.generator)
                bad = next((j for j in range(1, 10**4 + 1) if access(y, r * j) != x[j - 1]), None)
                assert bad is None, f"{spec} p={p} r={r} fails at j={bad}"


def _identity_specs():
    yield from CORPUS
    for m in (*range(2, 10), 12):
        for w in itertools.product("ab", repeat=m - 1):
            yield ToeplitzSpec(m, "".join(w))
    rng = random.Random(8)
    for m in (18, 20, 24):
        for _ in range(200):
            yield ToeplitzSpec(m, "".join(rng.choice("ab") for _ in range(m - 1)))
    # Words built as Q∘T∘D, so the decomposition has something to find.
    for m in (12, 18, 20, 24, 36):
        for q in range(2, m * m + 1):
            d = gcd(m, q)
            q1 = q // d
            if (m * m) % q or m % q == 0 or q % m == 0 or not (q1 < d and d % q1 == 0):
                continue
            t = d // q1 - 1
            for body in itertools.islice(itertools.product("ab", repeat=t), 64):
                w = compose_all(["a" * (q1 - 1) + "?", "".join(body) + "?", "a" * (m // d - 1) + "?"])
                yield ToeplitzSpec(m, w.body)


def test_criterion_8_split_and_qtd_identities():
    with criterion(8, "U∘V reproduces the m^s prefix; Q∘T∘D reproduces W?; D∘T∘Q generates X(qN)"):
        checked_uv = checked_qtd = 0
        eligible = {}
        for spec in _identity_specs():
            m = spec.m
            if m not in eligible:
                eligible[m] = [q for q in range(1, m**3 + 1) if q % m and adic_exponent(q, m) is not None]
            for q in eligible[m]:
                if is_constant(spec) and (m * m) % q:
                    continue  # every q is a member; the m^s prefix would be huge
                d = decide(spec, q)
                if not d.is_member:
                    continue
                uv = split_uv(spec, q)
                assert str(compose(uv.U, uv.V)) == fixed_prefix(spec, m**uv.s - 1) + "?", (spec, q)
                assert expand(compose(uv.V, uv.U), m - 1) == d.generator, (spec, q)
                checked_uv += 1
                if m % q and not is_constant(spec):
                    qtd = decompose_qtd(spec, q)
                    assert compose(qtd.Q, compose(qtd.T, qtd.D)) == spec.partial_word, (spec, q)
                    assert expand(compose(qtd.D, compose(qtd.T, qtd.Q)), m - 1) == d.generator, (spec, q)
                    checked_qtd += 1
        print(f"U∘V identities checked: {checked_uv}, Q∘T∘D identities checked: {checked_qtd}")
        assert checked_uv > 1000 and checked_qtd > 100, (checked_uv, checked_qtd)


def test_criterion_9_performance():
    with criterion(9, "access(10^18) < 1 ms; fixed_prefix(10^7) < 2 s"):
        n = 10**18
        best = min(_timed(access, EXAMPLE_32, n) for _ in range(20))
        assert best < 1e-3, f"access took {best * 1e3:.3f} ms"
        steps, k = 0, n
        while k % 12 == 0:
            k //= 12
            steps += 1
        assert steps <= 17  # log_12(10^18) < 17

        elapsed = _timed(fixed_prefix, EXAMPLE_32, 10**7)
        assert elapsed < 2.0, f"fixed_prefix(10^7) took {elapsed:.2f}s"


def _timed(fn, *args):
    start = time.perf_counter()
    fn(*args)
    return time.perf_counter() - start
