"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 5] [--quick]
"""

import argparse
import itertools
import time

from toeplitz_lattice import _pykernels

try:
    from toeplitz_lattice import _kernels
except ImportError:
    _kernels = None

BODY = "aabaaaaabaa"


def best_of(fn, repeat):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        times.append(time.perf_counter() - start)
    return min(times)


def oracle_sweep(k, m_max):
    # A trimmed copy of the oracle loop, written against one kernel module.
    for m in range(2, m_max + 1):
        for w in itertools.product("ab", repeat=m - 1):
            body = "".join(w)
            for q in range(1, m**2 + 1):
                y = k.lattice_extract(body, q, m**3)
                k.first_mismatch(y, k.toeplitz_prefix(y[: m - 1], m**3))


def cases(quick):
    n = 10**6 if quick else 10**7
    word = _pykernels.toeplitz_prefix(BODY, 10**6)
    periodic = "ab" * 500_000  # no witness, so the scan runs to the end
    return [
        (f"toeplitz_prefix n={n:.0e}", lambda k: k.toeplitz_prefix(BODY, n)),
        ("lattice_extract q=18 count=1e5", lambda k: k.lattice_extract(BODY, 18, 10**5)),
        ("almost_periodic_witness 1e6 q=2", lambda k: k.almost_periodic_witness(periodic, 2)),
        ("prefix_conditions 1e6 m=12", lambda k: k.prefix_conditions(word, 12)),
        ("compose_bodies 300x300", lambda k: k.compose_bodies(word[:300], word[300:600])),
        ("first_mismatch equal 1e6", lambda k: k.first_mismatch(word, word[:-1] + word[-1])),
        ("oracle sweep m<=6, q<=m^2", lambda k: oracle_sweep(k, 6)),
    ]


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--quick", action="store_true", help="smaller inputs")
    args = parser.parse_args(argv)

    if _kernels is None:
        print("compiled extension not built; only the fallback is timed")
    print(f"{'kernel':<36}{'python (ms)':>14}{'cython (ms)':>14}{'speedup':>10}")
    for name, fn in cases(args.quick):
        py = best_of(lambda: fn(_pykernels), args.repeat)
        if _kernels is None:
            print(f"{name:<36}{py * 1e3:>14.2f}{'-':>14}{'-':>10}")
            continue
        assert fn(_kernels) == fn(_pykernels), name
        cy = best_of(lambda: fn(_kernels), args.repeat)
        print(f"{name:<36}{py * 1e3:>14.2f}{cy * 1e3:>14.2f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
