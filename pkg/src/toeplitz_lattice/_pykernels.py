"""Pure-Python kernels, used when the compiled extension is unavailable.

Every function here has a twin with the same signature in ``_kernels.pyx``.
Indices in arguments and results are 1-based; 0 means "no witness".
"""

from __future__ import annotations

from itertools import islice


def toeplitz_prefix(body: str, length: int) -> str:
    """First ``length`` letters of the fixed point of ``a -> body + a``."""
    if length <= 0:
        return ""
    r = len(body) + 1
    need = -(-length // r)
    prefix = body[0]
    # X(1..r*L) is the image of X(1..L) under the substitution.
    while len(prefix) < length:
        prefix = "".join(map(body.__add__, prefix[:need]))
    return prefix[:length]


def lattice_extract(body: str, q: int, count: int) -> str:
    """Letters X(q), X(2q), ..., X(count*q) by random access."""
    r = len(body) + 1
    out = []
    append = out.append
    n = 0
    for _ in range(count):
        n += q
        k = n
        while k % r == 0:
            k //= r
        append(body[k % r - 1])
    return "".join(out)


def almost_periodic_witness(word: str, q: int) -> int:
    for j in range(1, len(word) - q + 1):
        if j % q and word[j - 1] != word[j + q - 1]:
            return j
    return 0


def prefix_conditions(word: str, m: int) -> tuple[int, int]:
    n = len(word)
    for j in range(1, n // m + 1):
        if word[m * j - 1] != word[j - 1]:
            return 1, j
    j = almost_periodic_witness(word, m)
    if j:
        return 2, j
    return 0, 0


def compose_bodies(ubody: str, vbody: str) -> str:
    return "".join(map(ubody.__add__, vbody)) + ubody


def first_mismatch(a: str, b: str) -> int:
    n = min(len(a), len(b))
    if a[:n] == b[:n]:
        return 0
    lo, hi = 0, n
    # Bisect on prefix equality; each probe is a C-level compare.
    while hi - lo > 64:
        mid = (lo + hi) // 2
        if a[lo:mid] == b[lo:mid]:
            lo = mid
        else:
            hi = mid
    for i, (x, y) in enumerate(islice(zip(a, b), lo, hi), lo + 1):
        if x != y:
            return i
    return 0  # pragma: no cover
