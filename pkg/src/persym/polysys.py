"""Direct counting side of the rank/solution-count bridge.

Polynomials over GF(2) are plain ints: bit ``d`` is the coefficient of
``T**d``.  Degree bounds are fixed at each use site (``Y`` has degree at most
``k-1``, each ``U`` at most 1).
"""

from __future__ import annotations

from itertools import product

import numpy as np
from numba import njit

from persym.model import ParamTuple

GF2Poly = int

COUNT_GUARD_BITS = 32
EXPSUM_GUARD_BITS = 24


def clmul(a: GF2Poly, b: GF2Poly) -> GF2Poly:
    """Carry-less product of two GF(2)[T] polynomials."""
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


def character(t_word: int, poly: GF2Poly) -> int:
    """E(t * poly) for t = sum_{i>=1} alpha_i T^-i, with bit i-1 of t_word = alpha_i.

    The T^-1 coefficient of t * poly is sum_d poly_d * alpha_{d+1}, the
    parity of ``t_word & poly``; t_word must carry at least deg(poly)+1 bits.
    """
    return -1 if bin(t_word & poly).count("1") & 1 else 1


def exp_sum(p: ParamTuple) -> int:
    """The character sum over Y (deg <= k-1) and U_1..U_n (deg <= 1).

    Equals 2**(2n + k - rank) of the matrix built from ``p``.
    """
    n, k = p.n, p.k
    if k + 2 * n > EXPSUM_GUARD_BITS:
        raise ValueError(f"2^k * 4^n = 2^{k + 2 * n} exceeds the 2^{EXPSUM_GUARD_BITS} guard")
    words = [p.block_word(j) for j in range(n)]
    total = 0
    for y in range(1 << k):
        term = 1
        for w in words:
            inner = sum(character(w, clmul(y, u)) for u in range(4))
            if inner == 0:
                term = 0
                break
            term *= inner
        total += term
    return total


@njit(nogil=True, cache=True)
def _clmul_nb(a, b):
    out = 0
    while b:
        if b & 1:
            out ^= a
        a <<= 1
        b >>= 1
    return out


@njit(nogil=True, cache=True)
def _count_kernel(n, k, q):
    # Walks every tuple (Y_1..Y_q, U_j^(i)) through one flat counter and
    # tests all n equations; nothing is factored out.
    ybits = k * q
    ubits = 2 * n * q
    ymask = (1 << k) - 1
    ys = np.empty(q, np.int64)
    count = 0
    for yi in range(1 << ybits):
        for i in range(q):
            ys[i] = (yi >> (i * k)) & ymask
        for ui in range(1 << ubits):
            ok = True
            for j in range(n):
                acc = 0
                for i in range(q):
                    u = (ui >> (2 * (i * n + j))) & 3
                    acc ^= _clmul_nb(ys[i], u)
                if acc != 0:
                    ok = False
                    break
            if ok:
                count += 1
    return count


def _check_count_guard(n: int, k: int, q: int) -> None:
    if n < 1 or k < 1 or q < 1:
        raise ValueError("need n, k, q >= 1")
    bits = (k + 2 * n) * q
    if bits > COUNT_GUARD_BITS:
        raise ValueError(f"(2^k * 4^n)^q = 2^{bits} exceeds the 2^{COUNT_GUARD_BITS} guard")


def count_solutions(n: int, k: int, q: int) -> int:
    """Number of tuples with sum_i Y_i U_j^(i) = 0 for j = 1..n."""
    _check_count_guard(n, k, q)
    return int(_count_kernel(n, k, q))


def count_solutions_reference(n: int, k: int, q: int) -> int:
    """Pure-Python version of ``count_solutions`` for small cases."""
    _check_count_guard(n, k, q)
    count = 0
    for ys in product(range(1 << k), repeat=q):
        for us in product(range(4), repeat=n * q):
            if all(
                _xor_all(clmul(ys[i], us[i * n + j]) for i in range(q)) == 0 for j in range(n)
            ):
                count += 1
    return count


def _xor_all(values) -> int:
    acc = 0
    for v in values:
        acc ^= v
    return acc
