"""Closed-form rank counts, evaluated exactly.

Every count is a polynomial in ``x = 2**k``.  The tables below keep those
polynomials explicit so they can be compared coefficient by coefficient, and
``valid`` on each result records whether ``k`` meets the threshold the
formula is stated for.  Thresholds are reported, never enforced.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from persym.poly import Poly


@dataclass(frozen=True)
class FormulaValue:
    value: int
    valid: bool
    source: str


def _scaled(factor: int, coeffs: tuple[int, ...]) -> Poly:
    return Poly(factor * c for c in coeffs)


# Five blocks (n = 5), ranks 0..10.  Coefficients lowest degree first.
# The rank-6 line uses 3913 in its 2^k coefficient; the variant with 2913
# violates Γ_6 = 0 at k = 5 and the sum over ranks.
N5_POLYS: tuple[Poly, ...] = (
    Poly((1,)),
    Poly((93,)),
    Poly((6386, 62)),
    Poly((364560, 6510)),
    Poly((15748000, 448260, 620)),
    Poly((250817280, 22654800, 65100)),
    _scaled(1240, (-18883 * 2**10, 2**7 * 3913, 3199, 1)),
    _scaled(115320, (311 * 2**13, -(2**7) * 917, 1148, 1)),
    _scaled(496, (-9749 * 2**18, 68115 * 2**11, -2169440, 9525, 1)),
    _scaled(31248, (2**26, -3932160, 71680, -480, 1)),
    _scaled(2**5, (-(2**35), 2080374784, -40632320, 317440, -992, 1)),
)
N5_THRESHOLDS = (1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 10)

# Four blocks (n = 4), ranks 0..8; stated as a whole for k >= 4.
N4_POLYS: tuple[Poly, ...] = (
    Poly((1,)),
    Poly((45,)),
    Poly((1410, 30)),
    Poly((31920, 1470)),
    Poly((276640, 42420, 140)),
    Poly((-11692800, 630000, 6300)),
    Poly((66170880, -6142080, 123480, 120)),
    Poly((-121896960, 13332480, -416640, 3720)),
    Poly((2**26, -7864320, 286720, -3840, 16)),
)
N4_THRESHOLD = 4

GENERAL_THRESHOLDS = (1, 2, 3, 4, 5, 6)


def general_line(n: int, i: int, x):
    """Rank-``i`` count for ``n`` blocks, as a function of ``x = 2**k``.

    ``x`` may be a number or ``Poly.x()``; in the latter case the result is
    the polynomial in ``2**k`` for this ``n``.
    """
    N = 2**n
    F = Fraction
    if i == 0:
        return 1 + 0 * x
    if i == 1:
        return 3 * (N - 1) + 0 * x
    if i == 2:
        return 7 * N**2 + (2 * x - 25) * N - 2 * x + 18
    if i == 3:
        return 15 * N**3 + (7 * x - 133) * N**2 + (294 - 21 * x) * N - 176 + 14 * x
    if i == 4:
        return (
            31 * N**4
            + F(1, 2) * (35 * x - 1210) * N**3
            + F(1, 6) * (4 * x * x - 783 * x + 19028) * N**2
            + (-2 * x * x + 269 * x - 5744) * N
            + F(1, 3) * (4 * x * x - 117 * 4 * x + 9440)
        )
    if i == 5:
        return (
            63 * N**5
            + (F(155, 4) * x - 2573) * N**4
            + (F(5, 2) * x * x - F(2565, 4) * x + 29150) * N**3
            + F(1, 2) * (-35 * x * x + 6265 * x - 247520) * N**2
            + (35 * x * x - 5490 * x + 203872) * N
            - 20 * x * x
            + 2960 * x
            - 106752
        )
    raise ValueError(f"no general formula for rank {i}; only 0..5")


def general_poly(n: int, i: int) -> Poly:
    p = general_line(n, i, Poly.x())
    return p if isinstance(p, Poly) else Poly((p,))


def _check_k(k: int) -> None:
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")


def gamma_n5(i: int, k: int) -> FormulaValue:
    """Number of rank-``i`` matrices with five blocks and ``k`` columns."""
    if not 0 <= i <= 10:
        raise ValueError(f"rank {i} outside 0..10")
    _check_k(k)
    return FormulaValue(N5_POLYS[i](2**k), k >= N5_THRESHOLDS[i], f"n5 theorem, rank {i}")


def gamma_n4(i: int, k: int) -> FormulaValue:
    if not 0 <= i <= 8:
        raise ValueError(f"rank {i} outside 0..8")
    _check_k(k)
    return FormulaValue(N4_POLYS[i](2**k), k >= N4_THRESHOLD, f"n4 result, rank {i}")


def gamma_general(n: int, i: int, k: int) -> FormulaValue:
    """Rank-``i`` count for any ``n``, ``i <= 5``.

    Evaluated over the rationals (the rank-4 and rank-5 lines have
    denominators 2, 3, 4, 6) and required to come out integral.
    """
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if not 0 <= i <= 5:
        raise ValueError(f"rank {i} outside 0..5")
    _check_k(k)
    v = Fraction(general_line(n, i, 2**k))
    if v.denominator != 1:
        raise ArithmeticError(f"general formula for n={n}, i={i}, k={k} is not integral: {v}")
    return FormulaValue(int(v), k >= GENERAL_THRESHOLDS[i], f"general n, rank {i}")


def gamma10_product(k: int) -> FormulaValue:
    """Full-rank count for five blocks, 2^5 * prod_{j=1..5} (2^k - 2^(10-j))."""
    _check_k(k)
    v = 2**5
    for j in range(1, 6):
        v *= 2**k - 2 ** (10 - j)
    return FormulaValue(v, k >= 10, "n5 rank-10 product")


def gamma9_factored(k: int) -> int:
    """31248 * prod_{j=5..8} (2^k - 2^j); the rank-9 line in factored form."""
    v = 31248
    for j in range(5, 9):
        v *= 2**k - 2**j
    return v


def closed_form(n: int, i: int, k: int) -> FormulaValue | None:
    """Most specific formula for ``(n, i, k)``, or ``None`` if there is none."""
    if n == 5 and i <= 10:
        return gamma_n5(i, k)
    if n == 4 and i <= 8:
        return gamma_n4(i, k)
    if i <= 5:
        return gamma_general(n, i, k)
    return None
