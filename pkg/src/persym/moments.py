"""Weighted rank sums and the exact identities they satisfy.

``moment(h, q)`` is sum_i counts[i] * 2**(-i*q).  Scaled by
``2**(q(2n+k) - (k+1)n)`` it is the number of solutions of the q-fold
bilinear system over GF(2)[T] (see ``persym.polysys``); for q = 0, 1, 2 it
also has a closed form, checked here with exact rationals.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from persym.census import RankHistogram
from persym.poly import Poly


@dataclass(frozen=True)
class MomentReport:
    name: str
    n: int
    k: int
    q: int
    lhs: Fraction
    rhs: Fraction

    @property
    def passed(self) -> bool:
        return self.lhs == self.rhs


def moment(h: RankHistogram, q: int) -> Fraction:
    if q < 0:
        raise ValueError("q must be >= 0")
    return sum((Fraction(c, 2 ** (i * q)) for i, c in enumerate(h.counts)), Fraction(0))


def _xpow(x, m: int):
    if isinstance(x, Poly):
        return x**m
    return Fraction(x) ** m


def moment_rhs(n: int, q: int, x):
    """Closed form of sum_i Γ_i 2**(-iq) for q in {0, 1, 2}, with x = 2**k.

    With ``x = Poly.x()`` this returns the polynomial in 2**k (needs
    ``n >= q`` so no negative powers of x appear).
    """
    N = Fraction(2**n)
    if q == 0:
        return N * _xpow(x, n)
    if q == 1:
        return N * _xpow(x, n - 1) + _xpow(x, n) / N - _xpow(x, n - 1) / N
    if q == 2:
        base = _xpow(x, n - 2)
        return (
            N * base
            + base * (3 * x - 3) / N
            + base * (3 * x - 6) / N**2
            + _xpow(x, n) / N**3
            - 6 * _xpow(x, n - 1) / N**3
            + 8 * base / N**3
        )
    raise ValueError(f"no closed form for q={q}")


def rank_identity_rhs(n: int, k: int) -> int:
    """R_{1,n}^{(k)} = 2^(2n) + 2^k - 1."""
    return 2 ** (2 * n) + 2**k - 1


def check_q0(h: RankHistogram) -> MomentReport:
    return MomentReport("total", h.n, h.k, 0, moment(h, 0), Fraction(2 ** ((h.k + 1) * h.n)))


def check_q1(h: RankHistogram) -> MomentReport:
    n, k = h.n, h.k
    lhs = Fraction(2) ** (k - (k - 1) * n) * moment(h, 1)
    return MomentReport("q1", n, k, 1, lhs, Fraction(rank_identity_rhs(n, k)))


def check_q2_general(h: RankHistogram) -> MomentReport:
    return MomentReport("q2", h.n, h.k, 2, moment(h, 2), Fraction(moment_rhs(h.n, 2, 2**h.k)))


# Five-block moment lines in integer form: sum_i Γ_i 2^(m(10-i)) as a
# polynomial in x = 2^k, for m = 0, 1, 2.
N5_MOMENT_POLYS: tuple[Poly, ...] = (
    Poly((0, 0, 0, 0, 0, 2**5)),
    Poly((0, 0, 0, 0, 1023 * 2**5, 2**5)),
    Poly((0, 0, 0, 1045320 * 2**5, 3162 * 2**5, 2**5)),
)


def check_n5_moments(h: RankHistogram) -> list[MomentReport]:
    if h.n != 5:
        raise ValueError("five-block moment lines need n = 5")
    out = []
    for m, rhs in enumerate(N5_MOMENT_POLYS):
        lhs = sum(c * 2 ** (m * (10 - i)) for i, c in enumerate(h.counts))
        out.append(MomentReport(f"n5_m{m}", 5, h.k, m, Fraction(lhs), Fraction(rhs(2**h.k))))
    return out


def predict_R(h: RankHistogram, q: int) -> int:
    """Solution count of the q-fold system implied by the rank histogram."""
    v = Fraction(2) ** (q * (2 * h.n + h.k) - (h.k + 1) * h.n) * moment(h, q)
    if v.denominator != 1:
        raise ArithmeticError(f"predicted solution count {v} is not an integer")
    return int(v)


def all_checks(h: RankHistogram) -> list[MomentReport]:
    checks = [check_q0(h), check_q1(h), check_q2_general(h)]
    if h.n == 5:
        checks.extend(check_n5_moments(h))
    return checks
