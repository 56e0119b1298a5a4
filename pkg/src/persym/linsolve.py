"""Exact linear solves by fraction-free (Bareiss) elimination."""

from __future__ import annotations

from fractions import Fraction
from math import lcm
from typing import Sequence


class SingularSystem(ArithmeticError):
    pass


class InconsistentSystem(ArithmeticError):
    pass


def _integer_rows(A: Sequence[Sequence], b: Sequence) -> list[list[int]]:
    rows = []
    for row, rhs in zip(A, b):
        vals = [Fraction(v) for v in (*row, rhs)]
        scale = lcm(*(v.denominator for v in vals))
        rows.append([int(v * scale) for v in vals])
    return rows


def solve_exact(A: Sequence[Sequence], b: Sequence) -> list[Fraction]:
    """Solve ``A u = b`` exactly for a full-column-rank ``A`` (m >= u rows).

    Surplus equations must be satisfied exactly, otherwise
    ``InconsistentSystem`` is raised.
    """
    m = len(A)
    if m != len(b):
        raise ValueError("row count of A and b differ")
    u = len(A[0]) if m else 0
    if m < u:
        raise SingularSystem(f"{m} equations for {u} unknowns")
    M = _integer_rows(A, b)

    prev = 1
    for c in range(u):
        piv = next((r for r in range(c, m) if M[r][c] != 0), None)
        if piv is None:
            raise SingularSystem(f"no pivot in column {c}")
        M[c], M[piv] = M[piv], M[c]
        for r in range(c + 1, m):
            for j in range(c + 1, u + 1):
                # Bareiss step: the division is exact.
                M[r][j] = (M[c][c] * M[r][j] - M[r][c] * M[c][j]) // prev
            M[r][c] = 0
        prev = M[c][c]

    for r in range(u, m):
        if M[r][u] != 0:
            raise InconsistentSystem(f"equation {r} is not satisfied by the solution of the others")

    x = [Fraction(0)] * u
    for c in range(u - 1, -1, -1):
        s = Fraction(M[c][u]) - sum(M[c][j] * x[j] for j in range(c + 1, u))
        x[c] = s / M[c][c]
    return x


def residual(A: Sequence[Sequence], b: Sequence, x: Sequence) -> list[Fraction]:
    return [sum(Fraction(a) * v for a, v in zip(row, x)) - Fraction(rhs) for row, rhs in zip(A, b)]
