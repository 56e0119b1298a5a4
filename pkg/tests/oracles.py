"""Independent reference implementations used only by the tests."""

from __future__ import annotations


def naive_rank_mod2(matrix: list[list[int]]) -> int:
    """Rank by row reduction of an explicit 0/1 integer matrix, arithmetic mod 2."""
    m = [[x % 2 for x in row] for row in matrix]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    r = 0
    for c in range(cols):
        pivot = None
        for i in range(r, rows):
            if m[i][c]:
                pivot = i
                break
        if pivot is None:
            continue
        m[r], m[pivot] = m[pivot], m[r]
        for i in range(rows):
            if i != r and m[i][c]:
                m[i] = [(a + b) % 2 for a, b in zip(m[i], m[r])]
        r += 1
    return r


def persym_matrix(alpha: list[list[int]], k: int) -> list[list[int]]:
    """2n x k matrix written out entry by entry from the alpha sequences."""
    out = []
    for seq in alpha:
        out.append([seq[c] for c in range(k)])
        out.append([seq[c + 1] for c in range(k)])
    return out


def brute_histogram(n: int, k: int) -> list[int]:
    """Rank histogram by explicit enumeration of every alpha, no bit tricks."""
    hist = [0] * (min(2 * n, k) + 1)
    width = k + 1
    for idx in range(2 ** (n * width)):
        bits = [(idx >> b) & 1 for b in range(n * width)]
        alpha = [bits[j * width:(j + 1) * width] for j in range(n)]
        hist[naive_rank_mod2(persym_matrix(alpha, k))] += 1
    return hist


def transpose(rows: list[list[int]]) -> list[list[int]]:
    return [list(col) for col in zip(*rows)] if rows else []
