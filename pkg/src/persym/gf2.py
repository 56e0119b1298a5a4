"""Dense GF(2) rank with one machine word per row.

Row ``r`` of a matrix is an integer whose bit ``j`` is the entry in column
``j``.  Columns are capped at 64 so every row fits in a single word.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np
from numba import njit

MAX_COLS = 64
MAX_ROWS = 64


@dataclass(frozen=True)
class BitMatrix:
    rows: int
    cols: int
    row_bits: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 0 <= self.rows <= MAX_ROWS:
            raise ValueError(f"rows must be in [0, {MAX_ROWS}], got {self.rows}")
        if not 0 <= self.cols <= MAX_COLS:
            raise ValueError(f"cols must be in [0, {MAX_COLS}], got {self.cols}")
        if len(self.row_bits) != self.rows:
            raise ValueError("row_bits length does not match rows")
        limit = 1 << self.cols
        for word in self.row_bits:
            if not 0 <= word < limit:
                raise ValueError(f"row word {word:#x} has bits at or above column {self.cols}")

    @classmethod
    def from_strings(cls, rows: Sequence[str]) -> "BitMatrix":
        """Build from strings like ``"10"``; character ``j`` is column ``j``."""
        cols = len(rows[0]) if rows else 0
        words = []
        for s in rows:
            if len(s) != cols:
                raise ValueError("ragged rows")
            words.append(sum(1 << j for j, ch in enumerate(s) if ch == "1"))
        return cls(len(rows), cols, tuple(words))

    @classmethod
    def from_lists(cls, rows: Sequence[Sequence[int]]) -> "BitMatrix":
        return cls.from_strings(["".join("1" if x & 1 else "0" for x in r) for r in rows])

    def entry(self, r: int, c: int) -> int:
        return (self.row_bits[r] >> c) & 1

    def to_strings(self) -> list[str]:
        return ["".join(str(self.entry(r, c)) for c in range(self.cols)) for r in range(self.rows)]


def rank_of_words(words: Iterable[int]) -> int:
    """GF(2) rank of a collection of row words.

    Each new row is reduced against the current basis, using the lowest set
    bit of every basis row as its pivot; a nonzero remainder joins the basis.
    """
    basis: list[int] = []
    for v in words:
        for b in basis:
            if v & (b & -b):
                v ^= b
        if v:
            basis.append(v)
    return len(basis)


def rank(m: BitMatrix) -> int:
    return rank_of_words(m.row_bits)


@njit(nogil=True, cache=True)
def rank_words_kernel(words: np.ndarray, cols: int, scratch: np.ndarray) -> int:
    # Same elimination as rank_of_words; scratch must hold len(words) entries.
    # Words are int64, so callers keep cols <= 63.
    r = 0
    for i in range(words.shape[0]):
        if r == cols:
            break
        v = words[i]
        for t in range(r):
            b = scratch[t]
            if v & (b & -b):
                v ^= b
        if v:
            scratch[r] = v
            r += 1
    return r
