"""The n-times persymmetric family: parameter tuples and their 2n x k matrices.

Block ``j`` (0-based) is built from the ``k+1`` bits ``alpha[j][0..k]``.  Its
first row holds ``alpha[j][0..k-1]`` and its second row ``alpha[j][1..k]``, so
each 2 x k block is constant along anti-diagonals.

Enumeration index layout (block-major, coefficient-minor): bit
``j*(k+1) + i`` of the index is ``alpha[j][i]``.  With this layout the row
words of block ``j`` are ``w & mask`` and ``(w >> 1) & mask`` where ``w`` is the
block's ``k+1``-bit slice of the index and ``mask = 2**k - 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

from persym.gf2 import MAX_COLS, MAX_ROWS, BitMatrix


@dataclass(frozen=True)
class FamilyShape:
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.n < 1 or self.k < 1:
            raise ValueError(f"need n >= 1 and k >= 1, got n={self.n}, k={self.k}")

    @property
    def rows(self) -> int:
        return 2 * self.n

    @property
    def max_rank(self) -> int:
        return min(2 * self.n, self.k)

    @property
    def param_bits(self) -> int:
        return self.n * (self.k + 1)

    @property
    def size(self) -> int:
        """Number of matrices in the family, 2**(n(k+1))."""
        return 1 << self.param_bits


@dataclass(frozen=True)
class ParamTuple:
    n: int
    k: int
    alpha: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        FamilyShape(self.n, self.k)
        if len(self.alpha) != self.n:
            raise ValueError(f"expected {self.n} parameter sequences, got {len(self.alpha)}")
        for seq in self.alpha:
            if len(seq) != self.k + 1:
                raise ValueError(f"each sequence needs k+1 = {self.k + 1} bits, got {len(seq)}")
            if any(b not in (0, 1) for b in seq):
                raise ValueError("alpha entries must be 0 or 1")

    @classmethod
    def from_blocks(cls, *seqs) -> "ParamTuple":
        """``ParamTuple.from_blocks((1, 0, 1), (0, 0, 0))`` for n=2, k=2."""
        alpha = tuple(tuple(int(b) for b in s) for s in seqs)
        return cls(len(alpha), len(alpha[0]) - 1, alpha)

    def block_word(self, j: int) -> int:
        """Bits of block ``j`` packed as an integer; bit ``i`` is ``alpha[j][i]``."""
        return sum(b << i for i, b in enumerate(self.alpha[j]))


def build_matrix(p: ParamTuple) -> BitMatrix:
    if p.k > MAX_COLS:
        raise ValueError(f"k={p.k} exceeds the {MAX_COLS}-column cap")
    if 2 * p.n > MAX_ROWS:
        raise ValueError(f"n={p.n} gives more than {MAX_ROWS} rows")
    mask = (1 << p.k) - 1
    words = []
    for j in range(p.n):
        w = p.block_word(j)
        words.append(w & mask)
        words.append((w >> 1) & mask)
    return BitMatrix(2 * p.n, p.k, tuple(words))


def param_from_index(n: int, k: int, idx: int) -> ParamTuple:
    shape = FamilyShape(n, k)
    if not 0 <= idx < shape.size:
        raise ValueError(f"index {idx} outside [0, 2**{shape.param_bits})")
    width = k + 1
    alpha = tuple(
        tuple((idx >> (j * width + i)) & 1 for i in range(width)) for j in range(n)
    )
    return ParamTuple(n, k, alpha)


def param_to_index(p: ParamTuple) -> int:
    width = p.k + 1
    return sum(p.block_word(j) << (j * width) for j in range(p.n))
