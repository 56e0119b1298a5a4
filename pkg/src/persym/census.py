"""Exhaustive rank census over the whole parameter space."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np
from numba import njit

from persym.gf2 import MAX_COLS, rank_words_kernel
from persym.model import FamilyShape

# Default ceiling on n(k+1); larger runs need force=True.
FEASIBLE_BITS = 40
# Hard ceiling: indices and row words live in int64 inside the kernel.
KERNEL_BITS = 62


class InfeasibleCensus(ValueError):
    """Raised when a census exceeds the size guard."""


@dataclass(frozen=True)
class RankHistogram:
    n: int
    k: int
    counts: tuple[int, ...]

    def __post_init__(self) -> None:
        shape = FamilyShape(self.n, self.k)
        if len(self.counts) != shape.max_rank + 1:
            raise ValueError(
                f"expected {shape.max_rank + 1} counts for n={self.n}, k={self.k}, got {len(self.counts)}"
            )
        if any(c < 0 for c in self.counts):
            raise ValueError("counts must be nonnegative")

    @property
    def shape(self) -> FamilyShape:
        return FamilyShape(self.n, self.k)

    @property
    def total(self) -> int:
        return sum(self.counts)

    def __add__(self, other: "RankHistogram") -> "RankHistogram":
        if (self.n, self.k) != (other.n, other.k):
            raise ValueError("cannot merge histograms of different shapes")
        return RankHistogram(self.n, self.k, tuple(a + b for a, b in zip(self.counts, other.counts)))

    @classmethod
    def empty(cls, n: int, k: int) -> "RankHistogram":
        return cls(n, k, (0,) * (FamilyShape(n, k).max_rank + 1))


@njit(nogil=True, cache=True)
def _census_kernel(n, k, lo, hi, hist):
    width = k + 1
    wmask = (1 << width) - 1
    cmask = (1 << k) - 1
    words = np.empty(2 * n, np.int64)
    scratch = np.empty(2 * n, np.int64)
    for idx in range(lo, hi):
        for j in range(n):
            w = (idx >> (j * width)) & wmask
            words[2 * j] = w & cmask
            words[2 * j + 1] = (w >> 1) & cmask
        hist[rank_words_kernel(words, k, scratch)] += 1


def _check_shape(n: int, k: int, force: bool) -> FamilyShape:
    shape = FamilyShape(n, k)
    if k > MAX_COLS:
        raise InfeasibleCensus(f"k={k} exceeds the {MAX_COLS}-column cap")
    if shape.param_bits > KERNEL_BITS:
        raise InfeasibleCensus(f"n(k+1)={shape.param_bits} exceeds the kernel limit of {KERNEL_BITS}")
    if shape.param_bits > FEASIBLE_BITS and not force:
        raise InfeasibleCensus(
            f"n(k+1)={shape.param_bits} > {FEASIBLE_BITS}: 2**{shape.param_bits} ranks; pass force=True to run anyway"
        )
    return shape


def _run_range(shape: FamilyShape, lo: int, hi: int) -> np.ndarray:
    hist = np.zeros(shape.max_rank + 1, np.int64)
    if hi > lo:
        _census_kernel(shape.n, shape.k, lo, hi, hist)
    return hist


def census_partial(n: int, k: int, idx_lo: int, idx_hi: int, force: bool = False) -> RankHistogram:
    """Histogram of ranks for parameter indices in ``[idx_lo, idx_hi)``."""
    shape = _check_shape(n, k, force)
    if not 0 <= idx_lo <= idx_hi <= shape.size:
        raise ValueError(f"bad index range [{idx_lo}, {idx_hi}) for size 2**{shape.param_bits}")
    hist = _run_range(shape, idx_lo, idx_hi)
    return RankHistogram(n, k, tuple(int(c) for c in hist))


def split_range(lo: int, hi: int, parts: int) -> list[tuple[int, int]]:
    """Split ``[lo, hi)`` into ``parts`` contiguous, nearly equal pieces."""
    span = hi - lo
    parts = max(1, min(parts, span)) if span else 1
    bounds = [lo + span * p // parts for p in range(parts + 1)]
    return list(zip(bounds[:-1], bounds[1:]))


def census(n: int, k: int, workers: int | None = None, force: bool = False) -> RankHistogram:
    """Exact counts of rank-i matrices in the family, for every i.

    The index space is cut into one contiguous range per worker; each worker
    fills its own int64 histogram in a GIL-free kernel and the partial
    histograms are summed as Python integers at the end.
    """
    shape = _check_shape(n, k, force)
    if workers is None:
        workers = os.cpu_count() or 1
    if workers < 1:
        raise ValueError("workers must be >= 1")
    pieces = split_range(0, shape.size, workers)
    if len(pieces) == 1:
        partials = [_run_range(shape, *pieces[0])]
    else:
        with ThreadPoolExecutor(max_workers=len(pieces)) as pool:
            partials = list(pool.map(lambda r: _run_range(shape, *r), pieces))
    totals = [0] * (shape.max_rank + 1)
    for hist in partials:
        for i, c in enumerate(hist):
            totals[i] += int(c)
    return RankHistogram(n, k, tuple(totals))
