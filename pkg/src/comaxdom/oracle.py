"""Exhaustive dominating-set counter, the ground truth for everything else.

All ``2**order`` vertex subsets are checked against closed-neighborhood
bit masks.  The enumeration is split in two halves: coverage masks are
tabulated for every subset of the low vertices and of the high vertices,
and a subset dominates iff the OR of its two halves covers the whole
vertex set.  Each (high, low) pair is still tested individually; the
split only lets numpy do the inner loop.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from itertools import combinations

import numpy as np

from .errors import OracleSizeError
from .polynomial import ONE, IntPoly
from .ringgraph import SimpleGraph

MAX_ORDER = 30
_LOW_BITS = 16
_BLOCK_ELEMS = 1 << 22


def _cover_table(masks: list[int]) -> np.ndarray:
    cov = np.zeros(1, dtype=np.uint32)
    for m in masks:
        cov = np.concatenate([cov, cov | np.uint32(m)])
    return cov


def _popcount_table(k: int) -> np.ndarray:
    pc = np.zeros(1, dtype=np.int16)
    for _ in range(k):
        pc = np.concatenate([pc, pc + 1])
    return pc


class _Tables:
    def __init__(self, g: SimpleGraph):
        n = g.order
        nb = g.closed_neighborhoods()
        self.order = n
        self.low = min(n, _LOW_BITS)
        self.high = n - self.low
        self.full = np.uint32((1 << n) - 1)
        self.cov_low = _cover_table(nb[: self.low])
        self.pc_low = _popcount_table(self.low)
        self.cov_high = _cover_table(nb[self.low :])
        self.pc_high = _popcount_table(self.high)

    @property
    def high_count(self) -> int:
        return 1 << self.high


def _count_block_range(t: _Tables, start: int, stop: int) -> list[int]:
    counts = np.zeros(t.order + 1, dtype=np.int64)
    rows = max(1, _BLOCK_ELEMS >> t.low)
    for b0 in range(start, stop, rows):
        b1 = min(stop, b0 + rows)
        ok = (t.cov_low[None, :] | t.cov_high[b0:b1, None]) == t.full
        sizes = t.pc_low[None, :] + t.pc_high[b0:b1, None]
        counts += np.bincount(sizes[ok], minlength=t.order + 1)
    return [int(c) for c in counts]


def _check_size(g: SimpleGraph, cap: int) -> None:
    if g.order > cap:
        raise OracleSizeError(
            f"graph of order {g.order} exceeds the brute-force cap of {cap} vertices"
        )


def count_range(g: SimpleGraph, start: int, stop: int) -> list[int]:
    """Per-cardinality counts restricted to high-half subset indices [start, stop).

    Summing the results over any partition of ``range(high_count(g))``
    gives the full counts.
    """
    _check_size(g, MAX_ORDER)
    return _count_block_range(_Tables(g), start, stop)


def high_count(g: SimpleGraph) -> int:
    return 1 << max(0, g.order - _LOW_BITS)


def brute_force_counts(g: SimpleGraph, parts: int = 1, workers: int = 1, cap: int = MAX_ORDER) -> IntPoly:
    """Domination polynomial of ``g`` by checking every vertex subset.

    ``parts`` splits the enumeration into contiguous chunks and ``workers``
    runs them on a thread pool; counts are combined by exact integer
    addition, so the result never depends on either.
    """
    _check_size(g, cap)
    if g.order == 0:
        return ONE
    t = _Tables(g)
    total = t.high_count
    parts = max(1, min(parts, total))
    bounds = [total * k // parts for k in range(parts + 1)]
    ranges = list(zip(bounds, bounds[1:]))
    if workers > 1 and parts > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            partials = list(pool.map(lambda r: _count_block_range(t, *r), ranges))
    else:
        partials = [_count_block_range(t, a, b) for a, b in ranges]
    counts = [sum(col) for col in zip(*partials)]
    return IntPoly(counts)


def naive_counts(g: SimpleGraph) -> IntPoly:
    """Set-based enumeration for tiny graphs; shares no code with the fast path."""
    _check_size(g, 20)
    if g.order == 0:
        return ONE
    nbrs = [{j for j in range(g.order) if g.has_edge(i, j)} for i in range(g.order)]
    everything = set(range(g.order))
    counts = [0] * (g.order + 1)
    for k in range(1, g.order + 1):
        for s in combinations(range(g.order), k):
            covered = set(s)
            for v in s:
                covered |= nbrs[v]
            if covered == everything:
                counts[k] += 1
    return IntPoly(counts)
