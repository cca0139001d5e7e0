"""Exhaustive minimum-weight search over the span of a set of packed rows.

The ``r`` rows are split into ``low`` rows, whose ``2^low`` combinations are
tabulated once, and ``high`` rows walked in Gray-code order so that moving
to the next block costs one row XOR. Each block of ``2^low`` span vectors is
then XORed, weighed and min-reduced in bulk.

The high-prefix index range is cut into disjoint shards. Shards are
independent, so they can run in worker processes and be min-reduced.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

DEFAULT_CODEWORD_CAP = 1 << 28
DEFAULT_SYMPLECTIC_CAP = 1 << 28
DEFAULT_TABLE_BITS = 18

# larger than any weight we can encounter
_NO_WEIGHT = np.iinfo(np.int64).max


@dataclass(frozen=True)
class SpanWeights:
    """Minimum weights over a span.

    ``all_nonzero`` covers every nonzero message. ``above_split`` covers the
    messages with at least one set bit at index ``>= split``; with the rows
    ordered so that the first ``split`` span a subspace, these are exactly
    the vectors outside that subspace. ``None`` means the set was empty.
    """

    all_nonzero: int | None
    above_split: int | None

    @classmethod
    def combine(cls, parts: list[tuple[int, int]]) -> SpanWeights:
        best_all = min(p[0] for p in parts)
        best_split = min(p[1] for p in parts)
        return cls(
            None if best_all == _NO_WEIGHT else best_all,
            None if best_split == _NO_WEIGHT else best_split,
        )


def _weights(block: np.ndarray, kind: str) -> np.ndarray:
    if kind == "hamming":
        counts = np.bitwise_count(block)
    elif kind == "symplectic":
        half = block.shape[1] // 2
        counts = np.bitwise_count(block[:, :half] | block[:, half:])
    else:
        raise ValueError(f"unknown weight kind {kind!r}")
    if counts.shape[1] == 1:
        return counts[:, 0].astype(np.int64)
    return counts.sum(axis=1, dtype=np.int64)


def span_table(rows: np.ndarray) -> np.ndarray:
    """All ``2^len(rows)`` XOR combinations; entry ``i`` combines the rows set in ``i``."""
    r, width = rows.shape
    table = np.zeros((1 << r, width), dtype=np.uint64)
    for i in range(r):
        size = 1 << i
        np.bitwise_xor(table[:size], rows[i], out=table[size : 2 * size])
    return table


def _gray(t: int) -> int:
    return t ^ (t >> 1)


def scan_shard(
    rows: np.ndarray, low: int, kind: str, split: int, start: int, stop: int
) -> tuple[int, int]:
    """Scan the blocks whose Gray index lies in ``[start, stop)``.

    Returns the two raw minima of :class:`SpanWeights`, with a sentinel for
    empty sets so that shards min-reduce directly.
    """
    table = span_table(rows[:low])
    high_rows = rows[low:]
    block_size = 1 << low

    offset = np.zeros(rows.shape[1], dtype=np.uint64)
    prefix = _gray(start)
    for j in range(high_rows.shape[0]):
        if prefix >> j & 1:
            offset ^= high_rows[j]

    best_all = best_split = _NO_WEIGHT
    for t in range(start, stop):
        prefix = _gray(t)
        weights = _weights(table ^ offset, kind)
        if prefix == 0:
            # message zero is the first table entry of the zero prefix
            weights[0] = _NO_WEIGHT
        best_all = min(best_all, int(weights.min()))
        first_outside = (1 << split) - prefix * block_size
        if first_outside < block_size:
            best_split = min(best_split, int(weights[max(first_outside, 0):].min()))
        if t + 1 < stop:
            # Gray codes of t and t+1 differ in the lowest set bit of t+1
            bit = ((t + 1) & -(t + 1)).bit_length() - 1
            offset ^= high_rows[bit]
    return best_all, best_split


def shard_bounds(high: int, shards: int) -> list[tuple[int, int]]:
    total = 1 << high
    shards = max(1, min(shards, total))
    edges = [total * i // shards for i in range(shards + 1)]
    return [(a, b) for a, b in zip(edges, edges[1:]) if b > a]


def span_min_weights(
    rows: np.ndarray,
    *,
    kind: str = "hamming",
    split: int = 0,
    table_bits: int = DEFAULT_TABLE_BITS,
    shards: int = 1,
    workers: int = 1,
) -> SpanWeights:
    """Minimum weights over all ``2^r`` combinations of ``rows`` (shape ``(r, words)``).

    ``kind="hamming"`` weighs the popcount of every word; ``kind="symplectic"``
    treats the first half of the words as the X part and the second half as
    the Z part and weighs ``popcount(X | Z)``.
    """
    rows = np.ascontiguousarray(rows, dtype=np.uint64)
    r = rows.shape[0]
    if r == 0:
        return SpanWeights(None, None)
    low = min(r, table_bits)
    high = r - low
    if workers > 1:
        shards = max(shards, workers)
    bounds = shard_bounds(high, shards)
    if workers > 1 and len(bounds) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(scan_shard, rows, low, kind, split, a, b) for a, b in bounds]
            parts = [f.result() for f in futures]
    else:
        parts = [scan_shard(rows, low, kind, split, a, b) for a, b in bounds]
    return SpanWeights.combine(parts)
