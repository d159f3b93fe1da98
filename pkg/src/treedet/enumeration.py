"""Exhaustive enumeration of homogeneous d-partitions of K_{2d}.

A depth-first scan colors the edges in lexicographic order, trying
colors in ascending order, so the emitted sequence is strictly
increasing in canonical code and needs no post-sort.  Every color keeps
a remaining-edge budget of 2d - 1; in cycle-free mode each color also
carries an incremental union-find forest so cyclic prefixes are pruned
as soon as they appear.

The counts grow fast: d = 3 has multinomial(15; 5,5,5) = 756756
homogeneous partitions, while d = 4 already has about 4.7 * 10^14, so
exhaustive mode refuses d > 3 unless explicitly overridden.

With workers > 1 the search space is sharded on the colors of the first
few edges; shard outputs are concatenated in shard order, so the result
is byte-identical to the single-worker scan.
"""

from __future__ import annotations

from itertools import product
from typing import Iterator

import numpy as np

from .model import EdgePartition, edge_count, edge_list

MAX_EXHAUSTIVE_D = 3


class PartitionSet:
    """Immutable, code-sorted set of homogeneous d-partitions of K_{2d}.

    Stores one byte per edge per member; membership and rank queries go
    through binary search on the canonical codes.
    """

    def __init__(self, d: int, n: int, colors: np.ndarray, cycle_free: bool):
        self.d = d
        self.n = n
        self.cycle_free = cycle_free
        self.colors = np.ascontiguousarray(colors, dtype=np.uint8)
        self.colors.setflags(write=False)
        E = edge_count(n)
        if self.colors.ndim != 2 or self.colors.shape[1] != E:
            raise ValueError(f"expected an (N, {E}) color array")
        if d ** E >= 2 ** 63:
            raise ValueError(f"canonical codes for d={d}, n={n} exceed 64-bit range")
        self.weights = (d ** np.arange(E - 1, -1, -1)).astype(np.int64)
        self.codes = self.colors.astype(np.int64) @ self.weights
        if np.any(np.diff(self.codes) <= 0):
            raise ValueError("member sequence is not strictly code-sorted")
        self.codes.setflags(write=False)

    def __len__(self) -> int:
        return self.colors.shape[0]

    def partition(self, i: int) -> EdgePartition:
        return EdgePartition(self.d, self.n, tuple(int(c) for c in self.colors[i]))

    def __iter__(self) -> Iterator[EdgePartition]:
        return (self.partition(i) for i in range(len(self)))

    def code_of(self, partition: EdgePartition) -> int:
        if (partition.d, partition.n) != (self.d, self.n):
            raise ValueError(
                f"partition has (d, n) = ({partition.d}, {partition.n}), "
                f"set has ({self.d}, {self.n})"
            )
        return partition.canonical_code()

    def index_of(self, partition: EdgePartition) -> int:
        """Rank of a member; KeyError if the partition is not in the set."""
        code = self.code_of(partition)
        pos = int(np.searchsorted(self.codes, code))
        if pos == len(self) or int(self.codes[pos]) != code:
            raise KeyError(f"partition with code {code} not in set")
        return pos

    def contains(self, partition: EdgePartition) -> bool:
        try:
            self.index_of(partition)
            return True
        except KeyError:
            return False

    def __contains__(self, partition: EdgePartition) -> bool:
        return self.contains(partition)


def _dfs_blob(d: int, cycle_free: bool, prefix: tuple[int, ...]) -> bytes:
    """All valid colorings extending `prefix`, concatenated as raw bytes.

    Top-level function so multiprocessing can ship it to workers.
    """
    n = 2 * d
    edges = edge_list(n)
    E = len(edges)
    budget = [2 * d - 1] * d
    colors = bytearray(E)
    # per-color union-find without path compression so moves undo in O(1)
    parent = [list(range(n + 1)) for _ in range(d)]
    size = [[1] * (n + 1) for _ in range(d)]
    out = []

    def find(par, x):
        while par[x] != x:
            x = par[x]
        return x

    def place(k, c):
        """Try to color edge k with c; return an undo token or None."""
        if budget[c] == 0:
            return None
        if cycle_free:
            i, j = edges[k]
            par, sz = parent[c], size[c]
            ri, rj = find(par, i), find(par, j)
            if ri == rj:
                return None
            if sz[ri] < sz[rj]:
                ri, rj = rj, ri
            par[rj] = ri
            sz[ri] += sz[rj]
        else:
            ri = rj = 0
        budget[c] -= 1
        colors[k] = c
        return (c, ri, rj)

    def unplace(token):
        c, ri, rj = token
        budget[c] += 1
        if cycle_free:
            parent[c][rj] = rj
            size[c][ri] -= size[c][rj]

    tokens = []
    for k, c in enumerate(prefix):
        token = place(k, c)
        if token is None:
            return b""
        tokens.append(token)

    base = len(prefix)

    def rec(k):
        if k == E:
            out.append(bytes(colors))
            return
        for c in range(d):
            token = place(k, c)
            if token is None:
                continue
            rec(k + 1)
            unplace(token)

    rec(base)
    for token in reversed(tokens):
        unplace(token)
    return b"".join(out)


def enumerate_partitions(
    d: int,
    cycle_free: bool = False,
    *,
    workers: int = 1,
    allow_large: bool = False,
) -> PartitionSet:
    """Build the set of homogeneous d-partitions of K_{2d}.

    With cycle_free=True only partitions whose classes are all forests
    (hence spanning trees) are kept.  Refuses d > 3 unless allow_large
    is set, because the search space is infeasible at desk scale.
    """
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if d > MAX_EXHAUSTIVE_D and not allow_large:
        raise ValueError(
            f"exhaustive enumeration for d={d} is infeasible: the homogeneous "
            f"count is multinomial({edge_count(2 * d)}; {2 * d - 1}, ...), about "
            f"5*10^14 already at d=4; pass allow_large=True to override"
        )
    n = 2 * d
    E = edge_count(n)
    shard_len = min(3, E)
    shards = list(product(range(d), repeat=shard_len))
    if workers > 1 and len(shards) > 1:
        import multiprocessing

        with multiprocessing.get_context("fork").Pool(workers) as pool:
            blobs = pool.starmap(_dfs_blob, [(d, cycle_free, s) for s in shards])
    else:
        blobs = [_dfs_blob(d, cycle_free, s) for s in shards]
    blob = b"".join(blobs)
    colors = np.frombuffer(blob, dtype=np.uint8).reshape(-1, E).copy()
    return PartitionSet(d, n, colors, cycle_free)
