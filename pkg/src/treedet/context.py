"""Shared build pipeline: partition set, flip graph, anchored signature.

Almost everything downstream (determinants, relation sweeps, the CLI)
needs the same three objects for a given d.  They are built once per
process and cached; the worker count changes nothing but the build
parallelism, so it is normalized into the cache key.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .enumeration import PartitionSet, enumerate_partitions
from .flips import (
    FlipGraph,
    OddCycleWitness,
    SignatureTable,
    build_flip_graph,
    check_bipartite,
    standard_anchors,
)


@dataclass(frozen=True)
class Context:
    pset: PartitionSet
    graph: FlipGraph
    signature: SignatureTable


def standard_context(d: int, workers: int = 1) -> Context:
    """Cycle-free set, flip graph, and signature with standard anchors."""
    return _standard_context(int(d), max(1, int(workers)))


@lru_cache(maxsize=None)
def _standard_context(d: int, workers: int) -> Context:
    pset = enumerate_partitions(d, cycle_free=True, workers=workers)
    graph = build_flip_graph(pset)
    table = check_bipartite(graph, standard_anchors(pset))
    if isinstance(table, OddCycleWitness):
        raise RuntimeError(
            f"flip graph for d={d} is not two-colorable; odd cycle of length {len(table)}"
        )
    return Context(pset, graph, table)
