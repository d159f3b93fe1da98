"""Face flips on homogeneous cycle-free partitions and the flip graph.

Every homogeneous cycle-free d-partition of K_{2d} has, for each vertex
triple (x, y, z), a unique partner partition that agrees with it on all
edges off the face and differs on at least two of the three face edges.
The map to that partner is an involution ("flip").  Nothing here takes
that uniqueness on faith: flip() tries all d^3 - 1 alternative face
colorings and demands exactly one survivor, and the graph builder does
the same sweep over every (partition, face) pair, so a counterexample
would abort the run loudly instead of being glossed over.

The graph with one node per partition and one edge per flip carries the
two certificates this package is built around:

* two-colorability: a global sign that every flip negates (the
  signature map; its existence is the bipartiteness of the flip graph);
* connectivity: when the involutions act transitively, the quotient of
  the tensor space by the face relations has dimension at most one.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import product
from typing import Optional, Sequence, Union

import numpy as np

from .enumeration import PartitionSet
from .model import (
    EdgePartition,
    acyclic_mask_table,
    edge_count,
    face_edge_indices,
    faces_of,
    is_cycle_free,
    is_homogeneous,
    normalize_face,
)


class FlipUniquenessError(RuntimeError):
    """Raised when a (partition, face) pair does not have exactly one
    admissible flip partner.  This would falsify the uniqueness property
    the whole construction rests on, so it always aborts the run."""

    def __init__(self, partition: EdgePartition, face, survivors):
        self.partition = partition
        self.face = tuple(face)
        self.survivors = survivors
        super().__init__(
            f"face {self.face} of partition code {partition.canonical_code()} "
            f"has {len(survivors)} admissible recolorings instead of 1"
        )


class AnchorConflictError(ValueError):
    """Two anchors in one flip-graph component demand inconsistent signs."""

    def __init__(self, first: int, second: int, path: list):
        self.first = first
        self.second = second
        self.path = path
        super().__init__(
            f"anchor at node {second} contradicts anchor at node {first}; "
            f"connecting path has {len(path)} nodes"
        )


def flip(partition: EdgePartition, face) -> EdgePartition:
    """The unique partner of `partition` across `face`.

    Brute force: try every alternative coloring of the three face edges,
    keep those that are homogeneous, cycle-free, and differ from the
    input in at least two of the three positions, and insist the
    survivor is unique.
    """
    if not is_homogeneous(partition):
        raise ValueError("flip needs a homogeneous partition")
    if not is_cycle_free(partition):
        raise ValueError("flip needs a cycle-free partition")
    d, n = partition.d, partition.n
    face = normalize_face(*face, n)
    pos = face_edge_indices(face, n)
    orig = tuple(partition.colors[k] for k in pos)
    survivors = []
    for cand in product(range(d), repeat=3):
        if cand == orig:
            continue
        ndiff = sum(1 for a, b in zip(cand, orig) if a != b)
        colors = list(partition.colors)
        for k, c in zip(pos, cand):
            colors[k] = c
        q = EdgePartition(d, n, tuple(colors))
        if ndiff >= 2 and is_homogeneous(q) and is_cycle_free(q):
            survivors.append(q)
    if len(survivors) != 1:
        raise FlipUniquenessError(partition, face, survivors)
    return survivors[0]


@dataclass
class FlipGraph:
    """Flip adjacency over a cycle-free homogeneous partition set.

    adjacency[i, f] is the index of the flip partner of node i across
    face number f (faces in lexicographic order).
    """

    pset: PartitionSet
    adjacency: np.ndarray  # (N, C(2d,3)) int32

    @property
    def faces(self):
        return faces_of(self.pset.n)

    def neighbor(self, i: int, face) -> int:
        face = normalize_face(*face, self.pset.n)
        return int(self.adjacency[i, self.faces.index(face)])


@dataclass
class FlipSoundnessReport:
    pairs_checked: int
    diff_two: int  # flips changing exactly 2 face edges
    diff_three: int  # flips changing all 3 face edges
    involution_ok: bool

    @property
    def ok(self) -> bool:
        return self.involution_ok and self.pairs_checked == self.diff_two + self.diff_three


def _face_sweep(pset: PartitionSet):
    """Vectorized flip computation for every (partition, face) pair.

    Returns (adjacency, diff_counts) where diff_counts[i, f] in {2, 3}
    records on how many face edges node i and its partner differ.
    Raises FlipUniquenessError if any pair has survivor count != 1.

    For each candidate recoloring, homogeneity reduces to preserving the
    multiset of the three face colors, and acyclicity of the three
    touched classes is read off a precomputed table over edge bitmasks.
    """
    d, n = pset.d, pset.n
    E = edge_count(n)
    N = len(pset)
    colors = pset.colors
    codes = pset.codes
    weights = pset.weights
    acyc = acyclic_mask_table(n)
    bits = (1 << np.arange(E)).astype(np.int64)
    class_masks = np.zeros((N, d), dtype=np.int64)
    for c in range(d):
        class_masks[:, c] = ((colors == c) * bits).sum(axis=1)

    faces = faces_of(n)
    adjacency = np.full((N, len(faces)), -1, dtype=np.int32)
    n_survivors = np.zeros((N, len(faces)), dtype=np.int8)
    diff_counts = np.zeros((N, len(faces)), dtype=np.int8)

    for fi, face in enumerate(faces):
        pos = face_edge_indices(face, n)
        w3 = weights[list(pos)]
        b3 = bits[list(pos)]
        face_mask = int(b3.sum())
        da = colors[:, pos[0]].astype(np.int64)
        db = colors[:, pos[1]].astype(np.int64)
        dc = colors[:, pos[2]].astype(np.int64)
        ctx_codes = codes - (da * w3[0] + db * w3[1] + dc * w3[2])
        ctx_masks = class_masks & ~np.int64(face_mask)
        orig_face_count = np.stack(
            [(da == c).astype(np.int8) + (db == c) + (dc == c) for c in range(d)],
            axis=1,
        )
        for cand in product(range(d), repeat=3):
            ca, cb, cc = cand
            cand_count = np.array(
                [(ca == c) + (cb == c) + (cc == c) for c in range(d)], dtype=np.int8
            )
            homogeneous = np.all(orig_face_count == cand_count, axis=1)
            ndiff = (da != ca).astype(np.int8) + (db != cb) + (dc != cc)
            alive = homogeneous & (ndiff >= 2)
            if not alive.any():
                continue
            add_mask = np.zeros(d, dtype=np.int64)
            for c, b in zip(cand, b3):
                add_mask[c] |= b
            for c in range(d):
                if add_mask[c]:
                    alive = alive & acyc[ctx_masks[:, c] | add_mask[c]]
            if not alive.any():
                continue
            rows = np.nonzero(alive)[0]
            cand_codes = ctx_codes[rows] + (ca * w3[0] + cb * w3[1] + cc * w3[2])
            idx = np.searchsorted(codes, cand_codes)
            missing = (idx == len(codes)) | (
                codes[np.minimum(idx, len(codes) - 1)] != cand_codes
            )
            if missing.any():  # pragma: no cover
                raise AssertionError("homogeneous cycle-free candidate missing from set")
            n_survivors[rows, fi] += 1
            adjacency[rows, fi] = idx
            diff_counts[rows, fi] = ndiff[rows]
        if not np.all(n_survivors[:, fi] == 1):
            bad = int(np.nonzero(n_survivors[:, fi] != 1)[0][0])
            partition = pset.partition(bad)
            survivors = []  # recover the survivor list the slow way for the report
            try:
                survivors = [flip(partition, face)]
            except FlipUniquenessError as exc:
                survivors = exc.survivors
            raise FlipUniquenessError(partition, face, survivors)
    return adjacency, diff_counts


def build_flip_graph(pset: PartitionSet) -> FlipGraph:
    """Full flip adjacency of a cycle-free homogeneous partition set."""
    if not pset.cycle_free:
        raise ValueError("flip graph needs the cycle-free partition set")
    adjacency, _ = _face_sweep(pset)
    return FlipGraph(pset, adjacency)


def verify_flip_soundness(pset: PartitionSet) -> FlipSoundnessReport:
    """Exhaustively re-derive every flip and check the involution.

    Covers all |set| * C(2d,3) pairs: unique survivor (the sweep raises
    otherwise), difference on exactly 2 or 3 face edges, and double-flip
    returning the original node.
    """
    adjacency, diff_counts = _face_sweep(pset)
    ids = np.arange(len(pset))
    involution_ok = all(
        np.array_equal(adjacency[adjacency[:, f], f], ids)
        and not np.any(adjacency[:, f] == ids)
        for f in range(adjacency.shape[1])
    )
    return FlipSoundnessReport(
        pairs_checked=int(adjacency.size),
        diff_two=int((diff_counts == 2).sum()),
        diff_three=int((diff_counts == 3).sum()),
        involution_ok=bool(involution_ok),
    )


@dataclass
class OddCycleWitness:
    """An odd closed walk certifying that a graph is not two-colorable."""

    nodes: list

    def __len__(self):
        return len(self.nodes)


@dataclass
class TwoColoring:
    component: np.ndarray  # (N,) int32 component ids
    sign: np.ndarray  # (N,) int8 in {+1, -1}, BFS-relative
    parent: np.ndarray  # (N,) int32 BFS tree, -1 at seeds
    n_components: int
    seeds: list  # one node per component, ascending


def two_color(neighbors) -> Union[TwoColoring, OddCycleWitness]:
    """BFS 2-coloring of an undirected graph given as a neighbor table.

    `neighbors` may be an (N, k) integer array or a list of neighbor
    lists.  Returns the coloring, or an explicit odd cycle if any edge
    joins two nodes of the same BFS parity.
    """
    if isinstance(neighbors, np.ndarray):
        rows = neighbors.tolist()
    else:
        rows = [list(r) for r in neighbors]
    N = len(rows)
    component = np.full(N, -1, dtype=np.int32)
    sign = np.zeros(N, dtype=np.int8)
    parent = np.full(N, -1, dtype=np.int32)
    seeds = []
    for seed in range(N):
        if component[seed] >= 0:
            continue
        cid = len(seeds)
        seeds.append(seed)
        component[seed] = cid
        sign[seed] = 1
        queue = deque([seed])
        while queue:
            u = queue.popleft()
            su = int(sign[u])
            for v in rows[u]:
                if component[v] < 0:
                    component[v] = cid
                    sign[v] = -su
                    parent[v] = u
                    queue.append(v)
                elif sign[v] == su:
                    return OddCycleWitness(_odd_cycle(parent, u, v))
    return TwoColoring(component, sign, parent, len(seeds), seeds)


def _path_to_root(parent: np.ndarray, u: int) -> list:
    path = [u]
    while parent[path[-1]] >= 0:
        path.append(int(parent[path[-1]]))
    return path


def _odd_cycle(parent: np.ndarray, u: int, v: int) -> list:
    pu, pv = _path_to_root(parent, u), _path_to_root(parent, v)
    while len(pu) > 1 and len(pv) > 1 and pu[-2] == pv[-2]:
        pu.pop()
        pv.pop()
    return pu[::-1] + pv[1:][::-1] if pu[-1] == pv[-1] else pu[::-1] + pv[::-1]


def _tree_path(parent: np.ndarray, a: int, b: int) -> list:
    """Path between two nodes of one BFS tree, via their paths to the root."""
    pa, pb = _path_to_root(parent, a), _path_to_root(parent, b)
    sa, sb = set(pa), set(pb)
    meet = next(x for x in pa if x in sb)
    return pa[: pa.index(meet) + 1] + pb[: pb.index(meet)][::-1]


class SignatureTable:
    """Total sign map on a cycle-free homogeneous partition set.

    Built from a two-coloring of the flip graph, so every flip joins
    opposite signs; the overall orientation of each component is pinned
    by the anchors supplied at build time.
    """

    def __init__(self, pset: PartitionSet, signs: np.ndarray):
        self.pset = pset
        self.signs = np.ascontiguousarray(signs, dtype=np.int8)
        self.signs.setflags(write=False)

    @property
    def codes(self):
        return self.pset.codes

    def signature(self, partition: EdgePartition) -> int:
        """Sign of a member partition; KeyError if it is not in the set."""
        return int(self.signs[self.pset.index_of(partition)])

    def class_sizes(self) -> tuple[int, int]:
        return int((self.signs > 0).sum()), int((self.signs < 0).sum())


def check_bipartite(
    graph: FlipGraph,
    anchors: Optional[Sequence[tuple[EdgePartition, int]]] = None,
) -> Union[SignatureTable, OddCycleWitness]:
    """Two-color the flip graph and orient it by the given anchors.

    Each anchor pins the sign of one partition.  Components holding no
    anchor default to +1 at their minimal-code node.  Two anchors in one
    component that disagree raise AnchorConflictError with the
    connecting path as a witness.
    """
    coloring = two_color(graph.adjacency)
    if isinstance(coloring, OddCycleWitness):
        return coloring
    flip_factor = np.zeros(coloring.n_components, dtype=np.int8)
    anchor_node = np.full(coloring.n_components, -1, dtype=np.int64)
    for partition, wanted in anchors or ():
        if wanted not in (+1, -1):
            raise ValueError(f"anchor sign must be +1 or -1, got {wanted}")
        i = graph.pset.index_of(partition)
        cid = int(coloring.component[i])
        factor = wanted * int(coloring.sign[i])
        if flip_factor[cid] == 0:
            flip_factor[cid] = factor
            anchor_node[cid] = i
        elif flip_factor[cid] != factor:
            raise AnchorConflictError(
                int(anchor_node[cid]), i, _tree_path(coloring.parent, int(anchor_node[cid]), i)
            )
    flip_factor[flip_factor == 0] = 1  # unanchored: seed node (minimal code) gets +1
    signs = (coloring.sign * flip_factor[coloring.component]).astype(np.int8)
    return SignatureTable(graph.pset, signs)


@dataclass
class ConnectivityReport:
    n_components: int
    representatives: list  # minimal-code EdgePartition per component

    @property
    def transitive(self) -> bool:
        return self.n_components == 1


def check_connected(graph: FlipGraph) -> ConnectivityReport:
    """Component count of the flip graph plus one representative each.

    A single component means the flip group acts transitively, which
    bounds the dimension of the associated quotient space by one.  The
    count is reported as measured, never assumed.
    """
    coloring = two_color(graph.adjacency)
    if isinstance(coloring, OddCycleWitness):  # pragma: no cover - flips never self-loop
        raise AssertionError("flip graph produced an odd cycle during BFS")
    reps = [graph.pset.partition(seed) for seed in coloring.seeds]
    return ConnectivityReport(coloring.n_components, reps)


def standard_anchors(pset: PartitionSet) -> list[tuple[EdgePartition, int]]:
    """The conventional +1 anchors for a partition set.

    d = 3 pins all 19 reference orbit representatives at +1; other d pin
    the nested generator partition at +1 (for d = 2 that normalizes the
    two-color determinant to 1 on its generator input).
    """
    from . import algebra, catalog

    if pset.d == 3:
        return [(p, +1) for p in catalog.reference_partitions()]
    return [(algebra.unit_partition(pset.d), +1)]
