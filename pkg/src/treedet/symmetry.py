"""The S_{2d} x S_d action on partitions: orbits and stabilizers.

A pair (sigma, tau) acts by relabeling vertices through sigma and
colors through tau: the edge (i, j) of color c goes to the edge
(sigma i, sigma j) of color tau(c).  Orbits are computed by closing the
partition set under adjacent transpositions of both factors (vectorized
index maps plus union-find); stabilizers are found by brute force over
all (2d)! * d! pairs, which is 4320 checks per representative at d = 3.

Permutations are plain image tuples with 1-based values: sigma[i-1] is
the image of vertex i.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations
from typing import Optional

import numpy as np

from . import catalog
from .enumeration import PartitionSet
from .flips import SignatureTable
from .model import EdgePartition, classify_tree, edge_count, edge_index, edge_list

Perm = tuple  # image tuple, 1-based values


def identity_perm(n: int) -> Perm:
    return tuple(range(1, n + 1))


def perm_compose(a: Perm, b: Perm) -> Perm:
    """(a o b)(x) = a(b(x))."""
    return tuple(a[b[x] - 1] for x in range(len(a)))


def perm_inverse(a: Perm) -> Perm:
    inv = [0] * len(a)
    for x, y in enumerate(a, start=1):
        inv[y - 1] = x
    return tuple(inv)


def perm_sign(a: Perm) -> int:
    """Parity of a permutation via its cycle decomposition."""
    seen = [False] * len(a)
    sign = 1
    for x in range(len(a)):
        if seen[x]:
            continue
        length = 0
        y = x
        while not seen[y]:
            seen[y] = True
            y = a[y] - 1
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def random_perm(rng: np.random.Generator, n: int) -> Perm:
    return tuple(int(v) + 1 for v in rng.permutation(n))


@dataclass(frozen=True)
class PermPair:
    """A vertex relabeling together with a color relabeling."""

    sigma: Perm
    tau: Perm

    def __post_init__(self):
        for p in (self.sigma, self.tau):
            if sorted(p) != list(range(1, len(p) + 1)):
                raise ValueError(f"not a permutation: {p}")

    def compose(self, other: "PermPair") -> "PermPair":
        return PermPair(perm_compose(self.sigma, other.sigma), perm_compose(self.tau, other.tau))

    def inverse(self) -> "PermPair":
        return PermPair(perm_inverse(self.sigma), perm_inverse(self.tau))

    @classmethod
    def identity(cls, n: int, d: int) -> "PermPair":
        return cls(identity_perm(n), identity_perm(d))


def vertex_perm_edge_map(sigma: Perm, n: int) -> np.ndarray:
    """Source-position map of a vertex relabeling on edge slots.

    If Q is the image of P then Q.colors[k] = P.colors[map[k]]; the edge
    in slot k of Q came from the slot holding its sigma-preimage in P.
    """
    src = np.empty(edge_count(n), dtype=np.int64)
    for k, (i, j) in enumerate(edge_list(n)):
        a, b = sigma[i - 1], sigma[j - 1]
        if a > b:
            a, b = b, a
        src[edge_index(a, b, n)] = k
    return src


def act(pair: PermPair, partition: EdgePartition) -> EdgePartition:
    """Left action: edge (i, j) of color c maps to (sigma i, sigma j) of
    color tau(c)."""
    n, d = partition.n, partition.d
    if len(pair.sigma) != n or len(pair.tau) != d:
        raise ValueError(
            f"pair acts on (n, d) = ({len(pair.sigma)}, {len(pair.tau)}), "
            f"partition has ({n}, {d})"
        )
    src = vertex_perm_edge_map(pair.sigma, n)
    colors = tuple(pair.tau[partition.colors[int(k)]] - 1 for k in src)
    return EdgePartition(d, n, colors)


@lru_cache(maxsize=None)
def _all_edge_maps(n: int) -> tuple[tuple[Perm, ...], np.ndarray]:
    """All n! vertex relabelings with their edge-slot source maps."""
    if n > 8:
        raise ValueError(f"full S_{n} sweep is out of reach")
    perms = tuple(permutations(range(1, n + 1)))
    maps = np.stack([vertex_perm_edge_map(p, n) for p in perms])
    return perms, maps


def group_elements(n: int, d: int):
    """Every element of S_n x S_d as a PermPair, in lexicographic order."""
    for sigma in permutations(range(1, n + 1)):
        for tau in permutations(range(1, d + 1)):
            yield PermPair(sigma, tau)


def stabilizer(partition: EdgePartition) -> list[PermPair]:
    """Brute-force stabilizer of a partition inside S_{2d} x S_d."""
    n, d = partition.n, partition.d
    perms, maps = _all_edge_maps(n)
    base = np.array(partition.colors, dtype=np.uint8)
    taus = tuple(permutations(range(1, d + 1)))
    tau_maps = [np.array([t[c] - 1 for c in range(d)], dtype=np.uint8) for t in taus]
    found = []
    for sigma, src in zip(perms, maps):
        moved = base[src]
        for tau, tmap in zip(taus, tau_maps):
            if np.array_equal(tmap[moved], base):
                found.append(PermPair(sigma, tau))
    return found


@dataclass
class OrbitEntry:
    orbit_id: int
    representative: EdgePartition  # minimal canonical code in the orbit
    size: int
    stabilizer_order: int
    type_triple: tuple[str, ...]
    catalog_ids: tuple[int, ...] = ()
    stabilizer: Optional[list] = field(default=None, repr=False)


@dataclass
class OrbitTable:
    """Orbit decomposition of a partition set under S_{2d} x S_d."""

    pset: PartitionSet
    roots: np.ndarray  # (N,) minimal member index of each node's orbit
    entries: list

    def orbit_id_of(self, partition: EdgePartition) -> int:
        root = int(self.roots[self.pset.index_of(partition)])
        for entry in self.entries:
            if self.pset.index_of(entry.representative) == root:
                return entry.orbit_id
        raise AssertionError("orbit root without table entry")


def _orbit_roots(pset: PartitionSet) -> np.ndarray:
    """Union-find closure under adjacent transpositions of both factors."""
    n, d, N = pset.n, pset.d, len(pset)
    colors = pset.colors
    weights = pset.weights
    codes = pset.codes
    neighbor_maps = []
    for a in range(1, n):
        sigma = list(range(1, n + 1))
        sigma[a - 1], sigma[a] = sigma[a], sigma[a - 1]
        src = vertex_perm_edge_map(tuple(sigma), n)
        moved_codes = colors[:, src].astype(np.int64) @ weights
        neighbor_maps.append(np.searchsorted(codes, moved_codes).astype(np.int32))
    for a in range(d - 1):
        tmap = np.arange(d, dtype=np.uint8)
        tmap[a], tmap[a + 1] = tmap[a + 1], tmap[a]
        moved_codes = tmap[colors].astype(np.int64) @ weights
        neighbor_maps.append(np.searchsorted(codes, moved_codes).astype(np.int32))

    parent = np.arange(N, dtype=np.int32)

    def find(x: int) -> int:
        root = x
        while parent[root] != root:
            root = parent[root]
        while parent[x] != root:
            parent[x], x = root, parent[x]
        return root

    for gmap in neighbor_maps:
        for i in range(N):
            a, b = find(i), find(int(gmap[i]))
            if a != b:
                parent[max(a, b)] = min(a, b)  # keep minimal index as root
    return np.array([find(i) for i in range(N)], dtype=np.int32)


def orbit_decomposition(pset: PartitionSet, with_stabilizers: bool = True) -> OrbitTable:
    """Orbits of the set under S_{2d} x S_d, with representatives,
    sizes, stabilizers, and tree-shape triples.

    Representatives are the minimal-code members; orbit ids follow the
    representatives' code order.  Known labeled representatives from the
    catalog are attached as aliases when they land in an orbit.
    """
    roots = _orbit_roots(pset)
    root_ids, counts = np.unique(roots, return_counts=True)
    alias: dict[int, list[int]] = {}
    if pset.d == 3 and pset.cycle_free:
        for cid in catalog.CATALOG_IDS:
            p = catalog.reference_partition(cid)
            alias.setdefault(int(roots[pset.index_of(p)]), []).append(cid)
    entries = []
    for oid, (root, size) in enumerate(zip(root_ids, counts)):
        rep = pset.partition(int(root))
        stab = stabilizer(rep) if with_stabilizers else None
        entries.append(
            OrbitEntry(
                orbit_id=oid,
                representative=rep,
                size=int(size),
                stabilizer_order=len(stab) if stab is not None else 0,
                type_triple=tuple(classify_tree(cls) for cls in rep.color_classes())
                if pset.n == 6
                else (),
                catalog_ids=tuple(alias.get(int(root), ())),
                stabilizer=stab,
            )
        )
    return OrbitTable(pset, roots, entries)


@dataclass
class CatalogMatchReport:
    checked: int
    mismatches: list  # human-readable strings

    @property
    def ok(self) -> bool:
        return not self.mismatches


def match_catalog(table: OrbitTable) -> CatalogMatchReport:
    """Cross-check the computed d = 3 orbit table against the catalog.

    Verifies that each labeled representative is homogeneous and
    cycle-free, lands in a distinct orbit, and that its orbit's size,
    stabilizer order, and tree-shape triple agree with the catalog; and
    that the 19 orbits are hit exactly.
    """
    from .model import is_cycle_free, is_homogeneous

    mismatches = []
    seen_orbits = {}
    for cid in catalog.CATALOG_IDS:
        p = catalog.reference_partition(cid)
        if not is_homogeneous(p):
            mismatches.append(f"reference {cid} is not homogeneous")
            continue
        if not is_cycle_free(p):
            mismatches.append(f"reference {cid} is not cycle-free")
            continue
        triple = tuple(classify_tree(cls) for cls in p.color_classes())
        if triple != catalog.EXPECTED_TYPE_TRIPLES[cid]:
            mismatches.append(
                f"reference {cid}: shape triple {triple} != "
                f"{catalog.EXPECTED_TYPE_TRIPLES[cid]}"
            )
        try:
            oid = table.orbit_id_of(p)
        except KeyError:
            mismatches.append(f"reference {cid} is not a member of the set")
            continue
        if oid in seen_orbits:
            mismatches.append(
                f"references {seen_orbits[oid]} and {cid} fall in the same orbit"
            )
        seen_orbits[oid] = cid
        entry = table.entries[oid]
        if entry.size != catalog.EXPECTED_ORBIT_SIZES[cid]:
            mismatches.append(
                f"reference {cid}: orbit size {entry.size} != "
                f"{catalog.EXPECTED_ORBIT_SIZES[cid]}"
            )
        stab_order = len(stabilizer(p))
        if stab_order != catalog.EXPECTED_STABILIZER_ORDERS[cid]:
            mismatches.append(
                f"reference {cid}: stabilizer order {stab_order} != "
                f"{catalog.EXPECTED_STABILIZER_ORDERS[cid]}"
            )
    if len(seen_orbits) != len(table.entries):
        mismatches.append(
            f"{len(seen_orbits)} orbits hit by references, table has {len(table.entries)}"
        )
    return CatalogMatchReport(checked=len(catalog.CATALOG_IDS), mismatches=mismatches)


@dataclass
class EpsilonFormulaReport:
    samples: int
    violations: list

    @property
    def ok(self) -> bool:
        return not self.violations


def epsilon_formula_check(
    table: SignatureTable, samples: int, seed: int
) -> EpsilonFormulaReport:
    """Sampled check of the closed form of the d = 3 signature.

    For random (sigma, tau, i): the sign of (sigma, tau) * P_i must be
    +1 exactly when tau is even, where P_i runs over the 19 anchored
    representatives.
    """
    if table.pset.d != 3:
        raise ValueError("the closed-form signature check is specific to d = 3")
    rng = np.random.default_rng(seed)
    refs = catalog.reference_partitions()
    violations = []
    for _ in range(samples):
        sigma = random_perm(rng, 6)
        tau = random_perm(rng, 3)
        i = int(rng.integers(1, 20))
        moved = act(PermPair(sigma, tau), refs[i - 1])
        expected = perm_sign(tau)
        got = table.signature(moved)
        if got != expected:
            violations.append((sigma, tau, i, got, expected))
            if len(violations) >= 5:
                break
    return EpsilonFormulaReport(samples=samples, violations=violations)


def epsilon_product_check_d2(table: SignatureTable) -> EpsilonFormulaReport:
    """Exhaustive d = 2 check: the sign of (sigma, tau) * base partition
    equals sign(sigma) * sign(tau) over all 48 group elements."""
    if table.pset.d != 2:
        raise ValueError("this exhaustive sweep is specific to d = 2")
    base = catalog.BASE_PARTITION_D2
    violations = []
    count = 0
    for pair in group_elements(4, 2):
        count += 1
        expected = perm_sign(pair.sigma) * perm_sign(pair.tau)
        got = table.signature(act(pair, base))
        if got != expected:
            violations.append((pair.sigma, pair.tau, got, expected))
    return EpsilonFormulaReport(samples=count, violations=violations)
