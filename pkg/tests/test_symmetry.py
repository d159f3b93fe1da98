import math
from itertools import permutations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from treedet import catalog
from treedet.flips import flip
from treedet.model import NOT_TREE, classify_tree, edge_list
from treedet.symmetry import (
    PermPair,
    act,
    epsilon_formula_check,
    epsilon_product_check_d2,
    group_elements,
    match_catalog,
    orbit_decomposition,
    perm_sign,
    stabilizer,
)

from test_model import FIG_GOOD


def test_identity_acts_trivially():
    pair = PermPair.identity(4, 2)
    assert act(pair, FIG_GOOD) == FIG_GOOD


def test_known_stabilizing_pair():
    # the double transposition of vertices fixes the d = 2 base partition
    pair = PermPair((2, 1, 4, 3), (1, 2))
    assert act(pair, catalog.BASE_PARTITION_D2) == catalog.BASE_PARTITION_D2


def test_stabilizer_of_d2_base_partition():
    stab = stabilizer(catalog.BASE_PARTITION_D2)
    got = {(p.sigma, p.tau) for p in stab}
    assert got == set(catalog.BASE_PARTITION_D2_STABILIZER)


@settings(max_examples=60, deadline=None)
@given(
    st.permutations(range(1, 7)),
    st.permutations(range(1, 7)),
    st.permutations(range(1, 4)),
    st.permutations(range(1, 4)),
    st.integers(min_value=1, max_value=19),
)
def test_action_composition_law(s1, s2, t1, t2, i):
    g = PermPair(tuple(s1), tuple(t1))
    h = PermPair(tuple(s2), tuple(t2))
    p = catalog.reference_partition(i)
    assert act(g, act(h, p)) == act(g.compose(h), p)


def test_perm_sign():
    assert perm_sign((1, 2, 3)) == 1
    assert perm_sign((2, 1, 3)) == -1
    assert perm_sign((2, 3, 1)) == 1
    assert perm_sign((4, 3, 2, 1)) == 1


def test_orbits_d2():
    from treedet.context import standard_context

    table = orbit_decomposition(standard_context(2).pset)
    assert len(table.entries) == 1
    entry = table.entries[0]
    assert entry.size == 12
    assert entry.stabilizer_order == 4
    assert entry.size * entry.stabilizer_order == math.factorial(4) * math.factorial(2)


def test_orbits_d3(orbits3):
    sizes = sorted((e.size for e in orbits3.entries), reverse=True)
    assert len(sizes) == 19
    assert sizes == [4320] * 14 + [2160, 1440, 720, 720, 720]
    assert sum(sizes) == 66240
    group_order = math.factorial(6) * math.factorial(3)
    for e in orbits3.entries:
        assert e.size * e.stabilizer_order == group_order
        assert NOT_TREE not in e.type_triple


def test_catalog_match(orbits3):
    report = match_catalog(orbits3)
    assert report.ok, report.mismatches
    assert report.checked == 19


def test_catalog_aliases_cover_all_orbits(orbits3):
    ids = [cid for e in orbits3.entries for cid in e.catalog_ids]
    assert sorted(ids) == list(range(1, 20))


def test_specific_stabilizer_orders():
    for cid, expected in ((1, 1), (2, 6), (10, 2), (12, 3), (19, 6)):
        assert len(stabilizer(catalog.reference_partition(cid))) == expected


def test_tampered_catalog_is_detected(orbits3, monkeypatch):
    monkeypatch.setitem(catalog.EXPECTED_ORBIT_SIZES, 1, 9999)
    report = match_catalog(orbits3)
    assert not report.ok
    assert any("orbit size" in m for m in report.mismatches)


def test_type_multiset_constant_on_orbit(orbits3, ctx3):
    rng = np.random.default_rng(3)
    for _ in range(20):
        i = int(rng.integers(len(ctx3.pset)))
        member = ctx3.pset.partition(i)
        entry = orbits3.entries[orbits3.orbit_id_of(member)]
        member_types = sorted(classify_tree(c) for c in member.color_classes())
        assert member_types == sorted(entry.type_triple)


def test_no_class_has_a_high_degree_vertex(ctx3):
    # no member of the cycle-free homogeneous set has a class of star or
    # near-star shape: max vertex degree within a class is at most 3
    colors = ctx3.pset.colors
    for c in range(3):
        for v in range(1, 7):
            cols = [k for k, (i, j) in enumerate(edge_list(6)) if v in (i, j)]
            degs = (colors[:, cols] == c).sum(axis=1)
            assert int(degs.max()) <= 3


def test_epsilon_formula_sampled(ctx3):
    report = epsilon_formula_check(ctx3.signature, samples=500, seed=123)
    assert report.ok


def test_epsilon_product_formula_d2(ctx2):
    report = epsilon_product_check_d2(ctx2.signature)
    assert report.ok
    assert report.samples == 48


def test_sigma_alone_preserves_d3_signature(ctx3):
    rng = np.random.default_rng(17)
    for _ in range(50):
        i = int(rng.integers(len(ctx3.pset)))
        member = ctx3.pset.partition(i)
        sigma = tuple(int(v) + 1 for v in rng.permutation(6))
        moved = act(PermPair(sigma, (1, 2, 3)), member)
        assert ctx3.signature.signature(moved) == ctx3.signature.signature(member)


def test_flip_equivariance_samples(ctx3):
    from treedet.model import faces_of, normalize_face

    rng = np.random.default_rng(29)
    for _ in range(40):
        i = int(rng.integers(len(ctx3.pset)))
        member = ctx3.pset.partition(i)
        face = faces_of(6)[int(rng.integers(20))]
        sigma = tuple(int(v) + 1 for v in rng.permutation(6))
        tau = tuple(int(v) + 1 for v in rng.permutation(3))
        pair = PermPair(sigma, tau)
        lhs = act(pair, flip(member, face))
        moved_face = normalize_face(*(sigma[v - 1] for v in face), 6)
        rhs = flip(act(pair, member), moved_face)
        assert lhs == rhs


def test_group_elements_cover_group():
    assert sum(1 for _ in group_elements(4, 2)) == 48
    pairs = set()
    for g in group_elements(4, 2):
        pairs.add((g.sigma, g.tau))
    assert len(pairs) == 48


def test_perm_pair_validation():
    with pytest.raises(ValueError):
        PermPair((1, 1, 3), (1, 2))
    with pytest.raises(ValueError):
        act(PermPair((1, 2, 3), (1, 2)), FIG_GOOD)
