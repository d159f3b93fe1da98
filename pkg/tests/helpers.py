"""Independent oracles and input generators shared by the tests.

Everything in here deliberately avoids the library's own data paths:
the enumeration oracle walks all colorings directly, the flip oracle
re-derives partners from first principles, and the tensor generators
only use numpy RNGs and fractions.
"""

from fractions import Fraction
from itertools import product

import numpy as np

K4_EDGES = [(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]


def _acyclic(edge_subset, n=4):
    parent = list(range(n + 1))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    for (i, j) in edge_subset:
        ri, rj = find(i), find(j)
        if ri == rj:
            return False
        parent[ri] = rj
    return True


def oracle_enumerate_d2(cycle_free=True):
    """All homogeneous (cycle-free) 2-colorings of K_4, as color tuples."""
    found = []
    for colors in product((0, 1), repeat=6):
        if sum(colors) != 3:
            continue
        if cycle_free:
            cls0 = [e for e, c in zip(K4_EDGES, colors) if c == 0]
            cls1 = [e for e, c in zip(K4_EDGES, colors) if c == 1]
            if not (_acyclic(cls0) and _acyclic(cls1)):
                continue
        found.append(colors)
    return found


def oracle_flip_d2(colors, face):
    """Flip partner of a d = 2 coloring of K_4, derived from scratch."""
    pos = [K4_EDGES.index(tuple(sorted((face[a], face[b])))) for a, b in ((0, 1), (0, 2), (1, 2))]
    valid = set(oracle_enumerate_d2())
    survivors = []
    for cand in product((0, 1), repeat=3):
        trial = list(colors)
        for k, c in zip(pos, cand):
            trial[k] = c
        trial = tuple(trial)
        ndiff = sum(1 for k in pos if trial[k] != colors[k])
        if ndiff >= 2 and trial in valid:
            survivors.append(trial)
    assert len(survivors) == 1, survivors
    return survivors[0]


def rand_fraction(rng, max_num=8, denominators=(1, 2, 3)):
    num = int(rng.integers(-max_num, max_num + 1))
    den = int(denominators[rng.integers(len(denominators))])
    return Fraction(num, den)


def rand_int_tensor(rng, d, lo=-8, hi=8):
    """Integer-valued edge vectors for K_{2d}."""
    n = 2 * d
    E = n * (n - 1) // 2
    return tuple(
        tuple(Fraction(int(x)) for x in rng.integers(lo, hi + 1, size=d)) for _ in range(E)
    )


def rand_rational_tensor(rng, d, max_num=8, denominators=(1, 2, 3)):
    """Rational edge vectors; the coordinates of one edge share a
    denominator, so clearing denominators keeps numerators small."""
    n = 2 * d
    E = n * (n - 1) // 2
    out = []
    for _ in range(E):
        den = int(denominators[rng.integers(len(denominators))])
        out.append(
            tuple(Fraction(int(x), den) for x in rng.integers(-max_num, max_num + 1, size=d))
        )
    return tuple(out)


def with_constant_face(rng, vectors, d, n=None):
    """Overwrite a random face's three edges with one shared vector."""
    from treedet.model import face_edge_indices, faces_of

    n = n or 2 * d
    faces = faces_of(n)
    face = faces[int(rng.integers(len(faces)))]
    den = int((1, 2, 3)[rng.integers(3)])
    shared = tuple(Fraction(int(x), den) for x in rng.integers(-8, 9, size=d))
    vectors = list(vectors)
    for k in face_edge_indices(face, n):
        vectors[k] = shared
    return tuple(vectors), face
