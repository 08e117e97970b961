import random
from fractions import Fraction
from itertools import combinations

import pytest
import sympy

from permutokit.associahedron import (
    AssocSpec,
    affine_dim,
    assoc_contains,
    assoc_facets,
    assoc_vertices,
    cyclic_action_check,
    facet_intervals,
    loday_bounds,
    face_lattice,
    minkowski_summands,
    nonadjacent_pairs,
    tight_facets,
    vertex_cones,
)
from permutokit.roottrees import catalan

PENTAGON_ONES = {(0, 1, 2), (0, 3, 0), (1, 0, 2), (2, 0, 1), (2, 1, 0)}


def pentagon(c13, c24, c14):
    return AssocSpec.from_pairs(4, {(1, 3): c13, (2, 4): c24, (1, 4): c14})


def test_pentagon_facets():
    A = pentagon(2, 1, 3)
    assert assoc_facets(A) == [
        ((1, 2), 0), ((2, 3), 0), ((3, 4), 0), ((1, 3), 2), ((2, 4), 1), ((1, 4), 6)]


def test_pentagon_symbolic():
    c13, c24, c14 = sympy.symbols("c13 c24 c14", positive=True)
    A = AssocSpec.from_pairs(4, {(1, 3): c13, (2, 4): c24, (1, 4): c14}, exact=False)
    got = {tuple(sympy.expand(v) for v in x) for x in assoc_vertices(A)}
    want = {
        (0, c13, c24 + c14),
        (0, c13 + c24 + c14, 0),
        (c13, 0, c24 + c14),
        (c13 + c14, 0, c24),
        (c13 + c14, c24, 0),
    }
    assert got == {tuple(sympy.expand(v) for v in x) for x in want}
    assert sympy.expand(A.block_bound(1, 4) - (c13 + c24 + c14)) == 0


def test_pentagon_ones():
    A = AssocSpec.constant(4, 1)
    assert set(assoc_vertices(A)) == PENTAGON_ONES
    assert all(assoc_contains(A, v) for v in PENTAGON_ONES)


def test_contains_examples():
    A = AssocSpec.constant(4, 1)
    assert assoc_contains(A, (0, 1, 2))
    assert assoc_contains(A, (1, 1, 1))
    assert not assoc_contains(A, (3, 0, 0))
    assert not assoc_contains(A, (1, 1, 2))
    with pytest.raises(ValueError):
        assoc_contains(A, (1, 1))


def test_segment_and_point():
    A = AssocSpec.constant(3, 1)
    assert len(facet_intervals(3)) == 2
    assert set(assoc_vertices(A)) == {(0, 1), (1, 0)}
    assert assoc_vertices(AssocSpec.from_pairs(5, {})) == [(0, 0, 0, 0)]


def test_validation():
    with pytest.raises(ValueError):
        AssocSpec.from_pairs(4, {(1, 2): 1})
    with pytest.raises(ValueError):
        AssocSpec.from_pairs(4, {(1, 3): -1})
    with pytest.raises(ValueError):
        AssocSpec.from_pairs(2, {})
    with pytest.raises(ValueError):
        assoc_vertices(AssocSpec.constant(8, 1))


@pytest.mark.parametrize("N", range(3, 8))
def test_facet_count(N):
    assert len(facet_intervals(N)) == N * (N - 1) // 2 - 1
    assert len(nonadjacent_pairs(N)) == (N - 1) * (N - 2) // 2


@pytest.mark.parametrize("N", range(3, 7))
def test_vertex_count_is_catalan(N):
    rng = random.Random(N)
    A = AssocSpec.from_pairs(N, {p: rng.randint(1, 9) for p in nonadjacent_pairs(N)})
    verts = assoc_vertices(A)
    assert len(verts) == catalan(N - 1)
    assert len(vertex_cones(N)) == catalan(N - 1)
    for v in verts:
        assert assoc_contains(A, v)
        assert len(tight_facets(A, v)) == N - 2


@pytest.mark.parametrize("N", range(4, 7))
def test_edges_are_root_directions(N):
    A = AssocSpec.constant(N, 1)
    faces = face_lattice(A)
    edges = [sorted(F) for F, info in faces.items() if info["dim"] == 1]
    for u, v in edges:
        diff = [a - b for a, b in zip(u, v)]
        nz = [k for k, d in enumerate(diff) if d]
        assert len(nz) == 2 and diff[nz[0]] == -diff[nz[1]]


def test_minkowski_summands_pentagon():
    A = pentagon(2, 1, 3)
    assert minkowski_summands(A) == [((1, 2), 2), ((1, 2, 3), 3), ((2, 3), 1)]


def test_random_minkowski_points_inside():
    rng = random.Random(5)
    A = AssocSpec.from_pairs(5, {p: rng.randint(0, 4) for p in nonadjacent_pairs(5)})
    for _ in range(50):
        x = [Fraction(0)] * 4
        for coords, c in minkowski_summands(A):
            w = [Fraction(rng.randint(0, 5)) for _ in coords]
            tot = sum(w) or Fraction(1)
            if not sum(w):
                w[0] = Fraction(1)
            for k, wk in zip(coords, w):
                x[k - 1] += c * wk / tot
        assert assoc_contains(A, x)


@pytest.mark.parametrize("N", range(3, 7))
def test_cyclic_action(N):
    assert cyclic_action_check(N)


def test_affine_dim():
    assert affine_dim([(0, 0), (1, 1), (2, 2)]) == 1
    assert affine_dim([(0, 0, 1)]) == 0
    assert affine_dim([]) == -1


def test_pentagon_lattice():
    faces = face_lattice(AssocSpec.constant(4, 1))
    dims = sorted(info["dim"] for info in faces.values())
    assert dims.count(0) == 5 and dims.count(1) == 5 and dims.count(2) == 1


@pytest.mark.parametrize("N", range(3, 8))
def test_loday_bounds(N):
    A = AssocSpec.constant(N, 1)
    bounds = dict(assoc_facets(A))
    for (a, b), ours, loday in loday_bounds(N):
        assert bounds[(a, b)] == ours
        assert loday - ours == b - a
    assert loday_bounds(4)[-1] == ((1, 4), 3, 6)
