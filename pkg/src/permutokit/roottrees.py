"""Tree triangulation of the root cone <e_1 - e_2, ..., e_{m-1} - e_m>_+.

An edge (i, j) with i < j stands for the root e_i - e_j and for the interval
{i, ..., j}.  A tree is a maximal family of such intervals, pairwise nested
or disjoint, containing (1, m); a partial tree is any nested-or-disjoint
subfamily that still contains (1, m).
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import comb
from typing import Iterable, Sequence

from .rational import Q, solve_exact

MAX_TREE_M = 10
MAX_PARTIAL_M = 9


def compatible(e: tuple, f: tuple) -> bool:
    """Intervals {e0..e1} and {f0..f1} are nested or disjoint."""
    (a, b), (c, d) = e, f
    if b < c or d < a:
        return True
    return (a <= c and d <= b) or (c <= a and b <= d)


def is_laminar(edges: Iterable[tuple]) -> bool:
    edges = list(edges)
    return all(compatible(e, f) for e, f in combinations(edges, 2))


def catalan(k: int) -> int:
    return comb(2 * k, k) // (k + 1)


@dataclass(frozen=True)
class IntervalTree:
    m: int
    edges: frozenset

    def __post_init__(self):
        _validate(self.m, self.edges)
        if len(self.edges) != self.m - 1:
            raise ValueError(f"a full tree has {self.m - 1} edges")

    def sorted_edges(self) -> list:
        return sorted(self.edges)


@dataclass(frozen=True)
class PartialTree:
    m: int
    edges: frozenset

    def __post_init__(self):
        _validate(self.m, self.edges)

    def sorted_edges(self) -> list:
        return sorted(self.edges)

    @property
    def optional_edges(self) -> frozenset:
        return self.edges - {(1, self.m)}


def _validate(m: int, edges: frozenset) -> None:
    if (1, m) not in edges:
        raise ValueError(f"edge (1,{m}) is mandatory")
    for i, j in edges:
        if not 1 <= i < j <= m:
            raise ValueError(f"bad edge ({i},{j})")
    if not is_laminar(edges):
        raise ValueError("edges are not nested-or-disjoint")


@dataclass(frozen=True)
class SimplicialCone:
    """Conical hull of roots e_i - e_j, given as index pairs."""

    generators: tuple
    dim: int = field(default=0)

    def __post_init__(self):
        if not self.dim:
            top = max((j for _, j in self.generators), default=0)
            object.__setattr__(self, "dim", top)

    @classmethod
    def of(cls, edges: Iterable[tuple], dim: int = 0) -> "SimplicialCone":
        return cls(tuple(sorted(edges)), dim)


def root_vector(i: int, j: int, dim: int) -> tuple:
    v = [Fraction(0)] * dim
    v[i - 1] += 1
    v[j - 1] -= 1
    return tuple(v)


def _splits(i: int, j: int) -> list:
    """All binary-tree interval families on {i..j} (each includes (i, j))."""
    if i == j:
        return [frozenset()]
    out = []
    for k in range(i, j):
        for left in _splits(i, k):
            for right in _splits(k + 1, j):
                out.append(left | right | {(i, j)})
    return out


@lru_cache(maxsize=None)
def _trees(m: int) -> tuple:
    fams = sorted(_splits(1, m), key=lambda s: sorted(s))
    return tuple(IntervalTree(m, f) for f in fams)


def enumerate_trees(m: int) -> list:
    """Trees^m by recursive splitting of {1..m}; Catalan(m-1) of them."""
    if not 2 <= m <= MAX_TREE_M:
        raise ValueError(f"m must be in 2..{MAX_TREE_M}")
    return list(_trees(m))


def optional_intervals(m: int) -> list:
    """All edges (i, j) other than (1, m) that can occur in a tree."""
    return [e for e in combinations(range(1, m + 1), 2) if e != (1, m)]


@lru_cache(maxsize=None)
def _partial_trees(m: int) -> tuple:
    # Grow laminar families edge by edge in a fixed order; each family is
    # produced once because edges are only appended in increasing order.
    cands = optional_intervals(m)
    out = []

    def rec(start, chosen):
        out.append(frozenset(chosen) | {(1, m)})
        for k in range(start, len(cands)):
            e = cands[k]
            if all(compatible(e, f) for f in chosen):
                chosen.append(e)
                rec(k + 1, chosen)
                chosen.pop()

    rec(0, [])
    out.sort(key=lambda s: (len(s), sorted(s)))
    return tuple(PartialTree(m, f) for f in out)


def enumerate_partial_trees(m: int) -> list:
    """All partial trees, ordered by edge count then lexicographically."""
    if not 2 <= m <= MAX_PARTIAL_M:
        raise ValueError(f"m must be in 2..{MAX_PARTIAL_M}")
    return list(_partial_trees(m))


def brute_force_trees(m: int) -> list:
    """Independent check: scan all (m-2)-subsets of optional edges."""
    out = []
    for sub in combinations(optional_intervals(m), m - 2):
        if is_laminar(sub):
            out.append(frozenset(sub) | {(1, m)})
    return sorted(out, key=sorted)


def brute_force_partial_trees(m: int) -> list:
    cands = optional_intervals(m)
    out = []
    for r in range(len(cands) + 1):
        for sub in combinations(cands, r):
            if is_laminar(sub):
                out.append(frozenset(sub) | {(1, m)})
    return out


def cone_of(tree) -> SimplicialCone:
    return SimplicialCone.of(tree.edges, tree.m)


def cone_contains(cone: SimplicialCone, v: Sequence) -> tuple:
    """(member, interior) for v against the cone.

    member: v = sum t_a (e_i - e_j) with every t_a >= 0;
    interior: additionally every t_a > 0 (relative interior).
    """
    v = tuple(Q(x) for x in v)
    dim = max(cone.dim, len(v))
    if len(v) < dim:
        v = v + (Fraction(0),) * (dim - len(v))
    cols = [root_vector(i, j, dim) for i, j in cone.generators]
    t = solve_exact(cols, v)
    if t is None:
        return False, False
    return all(x >= 0 for x in t), all(x > 0 for x in t)


def consecutive_root_point(coeffs: Sequence) -> tuple:
    """sum_i coeffs[i] (e_{i+1} - e_{i+2}) as a vector of length len(coeffs)+1."""
    m = len(coeffs) + 1
    v = [Fraction(0)] * m
    for i, t in enumerate(coeffs):
        v[i] += Q(t)
        v[i + 1] -= Q(t)
    return tuple(v)


def partition_check(m: int, samples: int, seed: int = 0) -> dict:
    """Sample the root cone and test that the tree cones cover it without overlap.

    Coefficients are random positive rationals, so every sample is generic
    with probability one; a sample that lands on a shared wall is recorded
    but only counted against the check if it is interior to two cones.
    """
    if not 2 <= m <= 6:
        raise ValueError("m must be in 2..6")
    rng = random.Random(seed)
    trees = enumerate_trees(m)
    cones = [cone_of(t) for t in trees]
    failures = []
    exactly_one = 0
    for _ in range(samples):
        coeffs = [Fraction(rng.randint(1, 997), rng.randint(1, 97)) for _ in range(m - 1)]
        v = consecutive_root_point(coeffs)
        results = [cone_contains(c, v) for c in cones]
        members = sum(1 for mem, _ in results if mem)
        interiors = sum(1 for _, inn in results if inn)
        if interiors == 1:
            exactly_one += 1
        if members < 1 or interiors > 1:
            failures.append({"point": v, "members": members, "interiors": interiors})
    return {
        "m": m,
        "samples": samples,
        "exactly_one_interior": exactly_one,
        "failures": failures,
        "passed": not failures,
    }


def tree_to_assoc_face(pt) -> list:
    """Facet intervals of the dual associahedron face.

    Each optional edge (i, j) becomes the Mandelstam block s_{i..j}
    (returned as the interval (i, j)); the mandatory edge (1, m) is the
    full block, which vanishes identically, and is dropped.
    """
    return sorted(pt.edges - {(1, pt.m)})


def duality_check(m: int) -> dict:
    """Compare partial trees with the faces of the associahedron (N = m, c = 1).

    Faces are computed from the associahedron's own vertices; the check
    requires the map pt -> face cut out by tree_to_assoc_face(pt) to be a
    bijection that sends k optional edges to dimension (m-2)-k and reverses
    inclusion, covering relations included.
    """
    from .associahedron import AssocSpec, assoc_vertices, face_lattice, tight_facets

    if not 3 <= m <= 6:
        raise ValueError("m must be in 3..6")
    A = AssocSpec.constant(m, 1)
    faces = face_lattice(A)
    verts = assoc_vertices(A)
    tight = {v: tight_facets(A, v) for v in verts}
    partial = enumerate_partial_trees(m)

    image = {}
    problems = []
    for pt in partial:
        F = set(tree_to_assoc_face(pt))
        on = frozenset(v for v in verts if F <= tight[v])
        if on not in faces:
            problems.append(f"{sorted(pt.edges)} cuts out no face")
            continue
        if faces[on]["dim"] != (m - 2) - len(F):
            problems.append(f"{sorted(pt.edges)} has face dimension {faces[on]['dim']}")
        image[pt] = on

    if len(set(image.values())) != len(image):
        problems.append("map is not injective")
    if set(image.values()) != set(faces):
        problems.append("map misses some faces")

    by_dim_trees = {}
    for pt in partial:
        d = (m - 2) - len(pt.optional_edges)
        by_dim_trees[d] = by_dim_trees.get(d, 0) + 1
    by_dim_faces = {}
    for f in faces.values():
        by_dim_faces[f["dim"]] = by_dim_faces.get(f["dim"], 0) + 1
    if by_dim_trees != by_dim_faces:
        problems.append("cardinalities per dimension differ")

    covers_checked = 0
    for p in partial:
        for q in partial:
            if p is q or p not in image or q not in image:
                continue
            tree_le = p.edges <= q.edges
            face_ge = image[q] <= image[p]
            if tree_le != face_ge:
                problems.append(f"inclusion not reversed for {sorted(p.edges)}, {sorted(q.edges)}")
            if tree_le and len(q.edges) == len(p.edges) + 1:
                covers_checked += 1
                if faces[image[p]]["dim"] != faces[image[q]]["dim"] + 1:
                    problems.append("covering relation not preserved")
    return {
        "m": m,
        "partial_trees": len(partial),
        "faces": len(faces),
        "by_dimension": {str(k): v for k, v in sorted(by_dim_faces.items())},
        "covers": covers_checked,
        "failures": problems,
        "passed": not problems,
    }
