"""The kinematic associahedron A(D).

Coordinates are x_i = s_{i,i+1} for i = 1..N-1; every non-adjacent pair
(i, j) inside {1..N} is frozen at s_ij = -c_ij.  Facets are the blocks
s_{[a,b]} >= 0, i.e.

    x_a + ... + x_{b-1} >= c_[a,b] = sum of c_ij over a <= i, j <= b, j - i >= 2.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations
from math import comb
from typing import Mapping, Sequence

from .rational import Q, RationalVector, fmt, fmt_vec, rank

MAX_VERTEX_N = 7


@dataclass(frozen=True)
class AssocSpec:
    N: int
    C: tuple  # sorted ((i, j), value) for every pair with j - i >= 2

    def __post_init__(self):
        if self.N < 3:
            raise ValueError("N must be at least 3")
        keys = [k for k, _ in self.C]
        if keys != nonadjacent_pairs(self.N):
            raise ValueError("constants must cover exactly the non-adjacent pairs")

    @classmethod
    def from_pairs(cls, N: int, pairs: Mapping, exact: bool = True) -> "AssocSpec":
        """Missing pairs default to 0.

        With ``exact=False`` the values are kept as given, which lets symbolic
        scalars flow through :func:`assoc_vertices`.
        """
        conv = Q if exact else (lambda v: v)
        vals = {}
        for (i, j), v in pairs.items():
            i, j = min(i, j), max(i, j)
            if (i, j) not in set(nonadjacent_pairs(N)):
                raise ValueError(f"({i},{j}) is not a non-adjacent pair of 1..{N}")
            v = conv(v)
            if exact and v < 0:
                raise ValueError(f"c_{i}{j} is negative")
            vals[(i, j)] = v
        zero = Fraction(0) if exact else 0
        obj = cls.__new__(cls)
        object.__setattr__(obj, "N", N)
        object.__setattr__(obj, "C", tuple((p, vals.get(p, zero)) for p in nonadjacent_pairs(N)))
        if exact:
            obj.__post_init__()
        return obj

    @classmethod
    def constant(cls, N: int, value=1) -> "AssocSpec":
        return cls.from_pairs(N, {p: value for p in nonadjacent_pairs(N)})

    def c(self, i: int, j: int):
        return dict(self.C)[(min(i, j), max(i, j))]

    def block_bound(self, a: int, b: int):
        """c_[a,b]."""
        return sum(
            (v for (i, j), v in self.C if a <= i and j <= b),
            Fraction(0) if all(isinstance(v, Fraction) for _, v in self.C) else 0,
        )


def nonadjacent_pairs(N: int) -> list:
    return [(i, j) for i, j in combinations(range(1, N + 1), 2) if j - i >= 2]


def facet_intervals(N: int) -> list:
    """Intervals [a, b] of {1..N} with 2 <= length <= N-1."""
    return [
        (a, b)
        for length in range(2, N)
        for a in range(1, N - length + 2)
        for b in [a + length - 1]
    ]


def assoc_facets(A: AssocSpec) -> list:
    """[((a, b), bound)] for each facet; the final entry is the equality [1, N]."""
    rows = [((a, b), A.block_bound(a, b)) for a, b in facet_intervals(A.N)]
    rows.append(((1, A.N), A.block_bound(1, A.N)))
    return rows


def loday_bounds(N: int) -> list:
    """Facet bounds at c = 1 in both counting conventions.

    Returns [((a, b), nonadjacent, loday)] where ``nonadjacent`` counts the
    pairs j - i >= 2 inside [a, b] (what A(D) uses) and ``loday`` is
    binom(|I| + 1, 2) with I = {a..b-1}.  They differ by |I|, the adjacent
    pairs, which are coordinates here rather than constants.
    """
    return [
        ((a, b), comb(b - a + 1, 2) - (b - a), comb(b - a + 1, 2))
        for a, b in facet_intervals(N) + [(1, N)]
    ]


def _block(x: Sequence, a: int, b: int) -> Fraction:
    return sum((x[i - 1] for i in range(a, b)), Fraction(0))


def assoc_contains(A: AssocSpec, x: Sequence) -> bool:
    if len(x) != A.N - 1:
        raise ValueError(f"expected {A.N - 1} coordinates, got {len(x)}")
    x = [Q(v) for v in x]
    if _block(x, 1, A.N) != A.block_bound(1, A.N):
        return False
    return all(_block(x, a, b) >= bound for (a, b), bound in assoc_facets(A)[:-1])


def tight_facets(A: AssocSpec, x: Sequence) -> frozenset:
    return frozenset(
        (a, b) for (a, b), bound in assoc_facets(A)[:-1] if _block(x, a, b) == bound
    )


def minkowski_summands(A: AssocSpec) -> list:
    """[(coordinate set, dilation)]: c_ij dilates the simplex on {i..j-1}."""
    return [(tuple(range(i, j)), v) for (i, j), v in A.C]


def assoc_vertices(A: AssocSpec) -> list:
    """Vertices of the Minkowski sum of dilated simplices.

    For each strict ordering of the N-1 coordinates every simplex contributes
    its vertex on the highest-ranked coordinate; the distinct sums are the
    vertices, returned in order of first appearance.
    """
    if not 3 <= A.N <= MAX_VERTEX_N:
        raise ValueError(f"N must be in 3..{MAX_VERTEX_N}")
    d = A.N - 1
    summands = minkowski_summands(A)
    zero = A.C[0][1] * 0 if A.C else Fraction(0)
    seen = {}
    for order in permutations(range(1, d + 1)):
        score = {coord: r for r, coord in enumerate(order)}
        x = [zero] * d
        for coords, v in summands:
            best = max(coords, key=score.__getitem__)
            x[best - 1] = x[best - 1] + v
        seen.setdefault(tuple(x), None)
    return list(seen)


def _relabel(J: frozenset, total: int) -> frozenset:
    return frozenset(j % total + 1 for j in J)


def _reduce(J: frozenset, total: int) -> frozenset:
    """Use s_I = s_{I^c} to remove the top label ``total``."""
    if total in J:
        return frozenset(range(1, total + 1)) - J
    return J


def cyclic_action_check(N: int) -> bool:
    """Rotating labels 1..N+1 permutes the facet blocks and the vertex cones."""
    if not 3 <= N <= MAX_VERTEX_N:
        raise ValueError(f"N must be in 3..{MAX_VERTEX_N}")
    total = N + 1
    facets = [frozenset(range(a, b + 1)) for a, b in facet_intervals(N)]
    mapped = Counter(_reduce(_relabel(J, total), total) for J in facets)
    if mapped != Counter(facets):
        return False
    cones = vertex_cones(N)
    mapped_cones = {
        frozenset(_reduce(_relabel(J, total), total) for J in cone) for cone in cones
    }
    return mapped_cones == set(cones)


def vertex_cones(N: int) -> list:
    """Maximal sets of pairwise nested-or-disjoint facet blocks (as label sets)."""
    blocks = [frozenset(range(a, b + 1)) for a, b in facet_intervals(N)]
    out = []
    for sub in combinations(blocks, N - 2):
        if all(p <= q or q <= p or not (p & q) for p, q in combinations(sub, 2)):
            out.append(frozenset(sub))
    return out


def affine_dim(points: Sequence[Sequence]) -> int:
    if not points:
        return -1
    base = points[0]
    return rank([[a - b for a, b in zip(p, base)] for p in points[1:]])


def face_lattice(A: AssocSpec) -> dict:
    """Nonempty faces keyed by vertex set, each with its tight facets and dimension.

    Computed directly from the vertex list: every set of facets cuts out the
    vertices on which it is tight.
    """
    verts = assoc_vertices(A)
    tight = {v: tight_facets(A, v) for v in verts}
    facets = [f for f, _ in assoc_facets(A)[:-1]]
    faces = {}
    for r in range(len(facets) + 1):
        for F in combinations(facets, r):
            on = frozenset(v for v in verts if set(F) <= tight[v])
            if on and on not in faces:
                faces[on] = {
                    "facets": frozenset.intersection(*(tight[v] for v in on)),
                    "dim": affine_dim(sorted(on)),
                }
    return faces


def to_json(A: AssocSpec) -> dict:
    return {
        "N": A.N,
        "C": {f"{i},{j}": fmt(v) for (i, j), v in A.C},
        "vertices": [fmt_vec(v) for v in assoc_vertices(A)],
        "hrep": [
            {"J": list(range(a, b)), "bound": fmt(bound)}
            for (a, b), bound in assoc_facets(A)
        ],
    }
