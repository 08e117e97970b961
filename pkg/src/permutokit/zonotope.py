"""The zonotopal generalized permutohedron Z_D.

Z_D is the Minkowski sum of the segments c_ij [e_i, e_j].  It is cut out on
the hyperplane x_{1..n} = c_{1..n} by x_J >= c_J for every proper nonempty
J, and its vertices are v_sigma, indexed by permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, permutations, product
from typing import Sequence

from .kinematics import ConstantMatrix
from .rational import Q, RationalVector, fmt, fmt_vec

MAX_VERTEX_N = 8
MAX_ORACLE_N = 4
MAX_SUPERMODULAR_N = 6


@dataclass(frozen=True)
class ZonotopeSpec:
    D: ConstantMatrix

    @property
    def n(self) -> int:
        return self.D.n


def _spec(Z) -> ZonotopeSpec:
    return Z if isinstance(Z, ZonotopeSpec) else ZonotopeSpec(Z)


def proper_subsets(n: int):
    """Proper nonempty subsets of {1..n}, by size then lexicographically."""
    for r in range(1, n):
        yield from combinations(range(1, n + 1), r)


def hrep(Z) -> list:
    """[(J, c_J)] for every proper nonempty J, plus the full set (an equality)."""
    Z = _spec(Z)
    rows = [(J, Z.D.subset(J)) for J in proper_subsets(Z.n)]
    full = tuple(range(1, Z.n + 1))
    rows.append((full, Z.D.subset(full)))
    return rows


def contains(Z, x: Sequence) -> bool:
    Z = _spec(Z)
    if len(x) != Z.n:
        raise ValueError(f"expected {Z.n} coordinates, got {len(x)}")
    x = [Q(v) for v in x]
    full = range(1, Z.n + 1)
    if sum(x, Fraction(0)) != Z.D.subset(full):
        return False
    return all(
        sum((x[j - 1] for j in J), Fraction(0)) >= Z.D.subset(J)
        for J in proper_subsets(Z.n)
    )


def _check_perm(sigma: Sequence[int], n: int) -> tuple:
    sigma = tuple(int(s) for s in sigma)
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma} is not a permutation of 1..{n}")
    return sigma


def vertex(Z, sigma: Sequence[int]) -> RationalVector:
    """v_sigma: coordinate sigma_j is c_{sigma_1..sigma_(j-1) | sigma_j}."""
    Z = _spec(Z)
    sigma = _check_perm(sigma, Z.n)
    v = [Fraction(0)] * Z.n
    for j in range(1, Z.n):
        v[sigma[j] - 1] = Z.D.split(sigma[:j], [sigma[j]])
    return tuple(v)


def vertices(Z) -> list:
    """Distinct v_sigma, in lexicographic order of sigma (first occurrence)."""
    Z = _spec(Z)
    if not 1 <= Z.n <= MAX_VERTEX_N:
        raise ValueError(f"n must be in 1..{MAX_VERTEX_N}")
    seen = {}
    for sigma in permutations(range(1, Z.n + 1)):
        seen.setdefault(vertex(Z, sigma), None)
    return list(seen)


def pair_index(n: int) -> list:
    """The pairs (i, j), i < j, in the order used for cube parameters t."""
    return list(combinations(range(1, n + 1), 2))


def minkowski_sample(Z, t: Sequence) -> RationalVector:
    """x(t) = sum_{i<j} c_ij (t_ij e_i + (1 - t_ij) e_j)."""
    Z = _spec(Z)
    pairs = pair_index(Z.n)
    if len(t) != len(pairs):
        raise ValueError(f"expected {len(pairs)} cube parameters, got {len(t)}")
    x = [Fraction(0)] * Z.n
    for (i, j), tij in zip(pairs, t):
        tij = Q(tij)
        if not 0 <= tij <= 1:
            raise ValueError(f"t_{i}{j} = {tij} outside [0, 1]")
        c = Z.D(i, j)
        x[i - 1] += c * tij
        x[j - 1] += c * (1 - tij)
    return tuple(x)


def inversion_param(sigma: Sequence[int]) -> tuple:
    """Cube vertex with t_ij = 1 iff j precedes i in sigma (i < j).

    These are the value inversions of sigma, which send x(t) to v_sigma.
    """
    n = len(sigma)
    sigma = _check_perm(sigma, n)
    pos = {v: k for k, v in enumerate(sigma)}
    return tuple(Fraction(int(pos[j] < pos[i])) for i, j in pair_index(n))


def check_supermodularity(D: ConstantMatrix) -> bool:
    """c_I + c_J <= c_{I u J} + c_{I n J} for all proper nonempty I, J."""
    if D.n > MAX_SUPERMODULAR_N:
        raise ValueError(f"n must be at most {MAX_SUPERMODULAR_N}")
    subsets = [frozenset(J) for J in proper_subsets(D.n)]
    cval = {J: D.subset(J) for J in subsets}

    def c(S):
        return cval[S] if S in cval else D.subset(S)

    for I in subsets:
        for J in subsets:
            if cval[I] + cval[J] > c(I | J) + c(I & J):
                return False
    return True


def vertex_oracle(Z) -> list:
    """Brute-force vertex set of the Minkowski sum.

    Maps every 0/1 cube point through :func:`minkowski_sample` and keeps the
    images that are the unique maximizer of some functional w, with w
    running over one representative of every strict ordering of coordinates.
    """
    Z = _spec(Z)
    if not 1 <= Z.n <= MAX_ORACLE_N:
        raise ValueError(f"n must be in 1..{MAX_ORACLE_N}")
    n = Z.n
    k = len(pair_index(n))
    images = sorted({minkowski_sample(Z, t) for t in product((0, 1), repeat=k)})
    found = set()
    for order in permutations(range(n)):
        # 3^rank spreads the weights so no two images tie by accident
        w = [Fraction(0)] * n
        for rank_, coord in enumerate(order):
            w[coord] = Fraction(3) ** rank_ + Fraction(1, 7 + coord)
        scores = [sum((wi * xi for wi, xi in zip(w, x)), Fraction(0)) for x in images]
        best = max(scores)
        winners = [x for x, s in zip(images, scores) if s == best]
        if len(winners) == 1:
            found.add(winners[0])
    return sorted(found)


def to_json(Z) -> dict:
    Z = _spec(Z)
    return {
        "n": Z.n,
        "D": Z.D.to_json(),
        "vertices": [fmt_vec(v) for v in vertices(Z)],
        "hrep": [{"J": list(J), "bound": fmt(b)} for J, b in hrep(Z)],
    }
