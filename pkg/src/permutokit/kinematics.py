"""Kinematic space, its constant slices, and the nearest-neighbour subspace.

Labels are ``"a", 1, ..., n, "b"``; internally ``a`` is index 0 and ``b``
is index ``n + 1``.  Particle labels may be given as ints or digit strings.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .rational import Q, RationalLike, fmt


def _label_index(n: int, label) -> int:
    if label == "a":
        return 0
    if label == "b":
        return n + 1
    k = int(label)
    if not 1 <= k <= n:
        raise ValueError(f"label {label!r} outside a,1..{n},b")
    return k


def label_name(n: int, index: int) -> str:
    if index == 0:
        return "a"
    if index == n + 1:
        return "b"
    return str(index)


@dataclass(frozen=True)
class KinematicPoint:
    """A point of K^n: symmetric, zero diagonal, all row sums zero."""

    n: int
    entries: tuple  # (n+2) x (n+2) tuple of tuples of Fraction

    def __post_init__(self):
        validate_kinematic_matrix(self.entries)
        if len(self.entries) != self.n + 2:
            raise ValueError("matrix size does not match n + 2")

    def s(self, i, j) -> Fraction:
        return self.entries[_label_index(self.n, i)][_label_index(self.n, j)]

    @property
    def labels(self) -> list:
        return [label_name(self.n, k) for k in range(self.n + 2)]

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "labels": self.labels,
            "s": [[fmt(x) for x in row] for row in self.entries],
        }


def validate_kinematic_matrix(entries: Sequence[Sequence[Fraction]]) -> None:
    size = len(entries)
    for i in range(size):
        if len(entries[i]) != size:
            raise ValueError("matrix is not square")
        if entries[i][i] != 0:
            raise ValueError(f"nonzero diagonal entry at {i}")
        for j in range(i + 1, size):
            if entries[i][j] != entries[j][i]:
                raise ValueError(f"matrix not symmetric at ({i},{j})")
        if sum(entries[i]) != 0:
            raise ValueError(f"row {i} does not sum to zero")


def free_coordinate_count(n: int) -> int:
    """dim K^n = (n+2)(n-1)/2: the s_ij (1<=i<j<=n) and s_a1..s_a(n-1)."""
    return (n + 2) * (n - 1) // 2


def complete_kinematic_point(
    n: int,
    s_inner: Sequence[RationalLike],
    s_a: Sequence[RationalLike],
) -> KinematicPoint:
    """Extend the s_ij (i<j<=n, lexicographic) and s_ai to a full point of K^n.

    ``s_a`` may have length n, in which case it must satisfy the mass
    identity sum_i s_ai = -s_{1..n}, or length n-1, in which case s_an is
    solved for.
    """
    if n < 1:
        raise ValueError("n must be positive")
    pairs = list(combinations(range(1, n + 1), 2))
    if len(s_inner) != len(pairs):
        raise ValueError(f"expected {len(pairs)} inner values, got {len(s_inner)}")
    inner = dict(zip(pairs, (Q(v) for v in s_inner)))
    s_a = [Q(v) for v in s_a]
    total_inner = sum(inner.values(), Fraction(0))
    if len(s_a) == n - 1:
        s_a.append(-total_inner - sum(s_a, Fraction(0)))
    elif len(s_a) != n:
        raise ValueError(f"expected {n} or {n - 1} values for s_a, got {len(s_a)}")
    elif sum(s_a, Fraction(0)) + total_inner != 0:
        raise ValueError("inputs violate s_{a1..n} = 0; no kinematic point extends them")

    size = n + 2
    m = [[Fraction(0)] * size for _ in range(size)]
    for (i, j), v in inner.items():
        m[i][j] = m[j][i] = v
    for i in range(1, n + 1):
        m[0][i] = m[i][0] = s_a[i - 1]
    for i in range(1, n + 1):
        m[i][n + 1] = m[n + 1][i] = -sum(m[i][: n + 1], Fraction(0))
    m[0][n + 1] = m[n + 1][0] = -sum(s_a, Fraction(0))
    return KinematicPoint(n, tuple(tuple(row) for row in m))


def subset_sum(entries: Sequence[Sequence[Fraction]], indices: Iterable[int]) -> Fraction:
    """sum of entries[i][j] over unordered pairs i<j drawn from ``indices``."""
    idx = sorted(set(indices))
    return sum((entries[i][j] for i, j in combinations(idx, 2)), Fraction(0))


def s_subset(p: KinematicPoint, J: Iterable) -> Fraction:
    """s_J = sum_{i<j in J} s_ij; zero on singletons."""
    idx = {_label_index(p.n, x) for x in J}
    if not idx:
        raise ValueError("s_J needs a nonempty subset")
    return subset_sum(p.entries, idx)


def s_split(p: KinematicPoint, J1: Iterable, J2: Iterable) -> Fraction:
    """s_{J1|J2} = sum over (i, j) in J1 x J2 of s_ij."""
    a = {_label_index(p.n, x) for x in J1}
    b = {_label_index(p.n, x) for x in J2}
    if not a or not b:
        raise ValueError("both blocks must be nonempty")
    if a & b:
        raise ValueError("blocks must be disjoint")
    return sum((p.entries[i][j] for i in a for j in b), Fraction(0))


def check_mass_identity(p: KinematicPoint) -> bool:
    """True iff s_{a12...n} vanishes."""
    return subset_sum(p.entries, range(p.n + 1)) == 0


@dataclass(frozen=True)
class ConstantMatrix:
    """Nonnegative constants c_ij (1 <= i < j <= n) fixing s_ij = -c_ij."""

    n: int
    c: tuple  # n x n symmetric, zero diagonal, 0-based storage

    def __post_init__(self):
        if len(self.c) != self.n or any(len(row) != self.n for row in self.c):
            raise ValueError("constant matrix has the wrong shape")
        for i in range(self.n):
            if self.c[i][i] != 0:
                raise ValueError("constant matrix must have zero diagonal")
            for j in range(i + 1, self.n):
                if self.c[i][j] != self.c[j][i]:
                    raise ValueError("constant matrix must be symmetric")
                if self.c[i][j] < 0:
                    raise ValueError(f"c_{i + 1}{j + 1} is negative")

    @classmethod
    def from_pairs(cls, n: int, pairs: Mapping) -> "ConstantMatrix":
        """Build from ``{(i, j): value}`` with 1-based labels; missing pairs are 0."""
        m = [[Fraction(0)] * n for _ in range(n)]
        for (i, j), v in pairs.items():
            if i == j or not (1 <= i <= n and 1 <= j <= n):
                raise ValueError(f"bad constant index ({i},{j})")
            m[i - 1][j - 1] = m[j - 1][i - 1] = Q(v)
        return cls(n, tuple(tuple(r) for r in m))

    @classmethod
    def zero(cls, n: int) -> "ConstantMatrix":
        return cls.from_pairs(n, {})

    def __call__(self, i: int, j: int) -> Fraction:
        return self.c[i - 1][j - 1]

    def subset(self, J: Iterable[int]) -> Fraction:
        """c_J = sum_{i<j in J} c_ij."""
        return subset_sum(self.c, (j - 1 for j in J))

    def split(self, A: Iterable[int], B: Iterable[int]) -> Fraction:
        """c_{A|B} = sum over a in A, b in B of c_ab."""
        B = list(B)
        return sum((self.c[a - 1][b - 1] for a in A for b in B), Fraction(0))

    def pairs(self) -> dict:
        return {
            (i, j): self.c[i - 1][j - 1]
            for i, j in combinations(range(1, self.n + 1), 2)
        }

    def to_json(self) -> list:
        return [[fmt(x) for x in row] for row in self.c]


def slice_point(D: ConstantMatrix, x: Sequence[RationalLike]) -> KinematicPoint:
    """The point of K^n(D) with s_ai = x_i; requires x_{1..n} = c_{1..n}."""
    n = D.n
    inner = [-D(i, j) for i, j in combinations(range(1, n + 1), 2)]
    return complete_kinematic_point(n, inner, list(x))


@dataclass(frozen=True)
class NearestNeighborPoint:
    """Point of X^n given by its adjacent invariants (s_12, ..., s_{n-2,n-1})."""

    n: int
    adjacent: tuple

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("X^n needs n >= 3")
        if len(self.adjacent) != self.n - 2:
            raise ValueError(f"X^{self.n} needs {self.n - 2} adjacent values")

    @classmethod
    def of(cls, values: Sequence[RationalLike]) -> "NearestNeighborPoint":
        values = tuple(Q(v) for v in values)
        return cls(len(values) + 2, values)

    def matrix(self) -> tuple:
        return embed_Xn(self)

    def s_subset(self, J: Iterable[int]) -> Fraction:
        return subset_sum(self.matrix(), (j - 1 for j in J))


def embed_Xn(s: NearestNeighborPoint) -> tuple:
    """The n x n matrix of X^n: nearest-neighbour invariants, massive n-th label."""
    n = s.n
    m = [[Fraction(0)] * n for _ in range(n)]
    for i, v in enumerate(s.adjacent):
        m[i][i + 1] = m[i + 1][i] = v
    for i in range(n - 1):
        m[i][n - 1] = m[n - 1][i] = -sum(m[i][: n - 1], Fraction(0))
    m[n - 1][n - 1] = sum(s.adjacent, Fraction(0))
    return tuple(tuple(r) for r in m)


def validate_Xn(entries: Sequence[Sequence[Fraction]]) -> None:
    """Raise ValueError unless ``entries`` satisfies the four X^n conditions."""
    n = len(entries)
    for i in range(n):
        for j in range(n):
            if entries[i][j] != entries[j][i]:
                raise ValueError("matrix not symmetric")
    for i in range(n - 1):
        if entries[i][i] != 0:
            raise ValueError(f"s_{i + 1}{i + 1} must vanish")
        for j in range(n - 1):
            if abs(i - j) > 1 and entries[i][j] != 0:
                raise ValueError(f"non-adjacent s_{i + 1},{j + 1} must vanish")
        if entries[i][n - 1] != -sum(entries[i][: n - 1], Fraction(0)):
            raise ValueError(f"s_{i + 1},{n} violates momentum conservation")
    if entries[n - 1][n - 1] != subset_sum(entries, range(n - 1)):
        raise ValueError("massive entry s_nn must equal s_{1..n-1}")
