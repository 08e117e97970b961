"""Translated permutohedral cones (plates) and the alternating-sum identity.

A plate is indexed by an ordered set partition (S_1, ..., S_k) of
{1, ..., n}; in the coordinates x_i = s_ai it is the closed cone

    x_{S_1 u ... u S_j} >= c_{S_1 u ... u S_j}   (j < k),   x_{1..n} = c_{1..n}.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, permutations
from typing import Sequence

from .kinematics import ConstantMatrix
from .rational import PoleError, Q

MAX_PARTITION_N = 8


@dataclass(frozen=True)
class OrderedSetPartition:
    blocks: tuple  # tuple of frozensets

    def __post_init__(self):
        seen = set()
        for b in self.blocks:
            if not b:
                raise ValueError("empty block")
            if seen & b:
                raise ValueError("blocks overlap")
            seen |= b
        if seen != set(range(1, len(seen) + 1)):
            raise ValueError("blocks must cover 1..n")

    @classmethod
    def of(cls, blocks) -> "OrderedSetPartition":
        return cls(tuple(frozenset(int(x) for x in b) for b in blocks))

    @property
    def n(self) -> int:
        return sum(len(b) for b in self.blocks)

    def __len__(self) -> int:
        return len(self.blocks)

    def flags(self):
        """Cumulative unions S_1, S_1 u S_2, ..., excluding the full set."""
        acc = frozenset()
        for b in self.blocks[:-1]:
            acc = acc | b
            yield acc

    def to_json(self) -> list:
        return [sorted(b) for b in self.blocks]

    def __str__(self) -> str:
        return "|".join("".join(map(str, sorted(b))) for b in self.blocks)


@dataclass(frozen=True)
class Plate:
    partition: OrderedSetPartition
    D: ConstantMatrix


def _on_slice(D: ConstantMatrix, x: Sequence[Fraction]) -> bool:
    return sum(x, Fraction(0)) == D.subset(range(1, D.n + 1))


def plate_indicator(plate: Plate, x: Sequence) -> int:
    D = plate.D
    if len(x) != D.n or plate.partition.n != D.n:
        raise ValueError("dimension mismatch")
    x = [Q(v) for v in x]
    if not _on_slice(D, x):
        return 0
    for flag in plate.partition.flags():
        if sum((x[i - 1] for i in flag), Fraction(0)) < D.subset(flag):
            return 0
    return 1


def translated_plate_params(D: ConstantMatrix, sigma: Sequence[int]) -> tuple:
    """d_j = sum over earlier entries i of sigma of c_{sigma_i sigma_j}, in sigma order."""
    return tuple(D.split(sigma[:j], [sigma[j]]) for j in range(len(sigma)))


@lru_cache(maxsize=None)
def _ordered_set_partitions(n: int) -> tuple:
    out = []
    labels = list(range(1, n + 1))

    def rec(remaining, prefix):
        if not remaining:
            out.append(tuple(prefix))
            return
        for r in range(1, len(remaining) + 1):
            for block in combinations(remaining, r):
                rest = [x for x in remaining if x not in block]
                rec(rest, prefix + [block])

    rec(labels, [])
    out.sort(key=lambda p: (len(p), p))
    return tuple(OrderedSetPartition(tuple(frozenset(b) for b in p)) for p in out)


def enumerate_ordered_set_partitions(n: int) -> list:
    """All ordered set partitions of {1..n}, by length then lexicographically."""
    if not 1 <= n <= MAX_PARTITION_N:
        raise ValueError(f"n must be in 1..{MAX_PARTITION_N}")
    return list(_ordered_set_partitions(n))


def alternating_sum_indicator(D: ConstantMatrix, x: Sequence) -> int:
    """sum_T (-1)^(n - len T) [[T]]_D evaluated at x."""
    n = D.n
    total = 0
    for T in enumerate_ordered_set_partitions(n):
        if plate_indicator(Plate(T, D), x):
            total += -1 if (n - len(T)) % 2 else 1
    return total


def canonical_form(D: ConstantMatrix, x: Sequence) -> Fraction:
    """sum over sigma of 1 / prod_{i<n} s_{a sigma_1..sigma_i}, with s_aJ = x_J - c_J."""
    n = D.n
    x = [Q(v) for v in x]
    total = Fraction(0)
    for sigma in permutations(range(1, n + 1)):
        denom = Fraction(1)
        for i in range(1, n):
            head = sigma[:i]
            s_aJ = sum((x[j - 1] for j in head), Fraction(0)) - D.subset(head)
            if s_aJ == 0:
                raise PoleError(f"s_a{''.join(map(str, head))} vanishes", where=head)
            denom *= s_aJ
        total += 1 / denom
    return total
