"""Biadjoint amplitudes m and m_alpha' restricted to the nearest-neighbour
subspace X^n, and Mizera's sum over partial triangulations.

The exponentials q_i = exp(-2 pi i alpha' s_{i,i+1}) are treated as exact
rational variables; a diagonal covering the block {i..j} then contributes
1 / (1 - q_i q_{i+1} ... q_{j-1}).
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from typing import Sequence

from .kinematics import NearestNeighborPoint
from .rational import PoleError, Q
from .roottrees import compatible


def _adjacent(s) -> tuple:
    if isinstance(s, NearestNeighborPoint):
        return s.adjacent
    return tuple(Q(v) for v in s)


def _product(values) -> Fraction:
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def m_restricted(s) -> Fraction:
    """s_{12...n-1} / (s_12 s_23 ... s_{n-2,n-1})."""
    adj = _adjacent(s)
    denom = _product(adj)
    if denom == 0:
        raise PoleError("some s_{i,i+1} vanishes")
    return sum(adj, Fraction(0)) / denom


def m_facet_sum(s) -> Fraction:
    """sum_i 1 / (product of all s_{k,k+1} except s_{i,i+1})."""
    adj = _adjacent(s)
    if any(v == 0 for v in adj):
        raise PoleError("some s_{i,i+1} vanishes")
    return sum(
        (1 / _product(adj[:i] + adj[i + 1:]) for i in range(len(adj))), Fraction(0)
    )


def m_alpha_restricted(q: Sequence) -> Fraction:
    """(1 - prod q_i) / prod (1 - q_i)."""
    q = [Q(v) for v in q]
    for i, v in enumerate(q, start=1):
        if v == 1:
            raise PoleError(f"q_{i} = 1", where=i)
    return (1 - _product(q)) / _product(1 - v for v in q)


def diagonal_blocks(n: int) -> list:
    """Contiguous blocks {i..j} of {1..n-1} with 2 <= size <= n-2, as (i, j)."""
    return [(i, j) for i, j in combinations(range(1, n), 2) if j - i + 1 <= n - 2]


@lru_cache(maxsize=None)
def _partial_triangulations(n: int) -> tuple:
    cands = diagonal_blocks(n)
    out = []

    def rec(start, chosen):
        out.append(tuple(chosen))
        for k in range(start, len(cands)):
            e = cands[k]
            if all(compatible(e, f) for f in chosen):
                chosen.append(e)
                rec(k + 1, chosen)
                chosen.pop()

    rec(0, [])
    out.sort(key=lambda t: (len(t), t))
    return tuple(frozenset(t) for t in out)


def enumerate_partial_triangulations(n: int) -> list:
    """Noncrossing diagonal sets of the n-gon, as frozensets of blocks (i, j)."""
    if not 4 <= n <= 9:
        raise ValueError("n must be in 4..9")
    return list(_partial_triangulations(n))


def block_q(q: Sequence[Fraction], block: tuple) -> Fraction:
    i, j = block
    return _product(q[i - 1 : j - 1])


def mizera_sum(n: int, q: Sequence) -> Fraction:
    """sum_T (-1)^((n-3) - |T|) prod_{B in T} 1 / (1 - q_B)."""
    q = [Q(v) for v in q]
    if len(q) != n - 2:
        raise ValueError(f"expected {n - 2} q-values, got {len(q)}")
    pole = {}
    for b in diagonal_blocks(n):
        d = 1 - block_q(q, b)
        if d == 0:
            raise PoleError(f"q-product over block {b} equals 1", where=b)
        pole[b] = 1 / d
    total = Fraction(0)
    for T in enumerate_partial_triangulations(n):
        term = _product(pole[b] for b in T)
        total += -term if ((n - 3) - len(T)) % 2 else term
    return total


def alpha_limit_check(s, a: float) -> float:
    """|a^(n-3) m_alpha / m - 1| with q_i = exp(-a s_{i,i+1}); floats only."""
    if not 0 < a <= 1e-2:
        raise ValueError("a must lie in (0, 1e-2]")
    adj = [float(v) for v in _adjacent(s)]
    n = len(adj) + 2
    exact_m = float(m_restricted(_adjacent(s)))
    # 1 - exp(-u) = -expm1(-u), accurate for small u
    num = -math.expm1(-a * sum(adj))
    den = 1.0
    for v in adj:
        den *= -math.expm1(-a * v)
    approx = a ** (n - 3) * num / den
    return abs(approx / exact_m - 1.0)
