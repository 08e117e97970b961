"""Continuous and discrete Laplace transforms of root cones, and the
rational-function identities of the tree triangulation.

For the cone <e_{i_1} - e_{j_1}, ...>_+ the continuous transform is
1 / prod (y_i - y_j) and the discrete one is prod 1 / (1 - x_i / x_j).
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .rational import PoleError, Q
from .roottrees import SimplicialCone, enumerate_partial_trees, enumerate_trees


def _gens(cone) -> Iterable[tuple]:
    if isinstance(cone, SimplicialCone):
        return cone.generators
    return getattr(cone, "edges", cone)


def lt_continuous(cone, y: Sequence) -> Fraction:
    y = [Q(v) for v in y]
    out = Fraction(1)
    for i, j in _gens(cone):
        d = y[i - 1] - y[j - 1]
        if d == 0:
            raise PoleError(f"y_{i} = y_{j}", where=(i, j))
        out /= d
    return out


def lt_discrete(cone, x: Sequence) -> Fraction:
    x = [Q(v) for v in x]
    out = Fraction(1)
    for i, j in _gens(cone):
        if x[j - 1] == 0:
            raise PoleError(f"x_{j} = 0", where=(i, j))
        d = 1 - x[i - 1] / x[j - 1]
        if d == 0:
            raise PoleError(f"x_{i} = x_{j}", where=(i, j))
        out /= d
    return out


def consecutive(m: int) -> list:
    return [(i, i + 1) for i in range(1, m)]


def triangulation_sides(m: int, y: Sequence) -> tuple:
    """(LT of the root cone, sum of LT over the tree cones)."""
    lhs = lt_continuous(consecutive(m), y)
    rhs = sum((lt_continuous(t.edges, y) for t in enumerate_trees(m)), Fraction(0))
    return lhs, rhs


def check_triangulation_identity(m: int, y: Sequence) -> bool:
    lhs, rhs = triangulation_sides(m, y)
    return lhs == rhs


def cyclic_sum(m: int, y: Sequence) -> Fraction:
    """Sum over the m rotations r of 1 / prod_i (y_{r(i)} - y_{r(i+1)})."""
    y = [Q(v) for v in y]
    total = Fraction(0)
    for shift in range(m):
        order = [(shift + k) % m + 1 for k in range(m)]
        total += lt_continuous(list(zip(order, order[1:])), y)
    return total


def check_cyclic_sum_vanishes(m: int, y: Sequence) -> bool:
    return cyclic_sum(m, y) == 0


def discrete_ie_sides(m: int, x: Sequence) -> tuple:
    """(discrete LT of the root cone, alternating sum over partial trees).

    A partial tree with k edges (the mandatory one included) carries the
    sign (-1)^(m-1-k).
    """
    lhs = lt_discrete(consecutive(m), x)
    rhs = Fraction(0)
    for pt in enumerate_partial_trees(m):
        sign = -1 if (m - 1 - len(pt.edges)) % 2 else 1
        rhs += sign * lt_discrete(pt.edges, x)
    return lhs, rhs


def check_discrete_inclusion_exclusion(m: int, x: Sequence) -> bool:
    lhs, rhs = discrete_ie_sides(m, x)
    return lhs == rhs


# The five-point KLT diagonal <C(12345), C(12345)>: a constant term, five
# single poles and five compatible pairs, written with label 5 present.
KLT5_TERMS = (
    (1, ()),
    (-1, ((1, 2),)),
    (-1, ((2, 3),)),
    (-1, ((3, 4),)),
    (-1, ((4, 5),)),
    (-1, ((5, 1),)),
    (1, ((1, 2), (3, 4))),
    (1, ((2, 3), (4, 5))),
    (1, ((3, 4), (5, 1))),
    (1, ((4, 5), (1, 2))),
    (1, ((5, 1), (2, 3))),
)


def eliminate_top_label(block: Iterable[int], total: int = 5) -> tuple:
    """Rewrite s_B without the label ``total`` via s_B = s_{B^c}; returns (i, j) for {i..j}."""
    B = set(block)
    if total in B:
        B = set(range(1, total + 1)) - B
    lo, hi = min(B), max(B)
    if B != set(range(lo, hi + 1)):
        raise ValueError(f"{sorted(block)} does not reduce to a contiguous block")
    return lo, hi


def klt_diagonal_match(x: Sequence) -> dict:
    """Pair the eleven KLT-diagonal terms with the partial trees of m = 4.

    After removing label 5, each pole 1/(1 - e^{2 pi i s_{i..j}}) becomes
    1/(1 - x_i/x_j); a term times the mandatory factor 1/(1 - x_1/x_4) must
    equal the discrete LT of the partial tree with the same edges, with the
    same sign.  The totals are compared as well.
    """
    x = [Q(v) for v in x]
    m = 4
    mandatory = lt_discrete([(1, m)], x)
    trees = {pt.edges: pt for pt in enumerate_partial_trees(m)}
    pairs = []
    klt_total = Fraction(0)
    used = set()
    ok = True
    for sign, blocks in KLT5_TERMS:
        edges = []
        for a, b in blocks:
            lab = {a, b}
            edges.append(eliminate_top_label(lab))
        value = Fraction(sign)
        for i, j in edges:
            d = 1 - x[i - 1] / x[j - 1]
            if d == 0:
                raise PoleError(f"x_{i} = x_{j}", where=(i, j))
            value /= d
        klt_total += value
        key = frozenset(edges) | {(1, m)}
        pt = trees.get(key)
        tree_sign = -1 if (m - 1 - len(key)) % 2 else 1
        match = (
            pt is not None
            and key not in used
            and value * mandatory == tree_sign * lt_discrete(pt.edges, x)
        )
        used.add(key)
        ok &= match
        pairs.append(
            {
                "klt_term": [list(b) for b in blocks],
                "blocks": [list(e) for e in edges],
                "tree": sorted(key),
                "match": match,
            }
        )
    lhs, rhs = discrete_ie_sides(m, x)
    ok &= len(used) == len(trees) == 11
    ok &= klt_total * mandatory == rhs == lhs
    return {"terms": pairs, "klt_total": klt_total, "passed": ok}
