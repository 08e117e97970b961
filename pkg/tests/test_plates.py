import random
from fractions import Fraction
from math import comb

import pytest

from permutokit.checks import random_constants, random_slice_point
from permutokit.kinematics import ConstantMatrix
from permutokit.plates import (
    OrderedSetPartition,
    Plate,
    alternating_sum_indicator,
    canonical_form,
    enumerate_ordered_set_partitions,
    plate_indicator,
    translated_plate_params,
)
from permutokit.rational import PoleError
from permutokit.zonotope import contains, vertex, vertices


def fubini(n):
    a = [1]
    for k in range(1, n + 1):
        a.append(sum(comb(k, j) * a[k - j] for j in range(1, k + 1)))
    return a[n]


def test_fubini_oracle():
    assert [fubini(n) for n in range(1, 6)] == [1, 3, 13, 75, 541]


@pytest.mark.parametrize("n", range(1, 7))
def test_partition_counts(n):
    parts = enumerate_ordered_set_partitions(n)
    assert len(parts) == fubini(n)
    assert len({p.blocks for p in parts}) == len(parts)
    keys = [(len(p), tuple(tuple(sorted(b)) for b in p.blocks)) for p in parts]
    assert keys == sorted(keys)


def test_partition_range():
    with pytest.raises(ValueError):
        enumerate_ordered_set_partitions(9)
    with pytest.raises(ValueError):
        OrderedSetPartition.of([[1], [1, 2]])


def test_plate_at_vertex(hexagon_D):
    plate = Plate(OrderedSetPartition.of([[1], [2], [3]]), hexagon_D)
    assert plate_indicator(plate, [0, 2, 4]) == 1
    assert plate_indicator(plate, [-1, 2, 5]) == 0
    lumped = Plate(OrderedSetPartition.of([[1, 2, 3]]), hexagon_D)
    assert plate_indicator(lumped, [10, -4, 0]) == 1
    assert plate_indicator(lumped, [10, -4, 1]) == 0


def test_translation_params(hexagon_D):
    assert translated_plate_params(hexagon_D, (1, 2, 3)) == (0, 2, 4)
    assert translated_plate_params(hexagon_D, (2, 3, 1)) == (0, 1, 5)
    ones = ConstantMatrix.from_pairs(5, {(i, j): 1 for i in range(1, 6) for j in range(i + 1, 6)})
    assert translated_plate_params(ones, (1, 2, 3, 4, 5)) == (0, 1, 2, 3, 4)
    assert translated_plate_params(ConstantMatrix.zero(4), (3, 1, 4, 2)) == (0, 0, 0, 0)


def test_worked_expansion_brackets(hexagon_D):
    # the six plates [[sigma_{d}]] listed in the hexagon expansion
    expected = {
        (1, 2, 3): (0, 2, 4), (2, 1, 3): (0, 2, 4), (2, 3, 1): (0, 1, 5),
        (3, 2, 1): (0, 1, 5), (3, 1, 2): (0, 3, 3), (1, 3, 2): (0, 3, 3),
    }
    for sigma, d in expected.items():
        assert translated_plate_params(hexagon_D, sigma) == d


def test_vertex_plate_contains_vertex(hexagon_D):
    from itertools import permutations
    for sigma in permutations((1, 2, 3)):
        plate = Plate(OrderedSetPartition.of([[s] for s in sigma]), hexagon_D)
        assert plate_indicator(plate, vertex(hexagon_D, sigma)) == 1


def test_alternating_sum_examples(hexagon_D):
    assert alternating_sum_indicator(hexagon_D, [1, 2, 3]) == 1
    assert alternating_sum_indicator(hexagon_D, [6, 0, 0]) == 0


@pytest.mark.parametrize("c12", [Fraction(0), Fraction(1), Fraction(7, 3)])
def test_alternating_sum_segment(c12):
    D = ConstantMatrix.from_pairs(2, {(1, 2): c12})
    for k in range(-4, 9):
        t = c12 * Fraction(k, 4)
        x = (t, c12 - t)
        assert alternating_sum_indicator(D, x) == int(0 <= t <= c12)


@pytest.mark.parametrize("seed", range(12))
def test_alternating_sum_matches_hrep(seed):
    rng = random.Random(seed)
    n = rng.choice([2, 3, 4])
    D = random_constants(rng, n, zero_prob=0.25)
    pts = list(vertices(D)) + [random_slice_point(rng, D) for _ in range(30)]
    for x in pts:
        assert alternating_sum_indicator(D, x) == int(contains(D, x))


def test_alternating_sum_at_barycenter(hexagon_D):
    vs = vertices(hexagon_D)
    bary = tuple(sum(v[i] for v in vs) / len(vs) for i in range(3))
    assert alternating_sum_indicator(hexagon_D, bary) == 1


def test_canonical_form_vanishes_at_zero_constants():
    D = ConstantMatrix.zero(3)
    rng = random.Random(5)
    for _ in range(20):
        x1, x2 = Fraction(rng.randint(1, 40), rng.randint(1, 7)), Fraction(rng.randint(-40, -1), 3)
        if x1 + x2 == 0:
            continue
        assert canonical_form(D, (x1, x2, -x1 - x2)) == 0


def test_canonical_form_closed_form(hexagon_D):
    # hand-expanded six fractions of the worked example
    x1, x2, x3 = Fraction(1), Fraction(7, 2), Fraction(3, 2)
    expected = (
        1 / (x1 * (x1 + x2 - 2)) + 1 / (x1 * (x1 + x3 - 3))
        + 1 / (x2 * (x2 + x1 - 2)) + 1 / (x2 * (x2 + x3 - 1))
        + 1 / (x3 * (x3 + x1 - 3)) + 1 / (x3 * (x3 + x2 - 1))
    )
    assert canonical_form(hexagon_D, (x1, x2, x3)) == expected


def test_canonical_form_pole():
    with pytest.raises(PoleError):
        canonical_form(ConstantMatrix.zero(3), (0, 1, -1))
