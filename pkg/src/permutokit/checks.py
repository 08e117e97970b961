"""Seeded property checks behind ``permutokit check``.

Every check draws its inputs from ``random.Random(seed)`` (Mersenne
Twister, stable across platforms and Python versions) and returns a
:class:`CheckReport`.
"""

from __future__ import annotations

import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations

from . import amplitudes, associahedron, laplace, plates, roottrees, zonotope
from .kinematics import ConstantMatrix
from .rational import PoleError

log = logging.getLogger(__name__)


@dataclass
class CheckReport:
    name: str
    params: dict
    samples: int = 0
    failures: list = field(default_factory=list)
    extra: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, point, lhs, rhs, **info):
        self.failures.append({"input": point, "point": point, "lhs": lhs, "rhs": rhs, **info})

    def to_json(self) -> dict:
        out = {
            "check": self.name,
            "params": self.params,
            "samples": self.samples,
            "passed": self.passed,
            "failures": self.failures,
        }
        out.update(self.extra)
        return out


# -- random inputs ---------------------------------------------------------


def rand_q(rng: random.Random, lo: int = -20, hi: int = 20, den: int = 9) -> Fraction:
    return Fraction(rng.randint(lo, hi), rng.randint(1, den))


def random_constants(rng: random.Random, n: int, zero_prob: float = 0.0) -> ConstantMatrix:
    pairs = {}
    for p in combinations(range(1, n + 1), 2):
        if rng.random() < zero_prob:
            pairs[p] = 0
        else:
            pairs[p] = Fraction(rng.randint(1, 30), rng.randint(1, 6))
    return ConstantMatrix.from_pairs(n, pairs)


def random_generic_constants(rng: random.Random, n: int, tries: int = 50) -> ConstantMatrix:
    """Positive constants whose n! vertices are pairwise distinct."""
    for _ in range(tries):
        D = random_constants(rng, n)
        if len(zonotope.vertices(D)) == len(list(permutations(range(n)))):
            return D
        log.info("skipping non-generic constants %s", D.pairs())
    raise RuntimeError("could not draw generic constants")


def random_slice_point(rng: random.Random, D: ConstantMatrix) -> tuple:
    n = D.n
    x = [rand_q(rng) for _ in range(n)]
    shift = (D.subset(range(1, n + 1)) - sum(x, Fraction(0))) / n
    return tuple(v + shift for v in x)


def random_cube_point(rng: random.Random, k: int, open_: bool = False) -> tuple:
    if open_:
        return tuple(Fraction(rng.randint(1, 98), 99) for _ in range(k))
    return tuple(Fraction(rng.randint(0, 12), 12) for _ in range(k))


def chamber_point(rng: random.Random, m: int) -> tuple:
    """Strictly decreasing integer parts plus rational jitter in [0, 1)."""
    return tuple(
        Fraction(3 * (m - i)) + Fraction(rng.randint(0, 96), 97) for i in range(m)
    )


def generic_point(rng: random.Random, m: int) -> tuple:
    return tuple(rand_q(rng, -30, 30, 11) for _ in range(m))


def nonzero_point(rng: random.Random, m: int) -> tuple:
    out = []
    while len(out) < m:
        v = rand_q(rng, -30, 30, 11)
        if v != 0:
            out.append(v)
    return tuple(out)


# -- checks ----------------------------------------------------------------


def _point_class(D: ConstantMatrix, x) -> str:
    if not zonotope.contains(D, x):
        return "exterior"
    if x in set(zonotope.vertices(D)):
        return "vertex"
    tight = any(
        sum((x[j - 1] for j in J), Fraction(0)) == D.subset(J)
        for J in zonotope.proper_subsets(D.n)
    )
    return "boundary" if tight else "interior"


def check_alternating_sum(ns=(3, 4), n_constants=20, points=200, seed=0) -> CheckReport:
    """Alternating plate sum against zonotope membership.

    Mismatches at points on a proper face of positive dimension are
    tallied separately and do not fail the check.
    """
    rng = random.Random(seed)
    rep = CheckReport("alternating-sum", {"n": list(ns), "constants": n_constants,
                                          "points": points, "seed": seed})
    classes = {}
    boundary_mismatches = 0
    for n in ns:
        for _ in range(n_constants):
            D = random_constants(rng, n, zero_prob=0.15)
            verts = zonotope.vertices(D)
            k = len(zonotope.pair_index(n))
            for p in range(points):
                kind = p % 4
                if kind == 0:
                    x = zonotope.minkowski_sample(D, random_cube_point(rng, k, open_=True))
                elif kind == 1:
                    x = rng.choice(verts)
                elif kind == 2:
                    x = random_slice_point(rng, D)
                else:
                    x = zonotope.minkowski_sample(D, random_cube_point(rng, k))
                lhs = plates.alternating_sum_indicator(D, x)
                rhs = int(zonotope.contains(D, x))
                cls = _point_class(D, x)
                classes[cls] = classes.get(cls, 0) + 1
                rep.samples += 1
                if lhs != rhs:
                    if cls == "boundary":
                        boundary_mismatches += 1
                    else:
                        rep.fail({"D": D.pairs(), "x": x}, lhs, rhs, kind=cls)
    rep.extra = {"point_classes": classes, "boundary_mismatches": boundary_mismatches}
    return rep


def check_supermodularity(ns=(2, 3, 4, 5), n_constants=50, seed=0) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport("supermodularity", {"n": list(ns), "constants": n_constants, "seed": seed})
    for n in ns:
        for _ in range(n_constants):
            D = random_constants(rng, n, zero_prob=0.2)
            rep.samples += 1
            if not zonotope.check_supermodularity(D):
                rep.fail({"D": D.pairs()}, False, True)
    return rep


def check_minkowski(ns=(2, 3, 4), n_constants=20, cube_points=100, seed=0) -> CheckReport:
    """Vertex formula against the brute-force oracle, and both inclusions."""
    rng = random.Random(seed)
    rep = CheckReport("minkowski", {"n": list(ns), "constants": n_constants,
                                    "cube_points": cube_points, "seed": seed})
    for n in ns:
        k = len(zonotope.pair_index(n))
        for _ in range(n_constants):
            D = random_generic_constants(rng, n)
            rep.samples += 1
            got, want = set(zonotope.vertices(D)), set(zonotope.vertex_oracle(D))
            if got != want:
                rep.fail({"D": D.pairs(), "part": "vertices"}, sorted(got), sorted(want))
            for _ in range(cube_points):
                t = random_cube_point(rng, k)
                x = zonotope.minkowski_sample(D, t)
                if not zonotope.contains(D, x):
                    rep.fail({"D": D.pairs(), "t": t}, x, "inside")
            for sigma in permutations(range(1, n + 1)):
                a = zonotope.minkowski_sample(D, zonotope.inversion_param(sigma))
                b = zonotope.vertex(D, sigma)
                if a != b:
                    rep.fail({"D": D.pairs(), "sigma": sigma}, a, b)
    return rep


def _sampled(rep: CheckReport, rng, draw, evaluate, count: int):
    """Run ``count`` pole-free samples; a pole just triggers a redraw."""
    done = 0
    while done < count:
        pt = draw(rng)
        try:
            lhs, rhs = evaluate(pt)
        except PoleError:
            continue
        done += 1
        rep.samples += 1
        if lhs != rhs:
            rep.fail(pt, lhs, rhs)


def check_lt_triangulation(ms=(2, 3, 4, 5, 6), samples=100, seed=0) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport("lt-triangulation", {"m": list(ms), "samples": samples, "seed": seed})
    for m in ms:
        half = samples // 2
        _sampled(rep, rng, lambda r: chamber_point(r, m),
                 lambda y: laplace.triangulation_sides(m, y), half)
        _sampled(rep, rng, lambda r: generic_point(r, m),
                 lambda y: laplace.triangulation_sides(m, y), samples - half)
    return rep


def check_cyclic_sum(ms=(2, 3, 4, 5, 6), samples=100, seed=0) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport("cyclic-sum", {"m": list(ms), "samples": samples, "seed": seed})
    for m in ms:
        _sampled(rep, rng, lambda r: generic_point(r, m),
                 lambda y: (laplace.cyclic_sum(m, y), Fraction(0)), samples)
    return rep


def check_discrete_ie(ms=(2, 3, 4, 5), samples=100, seed=0) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport("discrete-ie", {"m": list(ms), "samples": samples, "seed": seed})
    for m in ms:
        _sampled(rep, rng, lambda r: nonzero_point(r, m),
                 lambda x: laplace.discrete_ie_sides(m, x), samples)
    klt = laplace.klt_diagonal_match((1, 2, 4, 8))
    if not klt["passed"]:
        rep.fail({"klt": "x=(1,2,4,8)"}, klt["klt_total"], "partial-tree sum")
    rep.extra = {"klt_terms": klt["terms"]}
    return rep


def check_mizera(ns=tuple(range(4, 9)), samples=100, seed=0, facet_ns=tuple(range(3, 11))) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport("mizera", {"n": list(ns), "facet_n": list(facet_ns),
                                 "samples": samples, "seed": seed})
    for n in facet_ns:
        _sampled(rep, rng, lambda r: nonzero_point(r, n - 2),
                 lambda s: (amplitudes.m_restricted(s), amplitudes.m_facet_sum(s)), samples)
    for n in ns:
        _sampled(rep, rng, lambda r: generic_point(r, n - 2),
                 lambda q: (amplitudes.mizera_sum(n, q), amplitudes.m_alpha_restricted(q)),
                 samples)
    return rep


def check_partition(ms=(2, 3, 4, 5, 6), samples=100, seed=0) -> CheckReport:
    rep = CheckReport("partition", {"m": list(ms), "samples": samples, "seed": seed})
    counts = {}
    for m in ms:
        r = roottrees.partition_check(m, samples, seed + m)
        rep.samples += r["samples"]
        counts[str(m)] = r["exactly_one_interior"]
        for f in r["failures"]:
            rep.fail(f["point"], f["members"], f["interiors"])
        if r["exactly_one_interior"] != samples:
            rep.fail({"m": m}, r["exactly_one_interior"], samples)
    rep.extra = {"exactly_one_interior": counts}
    return rep


def check_duality(ms=(3, 4, 5), seed=0) -> CheckReport:
    rep = CheckReport("duality", {"m": list(ms), "seed": seed})
    summary = {}
    for m in ms:
        r = roottrees.duality_check(m)
        rep.samples += r["partial_trees"]
        summary[str(m)] = r["by_dimension"]
        for msg in r["failures"]:
            rep.fail({"m": m}, msg, "bijection")
    rep.extra = {"faces_by_dimension": summary}
    return rep


def check_cyclic_action(Ns=(3, 4, 5, 6), seed=0) -> CheckReport:
    rep = CheckReport("cyclic-action", {"N": list(Ns), "seed": seed})
    for N in Ns:
        rep.samples += 1
        if not associahedron.cyclic_action_check(N):
            rep.fail({"N": N}, False, True)
    return rep


def check_canonical_zero(samples=100, seed=0) -> CheckReport:
    """With D = 0 and n = 3 the six-term canonical form vanishes on the slice."""
    rng = random.Random(seed)
    rep = CheckReport("canonical-zero", {"samples": samples, "seed": seed})
    D = ConstantMatrix.zero(3)

    def draw(r):
        x1, x2 = rand_q(r), rand_q(r)
        return (x1, x2, -x1 - x2)

    _sampled(rep, rng, draw, lambda x: (plates.canonical_form(D, x), Fraction(0)), samples)
    return rep


def check_alpha_limit(ns=(4, 5, 6), a=1e-4, tol=1e-3, seed=0) -> CheckReport:
    rng = random.Random(seed)
    rep = CheckReport("alpha-limit", {"n": list(ns), "a": a, "tol": tol, "seed": seed})
    errors = {}
    for n in ns:
        s = tuple(Fraction(rng.randint(1, 9), rng.randint(1, 4)) for _ in range(n - 2))
        err = amplitudes.alpha_limit_check(s, a)
        errors[str(n)] = err
        rep.samples += 1
        if not err < tol:
            rep.fail({"s": s, "a": a}, err, tol)
    rep.extra = {"relative_errors": errors}
    return rep


CHECKS = {
    "alpha-limit": check_alpha_limit,
    "alternating-sum": check_alternating_sum,
    "canonical-zero": check_canonical_zero,
    "cyclic-action": check_cyclic_action,
    "cyclic-sum": check_cyclic_sum,
    "discrete-ie": check_discrete_ie,
    "duality": check_duality,
    "lt-triangulation": check_lt_triangulation,
    "minkowski": check_minkowski,
    "mizera": check_mizera,
    "partition": check_partition,
    "supermodularity": check_supermodularity,
}

# reduced sizes for ``check all --small`` (n, m <= 4)
SMALL = {
    "alpha-limit": dict(ns=(4,)),
    "alternating-sum": dict(ns=(3, 4), n_constants=3, points=40),
    "canonical-zero": dict(samples=20),
    "cyclic-action": dict(Ns=(3, 4)),
    "cyclic-sum": dict(ms=(2, 3, 4), samples=20),
    "discrete-ie": dict(ms=(2, 3, 4), samples=20),
    "duality": dict(ms=(3, 4)),
    "lt-triangulation": dict(ms=(2, 3, 4), samples=20),
    "minkowski": dict(ns=(2, 3, 4), n_constants=3, cube_points=20),
    "mizera": dict(ns=(4,), facet_ns=(3, 4), samples=20),
    "partition": dict(ms=(2, 3, 4), samples=20),
    "supermodularity": dict(ns=(2, 3, 4), n_constants=5),
}


def run_all(seed: int = 0, small: bool = False) -> list:
    reports = []
    for name in sorted(CHECKS):
        kwargs = dict(SMALL[name]) if small else {}
        reports.append(CHECKS[name](seed=seed, **kwargs))
    return reports
