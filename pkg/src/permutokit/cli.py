"""``permutokit`` command line.

Exit codes: 0 success / all checks passed, 1 a check failed, 2 usage
error, 3 pole or degenerate input.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction

from . import amplitudes, associahedron, checks, roottrees, zonotope
from .kinematics import ConstantMatrix
from .rational import PoleError, Q, fmt, fmt_vec, parse_vec
from .render import polygon_svg

SCHEMA = "permutokit/1"


class InputError(ValueError):
    """Degenerate or inconsistent numeric input (exit code 3)."""


def _jsonable(obj):
    if isinstance(obj, Fraction):
        return fmt(obj)
    if isinstance(obj, dict):
        return {(",".join(map(str, k)) if isinstance(k, tuple) else str(k)): _jsonable(v)
                for k, v in obj.items()}
    if isinstance(obj, (frozenset, set)):
        return [_jsonable(v) for v in sorted(obj)]
    if isinstance(obj, (list, tuple)):
        return [_jsonable(v) for v in obj]
    return obj


def dumps(payload: dict) -> str:
    return json.dumps(_jsonable({"schema": SCHEMA, **payload}), indent=2, sort_keys=True) + "\n"


def parse_constant(text: str) -> tuple:
    """``"i,j=p/q"`` -> ((i, j), Fraction)."""
    try:
        pair, value = text.split("=")
        i, j = (int(p) for p in pair.split(","))
        return (i, j), Q(value)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected i,j=p/q, got {text!r}") from exc


def parse_rationals(text: str) -> tuple:
    try:
        return parse_vec(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad rational list {text!r}") from exc


def _constants(args) -> ConstantMatrix:
    try:
        return ConstantMatrix.from_pairs(args.n, dict(args.c or []))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _assoc(args) -> associahedron.AssocSpec:
    try:
        return associahedron.AssocSpec.from_pairs(args.N, dict(args.c or []))
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _emit(args, text: str) -> None:
    if getattr(args, "out", None):
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_zonotope(args) -> int:
    D = _constants(args)
    if args.action == "vertices":
        _emit(args, dumps({"kind": "zonotope", **zonotope.to_json(D)}))
    elif args.action == "contains":
        if args.x is None:
            raise InputError("--x is required")
        if len(args.x) != D.n:
            raise InputError(f"--x needs {D.n} coordinates")
        _emit(args, dumps({"kind": "zonotope-contains", "n": D.n, "x": fmt_vec(args.x),
                           "contains": zonotope.contains(D, args.x)}))
    elif args.action == "render":
        if D.n != 3:
            raise InputError("SVG rendering is only available for n = 3")
        pairs = ", ".join(f"c{i}{j}={fmt(v)}" for (i, j), v in D.pairs().items())
        _emit(args, polygon_svg(zonotope.vertices(D), title=f"Z_D, {pairs}"))
    return 0


def cmd_assoc(args) -> int:
    A = _assoc(args)
    if args.action == "facets":
        rows = [{"interval": [a, b], "coords": list(range(a, b)), "bound": fmt(v),
                 "equality": (a, b) == (1, A.N)}
                for (a, b), v in associahedron.assoc_facets(A)]
        _emit(args, dumps({"kind": "assoc-facets", "N": A.N, "facets": rows}))
    elif args.action == "vertices":
        _emit(args, dumps({"kind": "assoc", **associahedron.to_json(A)}))
    elif args.action == "cyclic-check":
        ok = associahedron.cyclic_action_check(A.N)
        _emit(args, dumps({"kind": "assoc-cyclic", "N": A.N, "passed": ok}))
        return 0 if ok else 1
    elif args.action == "render":
        if A.N != 4:
            raise InputError("SVG rendering is only available for N = 4")
        _emit(args, polygon_svg(associahedron.assoc_vertices(A), title=f"A(D), N={A.N}"))
    return 0


def cmd_triangulate(args) -> int:
    try:
        trees = roottrees.enumerate_trees(args.m)
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    _emit(args, dumps({"kind": "trees", "m": args.m, "count": len(trees),
                       "trees": [t.sorted_edges() for t in trees]}))
    return 0


def cmd_amplitude(args) -> int:
    if args.action == "m":
        value = amplitudes.m_restricted(args.s)
        payload = {"kind": "m", "n": len(args.s) + 2, "s": fmt_vec(args.s), "value": value,
                   "facet_sum": amplitudes.m_facet_sum(args.s)}
    else:
        value = amplitudes.m_alpha_restricted(args.q)
        payload = {"kind": "malpha", "n": len(args.q) + 2, "q": fmt_vec(args.q), "value": value}
        if len(args.q) + 2 >= 4:
            payload["mizera_sum"] = amplitudes.mizera_sum(len(args.q) + 2, args.q)
    _emit(args, dumps(payload))
    return 0


def _check_kwargs(args) -> dict:
    name = args.name
    kw = {}
    if args.samples is not None:
        key = {"alternating-sum": "points", "minkowski": "cube_points",
               "supermodularity": "n_constants"}.get(name, "samples")
        if name not in ("duality", "cyclic-action", "alpha-limit"):
            kw[key] = args.samples
    if args.n is not None:
        key = {"mizera": "ns", "alternating-sum": "ns", "minkowski": "ns",
               "supermodularity": "ns", "alpha-limit": "ns", "cyclic-action": "Ns"}.get(name)
        if key:
            kw[key] = (args.n,)
    if args.m is not None:
        key = {"lt-triangulation": "ms", "cyclic-sum": "ms", "discrete-ie": "ms",
               "partition": "ms", "duality": "ms"}.get(name)
        if key:
            kw[key] = (args.m,)
    return kw


def cmd_check(args) -> int:
    seed = args.seed
    if seed is None:
        seed = int(os.environ.get("PERMUTOKIT_SEED", "0"))
    if args.name == "all":
        reports = checks.run_all(seed=seed, small=args.small)
    else:
        kw = dict(checks.SMALL[args.name]) if args.small else {}
        kw.update(_check_kwargs(args))
        reports = [checks.CHECKS[args.name](seed=seed, **kw)]
    passed = all(r.passed for r in reports)
    payload = {"kind": "check", "seed": seed, "passed": passed,
               "reports": [r.to_json() for r in reports]}
    if len(reports) == 1:
        payload.update(reports[0].to_json())
    _emit(args, dumps(payload))
    return 0 if passed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="permutokit", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    def out(sp):
        sp.add_argument("--out", help="write to this file instead of stdout")

    z = sub.add_parser("zonotope", help="zonotopal generalized permutohedra")
    z.add_argument("action", choices=["vertices", "contains", "render"])
    z.add_argument("--n", type=int, required=True)
    z.add_argument("--c", action="append", type=parse_constant, metavar="i,j=p/q")
    z.add_argument("--x", type=parse_rationals, help="point for 'contains'")
    out(z)
    z.set_defaults(func=cmd_zonotope)

    a = sub.add_parser("assoc", help="kinematic associahedra")
    a.add_argument("action", choices=["facets", "vertices", "cyclic-check", "render"])
    a.add_argument("--N", type=int, required=True)
    a.add_argument("--c", action="append", type=parse_constant, metavar="i,j=p/q")
    out(a)
    a.set_defaults(func=cmd_assoc)

    t = sub.add_parser("triangulate", help="tree triangulation of the root cone")
    t.add_argument("--m", type=int, required=True)
    out(t)
    t.set_defaults(func=cmd_triangulate)

    am = sub.add_parser("amplitude", help="m and m_alpha' on X^n")
    am.add_argument("action", choices=["m", "malpha"])
    am.add_argument("--s", type=parse_rationals, help="s_12,s_23,...")
    am.add_argument("--q", type=parse_rationals, help="q_1,q_2,...")
    out(am)
    am.set_defaults(func=cmd_amplitude)

    c = sub.add_parser("check", help="seeded identity checks")
    c.add_argument("name", choices=sorted(checks.CHECKS) + ["all"])
    c.add_argument("--n", type=int)
    c.add_argument("--m", type=int)
    c.add_argument("--samples", type=int)
    c.add_argument("--seed", type=int)
    c.add_argument("--small", action="store_true", help="reduced sizes (n, m <= 4)")
    out(c)
    c.set_defaults(func=cmd_check)
    return p


def _error(kind: str, message: str, **extra) -> None:
    sys.stderr.write(json.dumps({"schema": SCHEMA, "error": kind, "message": message, **extra}) + "\n")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "amplitude":
        needed = "s" if args.action == "m" else "q"
        if getattr(args, needed) is None:
            parser.error(f"amplitude {args.action} needs --{needed}")
    try:
        return args.func(args)
    except PoleError as exc:
        _error("pole", str(exc), where=_jsonable(exc.where))
        return 3
    except (InputError, ValueError) as exc:
        _error("degenerate-input", str(exc))
        return 3


if __name__ == "__main__":
    sys.exit(main())
