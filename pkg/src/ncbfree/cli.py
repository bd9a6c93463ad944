"""Command-line front end: ``ncbfree <subcommand> ...``.

Exit status is 0 on success, 1 when a verification fails and 2 on usage
errors (bad literals, bounds exceeded, unknown property ids).
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction

from . import cayley, embed, partitions, series, verify
from .errors import DomainError, NotInvertibleError, PreconditionError, StructureError
from .freeprob import cumulants as cu
from .freeprob.spaces import load_space

DEFAULT_BOUNDS = {"A": 8, "B": 6, "series": 8}


class UsageError(Exception):
    pass


def _fmt(q: Fraction) -> str:
    q = Fraction(q)
    return str(q.numerator) if q.denominator == 1 else f"{q.numerator}/{q.denominator}"


def _bound(args, key: str) -> int:
    return args.bound if args.bound is not None else DEFAULT_BOUNDS[key]


def _check_bound(args, key: str, value: int, what: str) -> None:
    limit = _bound(args, key)
    if value > limit:
        raise UsageError(f"{what} = {value} exceeds the bound {limit} (raise it with --bound)")


class _Out:
    def __init__(self, fmt: str):
        self.fmt = fmt

    def emit(self, text: str, data) -> None:
        if self.fmt == "json":
            print(json.dumps(data, separators=(",", ":")))
        else:
            print(text)


def _partition_data(p) -> dict:
    return json.loads(partitions.partition_to_json(p))


def _perm_data(x) -> dict:
    return {"group": x.group, "n": x.n, "images": list(x.images), "cycles": str(x)}


# ---------------------------------------------------------------------------
# subcommands


def cmd_enum(args, out: _Out) -> int:
    kind = args.type.upper()
    if kind not in ("A", "B"):
        raise UsageError("type must be A or B")
    if args.n < 1:
        raise UsageError("n must be at least 1")
    _check_bound(args, kind, args.n, "n")
    gen = partitions.enumerate_nca(args.n) if kind == "A" else partitions.enumerate_ncb(args.n)
    if args.count or args.format == "count":
        count = sum(1 for _ in gen)
        out.emit(str(count), {"type": kind, "n": args.n, "count": count})
        return 0
    if args.format == "json":
        print(json.dumps([_partition_data(p) for p in gen], separators=(",", ":")))
    else:
        for p in gen:
            print(p)
    return 0


def _parse_partition(args):
    return partitions.parse_partition(args.partition, n=args.n, kind=args.type)


def cmd_kreweras(args, out: _Out) -> int:
    p = _parse_partition(args)
    q = partitions.kreweras(p, "left" if args.left else "right")
    out.emit(str(q), _partition_data(q))
    return 0


def cmd_abs(args, out: _Out) -> int:
    p = partitions.parse_partition(args.partition, n=args.n, kind="B")
    q = partitions.abs_map(p)
    out.emit(str(q), _partition_data(q))
    return 0


def cmd_fiber(args, out: _Out) -> int:
    p = partitions.parse_partition(args.partition, n=args.n, kind="A")
    _check_bound(args, "B", p.n, "n")
    fib = partitions.abs_fiber(p)
    out.emit("\n".join(str(x) for x in fib), [_partition_data(x) for x in fib])
    return 0


def cmd_iota(args, out: _Out) -> int:
    if args.inverse:
        group = None if args.group is None else args.group.upper()
        sigma = cayley.parse_permutation(args.element, n=args.n, group=group)
        p = embed.iota_inverse(sigma, target=args.target)
        out.emit(str(p), _partition_data(p))
        return 0
    p = partitions.parse_partition(args.element, n=args.n, kind=args.type)
    if args.target == "gamma":
        if not isinstance(p, partitions.NCPartitionA):
            raise UsageError("--target gamma expects a type-A partition")
        x = embed.iota_gamma(p)
    else:
        x = embed.iota(p)
    out.emit(str(x), _perm_data(x))
    return 0


def cmd_interval(args, out: _Out) -> int:
    group = args.group.upper()
    if group not in ("S", "W"):
        raise UsageError("--group must be S or W")
    _check_bound(args, "A" if group == "S" else "B", args.n, "n")
    tops = {"c": lambda n: cayley.long_cycle(n), "omega": cayley.omega, "gamma": cayley.gamma}
    if args.top is None:
        args.top = "c" if group == "S" else "omega"
    if args.top in tops:
        top = tops[args.top](args.n)
        if top.group != group:
            raise UsageError(f"--top {args.top} is not an element of {group}_{args.n}")
    else:
        top = cayley.parse_permutation(args.top, n=args.n, group=group)
    elements = list(cayley.interval(top))
    if args.count:
        out.emit(str(len(elements)), {"top": str(top), "count": len(elements)})
    else:
        out.emit("\n".join(str(x) for x in elements), [_perm_data(x) for x in elements])
    return 0


def cmd_boxconv(args, out: _Out) -> int:
    kind = args.type.upper()
    f = series.parse_series(args.f, order=args.order)
    g = series.parse_series(args.g, order=args.order if args.order else f.order)
    _check_bound(args, "series", f.order, "order")
    if kind == "A":
        if not isinstance(f, series.SeriesA) or not isinstance(g, series.SeriesA):
            raise UsageError("type A expects plain coefficients, e.g. [1,2,5]")
        h = series.boxconv_a(f, g)
    else:
        if not isinstance(f, series.SeriesB) or not isinstance(g, series.SeriesB):
            raise UsageError(f"type {kind} expects pair coefficients, e.g. [[1,0],[2,3]]")
        if kind == "B":
            h = series.boxconv_b(f, g)
        elif kind == "AC":
            h = series.boxconv_a_dual(f, g)
        else:
            raise UsageError("type must be A, B or AC")
    status = 0
    if args.check_5_3:
        if kind == "A":
            raise UsageError("--check-5-3 needs type B or AC")
        same = series.boxconv_b(f, g) == series.boxconv_a_dual(f, g)
        status = 0 if same else 1
        print("check-5-3: " + ("pass" if same else "fail"), file=sys.stderr)
    out.emit(series.format_series(h), series.series_to_json(h))
    return status


def cmd_cumulant(args, out: _Out) -> int:
    if args.space:
        with open(args.space) as fh:
            space, marked = load_space(json.load(fh))
        if args.element not in marked:
            raise UsageError(f"unknown element {args.element!r}; known: {', '.join(sorted(marked))}")
        N = args.order or 4
        _check_bound(args, "series", N, "order")
        el = marked[args.element]
        M = cu.moment_series_b(space, el, N)
        R = cu.r_transform_b(space, el, N)
        out.emit(f"M = {series.format_series(M)}\nR = {series.format_series(R)}",
                 {"M": series.series_to_json(M), "R": series.series_to_json(R)})
        return 0
    if args.moments is not None:
        vals = series.parse_series(args.moments)
        if not isinstance(vals, series.SeriesA):
            raise UsageError("--moments takes a plain list of moments")
        _check_bound(args, "series", vals.order, "order")
        res = series.SeriesA(cu.cumulants_from_moments_a(vals.coeffs))
    elif args.cumulants is not None:
        vals = series.parse_series(args.cumulants)
        if not isinstance(vals, series.SeriesA):
            raise UsageError("--cumulants takes a plain list of cumulants")
        _check_bound(args, "series", vals.order, "order")
        res = series.SeriesA(cu.moments_from_cumulants_a(vals.coeffs))
    else:
        raise UsageError("give --moments, --cumulants or --space with --element")
    out.emit(series.format_series(res), series.series_to_json(res))
    return 0


def cmd_verify(args, out: _Out) -> int:
    if args.list:
        ids = verify.property_ids()
        out.emit("\n".join(ids), ids)
        return 0
    if args.property is None:
        raise UsageError("name a property (see --list)")
    if args.property not in verify.PROPERTIES:
        raise UsageError(f"unknown property {args.property!r}; known: {', '.join(verify.property_ids())}")
    params = {"n": args.n, "order": args.order, "seed": args.seed, "samples": args.samples, "group": args.group}
    accepted = verify.PROPERTIES[args.property].__code__.co_varnames
    params = {k: v for k, v in params.items() if v is not None and k in accepted}
    rep = verify.run(args.property, **params)
    text = f"{rep.property} {rep.verdict} ({rep.elapsed:.2f}s) {json.dumps(rep.params, sort_keys=True)}"
    if rep.counterexample:
        text += f"\ncounterexample: {rep.counterexample}"
    if rep.details:
        text += "\n" + json.dumps(rep.details, sort_keys=True, default=str)
    out.emit(text, rep.to_json())
    return 0 if rep.passed else 1


# ---------------------------------------------------------------------------
# argument parsing


def _common() -> argparse.ArgumentParser:
    # accepted both before and after the subcommand name
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--format", choices=["text", "json", "count"], default=argparse.SUPPRESS)
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.add_argument("--bound", type=int, default=argparse.SUPPRESS,
                   help="override the size bound (defaults: type A n<=8, type B n<=6, series N<=8)")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(prog="ncbfree", parents=[common],
                                     description="Non-crossing partitions of types A and B and free cumulants.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("enum", parents=[common], help="enumerate NC^(A)(n) or NC^(B)(n)")
    p.add_argument("type", help="A or B")
    p.add_argument("n", type=int)
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_enum)

    for name, func, hlp in (("kreweras", cmd_kreweras, "Kreweras complement"),
                            ("abs", cmd_abs, "absolute value map NC^(B) -> NC^(A)"),
                            ("fiber", cmd_fiber, "the n+1 type-B partitions over a type-A partition")):
        p = sub.add_parser(name, parents=[common], help=hlp)
        p.add_argument("partition", help='literal such as "{(1,2),(3,4)}"')
        p.add_argument("--n", type=int)
        if name == "kreweras":
            p.add_argument("--type", choices=["A", "B"])
            p.add_argument("--left", action="store_true", help="the left complement Kr'")
        p.set_defaults(func=func)

    p = sub.add_parser("iota", parents=[common], help="embedding of partitions into Cayley-graph intervals")
    p.add_argument("element", help="partition literal, or cycle notation with --inverse")
    p.add_argument("--inverse", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--type", choices=["A", "B"])
    p.add_argument("--group", choices=["S", "W", "s", "w"])
    p.add_argument("--target", choices=["c", "omega", "gamma"])
    p.set_defaults(func=cmd_iota)

    p = sub.add_parser("interval", parents=[common], help="elements of [e, top] in S_n or W_n")
    p.add_argument("--group", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--top", default=None, help="c, omega, gamma or cycle notation (default: c in S_n, omega in W_n)")
    p.add_argument("--count", action="store_true")
    p.set_defaults(func=cmd_interval)

    p = sub.add_parser("boxconv", parents=[common], help="boxed convolution of two series")
    p.add_argument("type", help="A, B or AC")
    p.add_argument("f")
    p.add_argument("g")
    p.add_argument("--order", type=int)
    p.add_argument("--check-5-3", action="store_true", help="compare the type-B and dual type-A summations")
    p.set_defaults(func=cmd_boxconv)

    p = sub.add_parser("cumulant", parents=[common], help="moment/cumulant conversion and R-transforms")
    p.add_argument("--moments")
    p.add_argument("--cumulants")
    p.add_argument("--space", help="JSON space description")
    p.add_argument("--element")
    p.add_argument("--order", type=int)
    p.set_defaults(func=cmd_cumulant)

    p = sub.add_parser("verify", parents=[common], help="run a named property check")
    p.add_argument("property", nargs="?")
    p.add_argument("--list", action="store_true")
    p.add_argument("--n", type=int)
    p.add_argument("--order", type=int)
    p.add_argument("--samples", type=int)
    p.add_argument("--group", choices=["S", "W"])
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    for name, default in (("format", "text"), ("seed", None), ("bound", None)):
        if not hasattr(args, name):
            setattr(args, name, default)
    try:
        return args.func(args, _Out(args.format))
    except (UsageError, DomainError, StructureError, NotInvertibleError, PreconditionError) as exc:
        print(f"ncbfree {args.command}: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
