"""Command-line surface.

Subcommands: scatter (compute a diagram, emit JSON/text/SVG), gw
(log-coefficients on a ray), quiver (Euler-characteristic columns), permissible
(classification table), verify (built-in check suite).  Exit codes: 0 success,
1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from math import gcd
from typing import List, Optional, Sequence

from .analysis import Framing, euler_series, gw_coefficients
from .document import (
    diagram_to_document,
    diagram_to_text,
    document_to_json_bytes,
)
from .permissible import permissible_set
from .scatter import FactorizationError, commutator, factorize
from .vertexgroup import generators, polynomial_generators

__all__ = ["main", "build_parser"]


def _rational_list(text: str) -> List[Fraction]:
    try:
        return [Fraction(part.strip()) for part in text.split(",")]
    except (ValueError, ZeroDivisionError) as exc:
        raise argparse.ArgumentTypeError(f"invalid rational list {text!r}: {exc}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tropvertex",
        description="Exact ordered-product factorizations in the tropical vertex group.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("scatter", help="factor a commutator into slope-ordered walls")
    p.add_argument("--l1", type=int, help="exponent of the x-axis generator (1+tx)^l1")
    p.add_argument("--l2", type=int, help="exponent of the y-axis generator (1+ty)^l2")
    p.add_argument("--p1", type=_rational_list, metavar="C0,C1,...",
                   help="x-axis generator polynomial coefficients (constant term 1)")
    p.add_argument("--p2", type=_rational_list, metavar="C0,C1,...",
                   help="y-axis generator polynomial coefficients (constant term 1)")
    p.add_argument("--order", type=int, required=True, help="truncation order N >= 2")
    p.add_argument("--format", choices=("json", "text", "svg"), default="json")
    p.add_argument("--out", help="output path (default: stdout)")
    p.set_defaults(func=cmd_scatter)

    p = sub.add_parser("gw", help="log-coefficients of a wall function")
    p.add_argument("--l1", type=int, required=True)
    p.add_argument("--l2", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--order", type=int, required=True)
    p.set_defaults(func=cmd_gw)

    p = sub.add_parser("quiver", help="Euler-characteristic series on a ray (l1 = l2 = m)")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--a", type=int, required=True)
    p.add_argument("--b", type=int, required=True)
    p.add_argument("--order", type=int, default=8)
    p.set_defaults(func=cmd_quiver)

    p = sub.add_parser("permissible", help="classify primitive interior directions")
    p.add_argument("--l1", type=int, required=True)
    p.add_argument("--l2", type=int, required=True)
    p.add_argument("--max-degree", type=int, required=True)
    p.add_argument("--order", type=int,
                   help="also report empirical wall status at this truncation order")
    p.set_defaults(func=cmd_permissible)

    p = sub.add_parser("verify", help="run the built-in verification suite")
    p.add_argument("--filter", help="run only checks whose name contains this substring")
    p.set_defaults(func=cmd_verify)

    return parser


def _emit(data: bytes, out: Optional[str]) -> None:
    if out is None:
        sys.stdout.write(data.decode("utf-8"))
    else:
        with open(out, "wb") as fh:
            fh.write(data)


def _scatter_inputs(args, parser):
    poly_mode = args.p1 is not None or args.p2 is not None
    ell_mode = args.l1 is not None or args.l2 is not None
    if poly_mode == ell_mode:
        parser.error("provide either --l1/--l2 or --p1/--p2")
    if args.order < 2:
        parser.error("--order must be at least 2")
    if poly_mode:
        if args.p1 is None or args.p2 is None:
            parser.error("--p1 and --p2 must be given together")
        ell1, ell2 = len(args.p1) - 1, len(args.p2) - 1
        if ell1 < 1 or ell2 < 1:
            parser.error("generator polynomials must have positive degree")
        S, T = polynomial_generators(args.p1, args.p2, args.order)
        return S, T, ell1, ell2, args.p1, args.p2
    if args.l1 is None or args.l2 is None:
        parser.error("--l1 and --l2 must be given together")
    if args.l1 < 1 or args.l2 < 1:
        parser.error("--l1 and --l2 must be at least 1")
    S, T = generators(args.l1, args.l2, args.order)
    return S, T, args.l1, args.l2, None, None


def cmd_scatter(args, parser) -> int:
    S, T, ell1, ell2, p1, p2 = _scatter_inputs(args, parser)
    try:
        diagram = factorize(commutator(S, T))
    except FactorizationError as exc:
        print(f"factorization failed: {exc}", file=sys.stderr)
        return 1
    if args.format == "json":
        doc = diagram_to_document(diagram, ell1, ell2, p1, p2)
        _emit(document_to_json_bytes(doc), args.out)
    elif args.format == "text":
        _emit(diagram_to_text(diagram).encode("utf-8"), args.out)
    else:
        from .figures import render_svg
        _emit(render_svg(diagram, ell1, ell2), args.out)
    return 0


def _check_ray(a: int, b: int, parser) -> None:
    if a < 1 or b < 1:
        parser.error("the ray (a,b) must be strictly interior")
    if gcd(a, b) != 1:
        parser.error(f"({a},{b}) is not primitive")


def cmd_gw(args, parser) -> int:
    _check_ray(args.a, args.b, parser)
    if args.order < 2:
        parser.error("--order must be at least 2")
    if args.l1 < 1 or args.l2 < 1:
        parser.error("--l1 and --l2 must be at least 1")
    S, T = generators(args.l1, args.l2, args.order)
    diagram = factorize(commutator(S, T))
    f = diagram.wall_function(args.a, args.b)
    c = gw_coefficients(f, args.a, args.b)
    print(f"# c^k on ray ({args.a},{args.b}) for (l1,l2)=({args.l1},{args.l2}), N={args.order}")
    for k in sorted(c.values):
        print(f"{k}\t{c.values[k]}")
    return 0


def cmd_quiver(args, parser) -> int:
    _check_ray(args.a, args.b, parser)
    if args.m < 1:
        parser.error("--m must be at least 1")
    if args.order < 2:
        parser.error("--order must be at least 2")
    S, T = generators(args.m, args.m, args.order)
    diagram = factorize(commutator(S, T))
    f = diagram.wall_function(args.a, args.b)
    back = euler_series(f, args.a, args.b, args.m, Framing.BACK)
    front = euler_series(f, args.a, args.b, args.m, Framing.FRONT)
    print(f"# chi on ray ({args.a},{args.b}) for m={args.m}, N={args.order}")
    print("k\tchi_B\tB integral\tchi_F\tF integral")
    for k in sorted(set(back.chi) | set(front.chi)):
        print(f"{k}\t{back[k]}\t{back.integral(k)}\t{front[k]}\t{front.integral(k)}")
    return 0


def cmd_permissible(args, parser) -> int:
    if args.l1 < 1 or args.l2 < 1:
        parser.error("--l1 and --l2 must be at least 1")
    if args.max_degree < 2:
        parser.error("--max-degree must be at least 2")
    diagram = None
    if args.order is not None:
        if args.order < 2:
            parser.error("--order must be at least 2")
        S, T = generators(args.l1, args.l2, args.order)
        diagram = factorize(commutator(S, T))
    table = permissible_set(args.l1, args.l2, args.max_degree)
    header = "a\tb\tclassification"
    if diagram is not None:
        header += "\twall"
    print(f"# (l1,l2)=({args.l1},{args.l2}), a+b <= {args.max_degree}")
    print(header)
    for d, c in sorted(table.items(), key=lambda kv: (kv[0].a + kv[0].b, kv[0].a)):
        row = f"{d.a}\t{d.b}\t{c.value}"
        if diagram is not None:
            if d.a + d.b > diagram.order:
                status = "out-of-reach"
            elif d in diagram.walls:
                status = "nontrivial"
            else:
                status = "trivial-so-far"
            row += f"\t{status}"
        print(row)
    return 0


def cmd_verify(args, parser) -> int:
    from .verify import run_checks
    results = run_checks(args.filter)
    if not results:
        parser.error(f"no check matches filter {args.filter!r}")
    failed = 0
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        print(f"{status}  {r.name:<32} {r.seconds:8.3f}s" + ("" if r.passed else f"  {r.message}"))
        failed += not r.passed
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return 1 if failed else 0


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args, parser)


if __name__ == "__main__":
    sys.exit(main())
