"""Command-line interface.

Subcommands::

    durfee count      exact counts of marked symbols by rank vector (TSV)
    durfee enumerate  list a corpus as JSON documents, one per line
    durfee map        apply a bijection to a symbol document
    durfee verify     run identity-verification suites
    durfee series     print generating-series coefficients (TSV)

Exit codes: 0 success, 1 identity failure from ``verify``, 2 usage error.
Count tables and reports are byte-deterministic for fixed flags.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import bijections, qseries
from .marked import enumerate_kmarked, kmarked_rank_distribution
from .serialize import document_to_symbol, format_symbol, render, symbol_to_document
from .symbols import DurfeeSymbol, Flavor
from .verify import Bounds, SUITES, run_suite


def _flavor(value: str) -> Flavor:
    try:
        return Flavor(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"choose from ordinary, odd (got {value!r})")


def _int_list(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.split(",") if x.strip() != "")
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _fraction_list(text: str) -> tuple[Fraction, ...]:
    try:
        return tuple(Fraction(x.strip()) for x in text.split(",") if x.strip() != "")
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"expected comma-separated rationals, got {text!r}")


def _load_document(path: str | None) -> dict:
    text = sys.stdin.read() if path in (None, "-") else open(path, encoding="utf-8").read()
    return json.loads(text)


def cmd_count(args: argparse.Namespace) -> int:
    dist = kmarked_rank_distribution(args.n, args.k, args.flavor)
    header = [f"m{i}" for i in range(1, args.k + 1)] + ["count"]
    print(f"# n={args.n} k={args.k} flavor={args.flavor.value}")
    print("\t".join(header))
    if args.ranks is not None:
        if len(args.ranks) != args.k:
            print(f"error: --ranks needs {args.k} entries", file=sys.stderr)
            return 2
        m = tuple(args.ranks)
        print("\t".join([*(str(x) for x in m), str(dist.get(m, 0))]))
        return 0
    total = 0
    for m in sorted(dist):
        total += dist[m]
        print("\t".join([*(str(x) for x in m), str(dist[m])]))
    print("\t".join(["total"] + [""] * (args.k - 1) + [str(total)]))
    return 0


def cmd_enumerate(args: argparse.Namespace) -> int:
    for s in enumerate_kmarked(args.n, args.k, args.flavor):
        if args.pretty:
            print(format_symbol(s))
        else:
            print(json.dumps(symbol_to_document(s)))
    return 0


def cmd_map(args: argparse.Namespace) -> int:
    doc = _load_document(args.input)
    s = document_to_symbol(doc)
    name = args.map
    try:
        if name == "phi":
            before = s.ranks
            out = bijections.merge_marks(s)
            after = (out.rank,)
        elif name == "phi-inv":
            if args.ranks is None:
                print("error: phi-inv needs --ranks", file=sys.stderr)
                return 2
            if s.k != 1:
                print("error: phi-inv input must be a one-vector document", file=sys.stderr)
                return 2
            ds = DurfeeSymbol(s.vectors[0].alpha, s.vectors[0].beta, s.d, s.flavor)
            before = (ds.rank,)
            out = bijections.split_marks(ds, args.ranks)
            after = out.ranks
        elif name == "psi":
            before = s.ranks
            out = bijections.symbol_to_strict_shifted(s)
            after = out.ranks
        elif name == "psi-inv":
            if args.t is None:
                print("error: psi-inv needs --t", file=sys.stderr)
                return 2
            before = s.ranks
            out = bijections.symbol_from_strict_shifted(s, args.t)
            after = out.ranks
        elif name == "theta":
            if args.p is None:
                print("error: theta needs --p", file=sys.stderr)
                return 2
            before = s.ranks
            out = bijections.flip_rank(s, args.p)
            after = out.ranks
        else:  # symmetry
            if args.perm is None:
                print("error: symmetry needs --perm", file=sys.stderr)
                return 2
            before = s.ranks
            out = bijections.permute_ranks(s, args.perm)
            after = out.ranks
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print(render(out, indent=2))
    print(f"# map: {name}", file=sys.stderr)
    params = {
        "ranks": args.ranks, "t": args.t, "p": args.p, "perm": args.perm,
    }
    used = {k: v for k, v in params.items() if v is not None}
    if used:
        print(f"# params: {used}", file=sys.stderr)
    print(f"# ranks before: {list(before)}", file=sys.stderr)
    print(f"# ranks after: {list(after)}", file=sys.stderr)
    if args.pretty:
        print(f"# {format_symbol(out)}", file=sys.stderr)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    bounds = Bounds(max_n=args.max_n, max_k=args.max_k, order=args.order, x=args.x)
    results = run_suite(args.suite, bounds)
    print("check\tbound\tstatus\tdetail")
    failed = 0
    for r in results:
        status = "PASS" if r.ok else "FAIL"
        if not r.ok:
            failed += 1
        print(f"{r.name}\t{r.bound}\t{status}\t{r.detail}")
    verdict = "PASS" if failed == 0 else "FAIL"
    print(f"RESULT\t{verdict}\t{len(results) - failed}/{len(results)} checks passed")
    return 0 if failed == 0 else 1


def cmd_series(args: argparse.Namespace) -> int:
    gf = args.gf
    try:
        if gf == "partition":
            series = qseries.partition_gf(args.order)
        elif gf == "rank":
            series = qseries.rank_gf(args.m, args.order)
        elif gf == "odd-rank":
            series = qseries.odd_rank_gf(args.m, args.order)
        else:
            if args.x is None:
                print(f"error: {gf} needs --x", file=sys.stderr)
                return 2
            k = len(args.x)
            fn = {
                "rk": qseries.marked_rank_gf,
                "rk-product": qseries.marked_rank_gf_product,
                "rk-partial": qseries.marked_rank_gf_partial_fractions,
            }[gf]
            series = fn(args.x, k, args.order, args.flavor)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    print("n\tcoefficient")
    for n, c in enumerate(series.coeffs):
        print(f"{n}\t{c}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="durfee",
        description="Exact counting, bijections, and series checks for marked Durfee symbols.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("count", help="count symbols by rank vector")
    p.add_argument("--n", type=int, required=True, help="weight")
    p.add_argument("--k", type=int, default=1, help="number of vectors")
    p.add_argument("--flavor", type=_flavor, metavar="{ordinary,odd}", default=Flavor.ORDINARY)
    p.add_argument("--ranks", type=_int_list, default=None, help="rank vector m1,...,mk")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enumerate", help="list a corpus as JSON documents")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, default=1)
    p.add_argument("--flavor", type=_flavor, metavar="{ordinary,odd}", default=Flavor.ORDINARY)
    p.add_argument("--pretty", action="store_true", help="two-row display instead of JSON")
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("map", help="apply a bijection to a symbol document")
    p.add_argument(
        "--map", required=True,
        choices=["phi", "phi-inv", "psi", "psi-inv", "theta", "symmetry"],
        help="phi merges marks; phi-inv splits by --ranks; psi lifts to strict "
        "shifted; psi-inv drops by --t; theta flips rank --p; symmetry permutes by --perm",
    )
    p.add_argument("--in", dest="input", default=None, help="document path (default stdin)")
    p.add_argument("--ranks", type=_int_list, default=None)
    p.add_argument("--t", type=_int_list, default=None)
    p.add_argument("--p", type=int, default=None)
    p.add_argument("--perm", type=_int_list, default=None)
    p.add_argument("--pretty", action="store_true", help="also print a display line to stderr")
    p.set_defaults(func=cmd_map)

    p = sub.add_parser("verify", help="run identity-verification suites")
    p.add_argument("--suite", default="all", choices=sorted(SUITES))
    p.add_argument("--max-n", type=int, default=10)
    p.add_argument("--max-k", type=int, default=3)
    p.add_argument("--order", type=int, default=8)
    p.add_argument("--x", type=_fraction_list, default=(Fraction(2), Fraction(3), Fraction(5)))
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("series", help="print series coefficients")
    p.add_argument(
        "--gf", required=True,
        choices=["partition", "rank", "odd-rank", "rk", "rk-product", "rk-partial"],
    )
    p.add_argument("--order", type=int, required=True)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--x", type=_fraction_list, default=None)
    p.add_argument("--flavor", type=_flavor, metavar="{ordinary,odd}", default=Flavor.ORDINARY)
    p.set_defaults(func=cmd_series)

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
