"""Command line interface.

Exit codes: 0 success or feasible, 1 infeasible k or failed verification,
2 invalid input, 3 internal error.
"""

from __future__ import annotations

import argparse
import contextlib
import sys
from typing import Sequence

from . import __version__
from .bench import DEFAULT_EXCHANGE_CAP, KRule, parse_sizes, run_bench
from .errors import BadParams, GraphDisconnected, InfeasibleK, KRedError, TooLarge
from .graph import EdgeColor
from .graphio import format_tree, gen_random, parse_tree, read_graph, verify_tree, write_graph
from .kred import Sense, binary_mst, construct_k_red, exists_k_red, feasible_interval
from .oracle import MAX_ENUMERATION_EDGES, enumerate_feasible, exchange_construct

EXIT_OK = 0
EXIT_NO = 1
EXIT_INPUT = 2
EXIT_INTERNAL = 3


def _open_out(path: str | None):
    if path is None or path == "-":
        return contextlib.nullcontext(sys.stdout)
    return open(path, "w")


def cmd_check(args) -> int:
    g = read_graph(args.file)
    ok = exists_k_red(g, args.k)
    print("feasible" if ok else "infeasible")
    return EXIT_OK if ok else EXIT_NO


def cmd_range(args) -> int:
    iv = feasible_interval(read_graph(args.file))
    print(iv.k_min, iv.k_max)
    return EXIT_OK


def cmd_build(args) -> int:
    g = read_graph(args.file)
    if args.algo == "exchange":
        tree, _ = exchange_construct(g, args.k)
    else:
        tree = construct_k_red(g, args.k)
    sys.stdout.write(format_tree(g, tree.edge_ids))
    return EXIT_OK


def cmd_mst(args) -> int:
    g = read_graph(args.file)
    sense = Sense.MINIMIZE if args.sense == "min" else Sense.MAXIMIZE
    tree, weight = binary_mst(g, sense, EdgeColor.parse(args.zero_color))
    sys.stdout.write(format_tree(g, tree.edge_ids))
    print(f"weight {weight}")
    return EXIT_OK


def cmd_verify(args) -> int:
    g = read_graph(args.file)
    with open(args.tree) as fh:
        ids = parse_tree(fh, g)
    check = verify_tree(g, ids, args.k)
    if check:
        print("ok")
        return EXIT_OK
    print(f"invalid {check.reason.value}" + (f": {check.detail}" if check.detail else ""))
    return EXIT_NO


def cmd_gen(args) -> int:
    g = gen_random(args.n, args.m, args.red_prob, args.seed)
    with _open_out(args.output) as out:
        write_graph(g, out)
    return EXIT_OK


def cmd_oracle_feasible(args) -> int:
    g = read_graph(args.file)
    print(" ".join(str(k) for k in sorted(enumerate_feasible(g, args.max_edges))))
    return EXIT_OK


def cmd_bench(args) -> int:
    report = run_bench(
        parse_sizes(args.sizes),
        args.red_prob,
        KRule(args.k_rule),
        args.trials,
        args.seed,
        args.exchange_cap,
    )
    with _open_out(args.output) as out:
        report.write_csv(out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kredspan",
        description="Spanning trees with a prescribed number of red edges.",
    )
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide whether a k-red spanning tree exists")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("range", help="print the feasible red counts as 'k_min k_max'")
    p.add_argument("file")
    p.set_defaults(func=cmd_range)

    p = sub.add_parser("build", help="print a k-red spanning tree")
    p.add_argument("file")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--algo", choices=("linear", "exchange"), default="linear")
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("mst", help="min/max spanning tree under 0/1 weights")
    p.add_argument("file")
    p.add_argument("--sense", choices=("min", "max"), required=True)
    p.add_argument("--zero-color", choices=("red", "blue"), default="red")
    p.set_defaults(func=cmd_mst)

    p = sub.add_parser("verify", help="check a tree file against a graph")
    p.add_argument("file")
    p.add_argument("--tree", required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("gen", help="write a random connected instance")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--red-prob", type=float, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("oracle-feasible", help="brute-force set of feasible red counts")
    p.add_argument("file")
    p.add_argument("--max-edges", type=int, default=MAX_ENUMERATION_EDGES, help=argparse.SUPPRESS)
    p.set_defaults(func=cmd_oracle_feasible)

    p = sub.add_parser("bench", help="scaling benchmark, CSV output")
    p.add_argument("--sizes", required=True, help="comma separated n:m pairs")
    p.add_argument("--red-prob", type=float, default=0.5)
    p.add_argument("--k-rule", choices=[r.value for r in KRule], default="mid")
    p.add_argument("--trials", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exchange-cap", type=int, default=DEFAULT_EXCHANGE_CAP)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except InfeasibleK as exc:
        print(f"infeasible: {exc}", file=sys.stderr)
        return EXIT_NO
    except (GraphDisconnected, TooLarge, BadParams, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except KRedError as exc:
        # parse errors, self-loops, out-of-range endpoints
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except Exception as exc:  # noqa: BLE001
        print(f"internal error: {exc!r}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
