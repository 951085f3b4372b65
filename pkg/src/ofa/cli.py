"""Command line front end: ``ofa solve | verify | bench``.

Exit status 0 on success, 1 for unreadable or invalid input, 2 when a
cross-check fails.
"""
from __future__ import annotations

import argparse
import sys

from . import bench, verify
from .automaton import construct_fa, fa_cost, fa_size, to_dot, to_json, validate_fa
from .costs import read_cost_model
from .errors import OFAError, InputError
from .index import build_index
from .oracle import MAX_M, MAX_N
from .solver import optimal_total, solve
from .tuples import read_tuple

EXIT_OK, EXIT_INPUT, EXIT_CHECK = 0, 1, 2


class CheckFailed(Exception):
    pass


def _emit(text: str, out_path):
    if out_path:
        with open(out_path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_solve(args) -> int:
    t = read_tuple(args.input)
    costs = read_cost_model(args.weights) if args.weights else None
    ix = build_index(t, costs)
    if args.dump_index:
        _emit(ix.dump_csv(), args.dump_index)
    tables = solve(ix, args.algorithm, weighted=costs is not None)
    total = optimal_total(ix, tables)
    fa = construct_fa(ix, tables)
    report = validate_fa(fa, t)
    if not report.ok:
        raise CheckFailed(f"constructed automaton is invalid:\n{report}")
    measured = fa_size(fa) if costs is None else fa_cost(fa, costs)
    if measured != total:
        raise CheckFailed(f"constructed automaton measures {measured}, optimum is {total}")
    if args.format == "size":
        text = f"{total}\n"
    elif args.format == "json":
        text = to_json(fa, indent=2) + "\n"
    else:
        text = to_dot(fa)
    _emit(text, args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    if not 1 <= args.max_n <= MAX_N or not 1 <= args.max_m <= MAX_M:
        raise InputError(f"--max-n must be in 1..{MAX_N} and --max-m in 1..{MAX_M}")
    if args.alphabet < 2 and args.max_n > 1:
        raise InputError("--alphabet must be >= 2 unless --max-n is 1")
    if args.trials < 0:
        raise InputError("--trials must be non-negative")
    report = verify.run_verify(args.trials, args.max_n, args.max_m, args.alphabet,
                               args.seed, args.weighted)
    print(report.summary())
    return EXIT_OK if report.ok else EXIT_CHECK


def cmd_bench(args) -> int:
    try:
        sizes = bench.parse_sizes(args.sizes)
        algorithms = [a.strip() for a in args.algorithms.split(",") if a.strip()]
        for a in algorithms:
            if a not in bench.SOLVE:
                raise ValueError(f"unknown algorithm {a!r}")
    except ValueError as exc:
        raise InputError(str(exc)) from None
    instance = None
    if args.input:
        instance = read_tuple(args.input)
        if any(size != (instance.n, instance.m) for size in sizes):
            raise InputError(f"--sizes must match the --input tuple ({instance.n}x{instance.m})")
        sizes = [(instance.n, instance.m)]
    if args.repeat < 1:
        raise InputError("--repeat must be >= 1")
    records = bench.run_bench(sizes, args.alphabet, args.seed, algorithms, args.repeat, instance)
    _emit(bench.records_to_csv(records), args.csv)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="ofa", description="Optimal factoring automata for string tuples.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="build an optimal automaton for a tuple file")
    p.add_argument("input", help="text file, one string per line")
    p.add_argument("--weights", help="JSON cost model; solves the weighted problem")
    p.add_argument("--algorithm", choices=["fast", "drss"], default="fast")
    p.add_argument("--format", choices=["size", "json", "dot"], default="size")
    p.add_argument("--out", help="write output here instead of stdout")
    p.add_argument("--dump-index", metavar="PATH", help="write the R and C matrices as CSV")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="cross-check solvers against the exhaustive oracle")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--max-m", type=int, default=4)
    p.add_argument("--alphabet", type=int, default=3, help="largest alphabet size drawn (from 2)")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--weighted", action="store_true", help="random costs in [0, 5]")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="time the solvers, write CSV")
    p.add_argument("--sizes", default="", help="comma list of NxM, e.g. 200x32,400x32")
    p.add_argument("--alphabet", type=int, default=2)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--algorithms", default="fast,drss")
    p.add_argument("--repeat", type=int, default=1, help="report the median of this many runs")
    p.add_argument("--input", help="benchmark this tuple file instead of random instances")
    p.add_argument("--csv", help="output path (default stdout)")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (InputError, OSError) as exc:
        print(f"ofa: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except (CheckFailed, OFAError) as exc:
        print(f"ofa: check failed: {exc}", file=sys.stderr)
        return EXIT_CHECK


if __name__ == "__main__":
    sys.exit(main())
