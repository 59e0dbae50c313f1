"""Command-line interface.

Exit codes: 0 success / found, 1 clean not-found, 2 usage or input error,
3 internal invariant violation (including a failed ``verify``).
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .bench import ALGOS as BENCH_ALGOS
from .bench import rows_to_tsv, run_bench
from .closure import compute_closure
from .detect import DETECTORS, InvariantViolation
from .enumeration import OracleCapError, enumerators_for
from .generators import FAMILIES, FamilySpec, gen_family
from .graph import GraphInputError, StepCounter, read_graph, serialize_graph
from .patterns import PATTERN_IDS, resolve_pattern
from .verify import verify_graph

EXIT_OK, EXIT_NONE, EXIT_USAGE, EXIT_INTERNAL = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _number(text: str):
    try:
        return int(text)
    except ValueError:
        return float(text)


def cmd_generate(args) -> int:
    family = args.family.replace("-", "_")
    if family not in FAMILIES:
        raise UsageError(f"unknown family {args.family!r}; choose from {', '.join(sorted(FAMILIES))}")
    params = {k: getattr(args, k) for k in ("t", "k", "n", "a", "b") if getattr(args, k) is not None}
    if args.p is not None:
        params["p"] = _number(args.p) if family != "gnp" else float(args.p)
    if args.pattern is not None:
        params["pattern"] = resolve_pattern(args.pattern)
    g = gen_family(FamilySpec(family, params, args.seed))
    text = serialize_graph(g)
    if args.out in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(args.out, "w") as fh:
            fh.write(text)
    return EXIT_OK


def cmd_closure(args) -> int:
    g = read_graph(args.graph)
    report = compute_closure(g)
    if args.json:
        print(json.dumps({"closure": report.c, "pair": list(report.pair) if report.pair else None,
                          "n": g.n, "m": g.m}))
    else:
        print(f"c\t{report.c}")
        print("pair\t" + (f"{report.pair[0]} {report.pair[1]}" if report.pair else "-"))
    return EXIT_OK


def _pick(table: dict, algo: Optional[str], pattern: str):
    if algo is None:
        return next(iter(table.items()))
    if algo not in table:
        raise UsageError(f"no algorithm {algo!r} for {pattern}; choose from {', '.join(table)}")
    return algo, table[algo]


def cmd_detect(args) -> int:
    pid = resolve_pattern(args.pattern)
    g = read_graph(args.graph)
    algo, fn = _pick(DETECTORS[pid], args.algo, pid)
    counter = StepCounter()
    res = fn(g, counter=counter)
    if args.json:
        payload = {"pattern": pid, "algo": algo, "found": res.found,
                   "witnesses": [list(res.witness.vertices)] if res.found else [],
                   "certificate": res.certificate, "steps": dict(counter)}
        if args.closure:
            payload["closure"] = compute_closure(g).c
        print(json.dumps(payload))
    elif res.found:
        print("found\t" + " ".join(map(str, res.witness.vertices)))
    else:
        print("none\t" + (res.certificate or ""))
    return EXIT_OK if res.found else EXIT_NONE


def cmd_enumerate(args) -> int:
    pid = resolve_pattern(args.pattern)
    g = read_graph(args.graph)
    algo, fn = _pick(enumerators_for(pid), args.algo, pid)
    counter = StepCounter()
    witnesses: list[list[int]] = []

    def visit(occ):
        if args.json:
            witnesses.append(list(occ.vertices))
        elif not args.count_only:
            sys.stdout.write(" ".join(map(str, occ.vertices)) + "\n")

    count = fn(g, visitor=visit, counter=counter)
    if args.json:
        payload = {"pattern": pid, "algo": algo, "count": count, "steps": dict(counter),
                   "closure": compute_closure(g).c}
        if not args.count_only:
            payload["witnesses"] = witnesses
        print(json.dumps(payload))
    elif args.count_only:
        print(count)
    return EXIT_OK


def cmd_verify(args) -> int:
    patterns = None if args.patterns in (None, "all") else args.patterns.split(",")
    worst = EXIT_OK
    for path in args.graphs:
        g = read_graph(path)
        report = verify_graph(g, patterns)
        if args.json:
            print(json.dumps({"graph": path, "all_agree": report.all_agree,
                              "checks": [vars(c) for c in report.checks]}))
        else:
            if len(args.graphs) > 1:
                print(f"# {path}")
            sys.stdout.write(report.to_text())
        if not report.all_agree:
            worst = EXIT_INTERNAL
    return worst


def cmd_bench(args) -> int:
    sizes = [_number(s) for s in args.sizes.split(",")]
    rows = run_bench(args.family, sizes, args.algo, density=args.density, seed=args.seed)
    sys.stdout.write(rows_to_tsv(rows))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cclosed", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="write a generated graph in edge-list format")
    gen.add_argument("family", help=", ".join(sorted(FAMILIES)))
    for flag in ("t", "k", "n", "a", "b"):
        gen.add_argument(f"--{flag}", type=int)
    gen.add_argument("--p", help="edge probability (gnp) or prime order (projective)")
    gen.add_argument("--seed", type=int)
    gen.add_argument("--pattern", help="pattern to blow up (blowup family)")
    gen.add_argument("-o", "--out", help="output path (default stdout)")
    gen.set_defaults(func=cmd_generate)

    clo = sub.add_parser("closure", help="report the c-closure")
    clo.add_argument("graph")
    clo.add_argument("--json", action="store_true")
    clo.set_defaults(func=cmd_closure)

    det = sub.add_parser("detect", help="find one induced copy of a pattern")
    det.add_argument("pattern", help="catalog id or alias, e.g. triangle, co-diamond")
    det.add_argument("graph")
    det.add_argument("--algo")
    det.add_argument("--json", action="store_true")
    det.add_argument("--closure", action="store_true", help="include the closure in --json output")
    det.set_defaults(func=cmd_detect)

    enu = sub.add_parser("enumerate", help="list every induced copy of a pattern")
    enu.add_argument("pattern")
    enu.add_argument("graph")
    enu.add_argument("--algo")
    enu.add_argument("--count-only", action="store_true")
    enu.add_argument("--json", action="store_true")
    enu.set_defaults(func=cmd_enumerate)

    ver = sub.add_parser("verify", help="compare every algorithm with the exhaustive oracle")
    ver.add_argument("graphs", nargs="+")
    ver.add_argument("--patterns", default="all", help="'all' or comma-separated pattern ids")
    ver.add_argument("--json", action="store_true")
    ver.set_defaults(func=cmd_verify)

    ben = sub.add_parser("bench", help="TSV of step counts against predicted bounds")
    ben.add_argument("--family", required=True)
    ben.add_argument("--sizes", required=True, help="comma-separated sizes")
    ben.add_argument("--algo", required=True, choices=sorted(BENCH_ALGOS))
    ben.add_argument("--density", type=float, default=0.3, help="edge probability for gnp")
    ben.add_argument("--seed", type=int, default=1)
    ben.set_defaults(func=cmd_bench)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, GraphInputError, OracleCapError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (InvariantViolation, AssertionError) as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL


if __name__ == "__main__":
    sys.exit(main())
