"""Command line front end.

Subcommands: ``gen`` (family generators), ``gamma2`` and ``stability``
(one graph6 graph per input line, one result line per graph), and
``verify`` (the claim suite). Exit codes: 0 success, 1 input error,
2 usage error, 3 internal solver/oracle disagreement. Claim FAILs are
data, not failures, and leave the exit code at 0.

The environment variable DOMSTAB_THREADS (a positive integer) caps the
verify worker count; the default is the available parallelism. Outputs
are byte-identical across runs with the same flags and seed.
"""

from __future__ import annotations

import argparse
import os
import sys
from typing import IO

from .claims import FAIL, PASS, SKIPPED, SolverDisagreementError, SuiteConfig, run_suite
from .families import FAMILIES, generate
from .graph import GraphError
from .io import parse_graph6, write_dot, write_graph6
from .report import render_report
from .solver import gamma2
from .stability import st, st_bruteforce


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="domstab",
        description="Exact 2-domination numbers, removal stability, "
                    "and claim verification for small graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate a named family member")
    gen.add_argument("family", choices=sorted(FAMILIES))
    gen.add_argument("params", nargs="+", type=int)
    gen.add_argument("--format", choices=("g6", "dot"), default="g6")

    g2 = sub.add_parser("gamma2", help="2-domination number per input graph")
    g2.add_argument("--input", default="-", help="graph6 lines (default stdin)")

    stab = sub.add_parser("stability", help="removal stability per input graph")
    stab.add_argument("--input", default="-", help="graph6 lines (default stdin)")
    stab.add_argument("--oracle", action="store_true",
                      help="force the brute-force search")

    verify = sub.add_parser("verify", help="run the claim verification suite")
    verify.add_argument("--claims", default="all",
                        help="'all' or a comma-separated id list (e.g. C01,C04)")
    verify.add_argument("--max-n", type=int, default=10, dest="max_n")
    verify.add_argument("--seed", type=int, default=271828)
    verify.add_argument("--report", choices=("json", "csv", "markdown"),
                        default="json")
    verify.add_argument("--out", default="-",
                        help="report destination (default stdout)")
    return parser


def _read_lines(path: str) -> list[str]:
    if path == "-":
        return sys.stdin.read().splitlines()
    with open(path, "r", encoding="ascii") as handle:
        return handle.read().splitlines()


def _cmd_gen(args: argparse.Namespace) -> int:
    try:
        g = generate(args.family, *args.params)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.format == "g6":
        print(write_graph6(g))
    else:
        sys.stdout.write(write_dot(g))
    return 0


def _comma_list(members: tuple[int, ...]) -> str:
    return ",".join(str(v) for v in members)


def _cmd_gamma2(args: argparse.Namespace) -> int:
    status = 0
    for lineno, line in enumerate(_read_lines(args.input), start=1):
        try:
            g = parse_graph6(line)
            result = gamma2(g)
        except (GraphError, ValueError) as exc:
            print(f"error: line {lineno}: {exc}", file=sys.stderr)
            status = 1
            continue
        print(f"{line} gamma2={result.value} "
              f"witness={_comma_list(result.witness.members())}")
    return status


def _cmd_stability(args: argparse.Namespace) -> int:
    solve = st_bruteforce if args.oracle else st
    status = 0
    for lineno, line in enumerate(_read_lines(args.input), start=1):
        try:
            g = parse_graph6(line)
            result = solve(g)
        except (GraphError, ValueError) as exc:
            print(f"error: line {lineno}: {exc}", file=sys.stderr)
            status = 1
            continue
        print(f"{line} st={result.value} "
              f"removal={_comma_list(result.witness.members())} "
              f"gamma2_before={result.gamma2_before} "
              f"gamma2_after={result.gamma2_after}")
    return status


def _worker_count() -> int:
    raw = os.environ.get("DOMSTAB_THREADS")
    if raw is None:
        return os.cpu_count() or 1
    try:
        value = int(raw)
    except ValueError:
        raise GraphError(f"DOMSTAB_THREADS must be a positive integer, got {raw!r}")
    if value < 1:
        raise GraphError(f"DOMSTAB_THREADS must be a positive integer, got {raw!r}")
    return value


def _open_out(path: str) -> IO[str]:
    if path == "-":
        return sys.stdout
    return open(path, "w", encoding="utf-8", newline="")


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.claims.strip() == "all":
        ids = None
    else:
        ids = tuple(part.strip() for part in args.claims.split(",") if part.strip())
        if not ids:
            print("error: --claims got an empty id list", file=sys.stderr)
            return 2
    try:
        threads = _worker_count()
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    config = SuiteConfig(max_n=args.max_n, seed=args.seed, claim_ids=ids,
                         threads=threads)
    try:
        report = run_suite(config)
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 2
    except SolverDisagreementError as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return 3
    text = render_report(report, args.report)
    out = _open_out(args.out)
    try:
        out.write(text)
    finally:
        if out is not sys.stdout:
            out.close()
    passed = sum(1 for r in report.results if r.verdict == PASS)
    failed = sum(1 for r in report.results if r.verdict == FAIL)
    skipped = sum(1 for r in report.results if r.verdict == SKIPPED)
    print(f"claims={len(report.summaries)} instances={len(report.results)} "
          f"pass={passed} fail={failed} skipped={skipped}")
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 2
    handlers = {
        "gen": _cmd_gen,
        "gamma2": _cmd_gamma2,
        "stability": _cmd_stability,
        "verify": _cmd_verify,
    }
    return handlers[args.command](args)


if __name__ == "__main__":
    sys.exit(main())
