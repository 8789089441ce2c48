"""``lonlab`` command line: generate, analyze, sweep, verify.

Exit codes: 0 success, 1 usage, 2 capacity, 3 verification failure, 4 I/O or
failed sweep instances.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from .basins import DEFAULT_MAX_EXHAUSTIVE_N
from .errors import CapacityError, InvalidParametersError
from .experiment import analyze, sweep
from .landscape import load_landscape, make_landscape, save_landscape
from .verify import MAX_VERIFY_N, verify

EXIT_OK, EXIT_USAGE, EXIT_CAPACITY, EXIT_VERIFY, EXIT_IO = 0, 1, 2, 3, 4


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def _int_list(text: str) -> list[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lonlab", description="Local optima networks of NK landscapes.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log progress to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    gen = sub.add_parser("generate", help="write a landscape descriptor")
    gen.add_argument("--n", type=int, required=True)
    gen.add_argument("--k", type=int, required=True)
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--out", required=True, help="descriptor path (JSON)")

    ana = sub.add_parser("analyze", help="exhaustively analyze one instance")
    ana.add_argument("--landscape", help="descriptor written by 'generate'")
    ana.add_argument("--n", type=int)
    ana.add_argument("--k", type=int)
    ana.add_argument("--seed", type=int)
    ana.add_argument("--out", required=True, help="output directory")
    ana.add_argument("--threads", type=int, default=1)
    ana.add_argument("--max-exhaustive-n", type=int, default=DEFAULT_MAX_EXHAUSTIVE_N)

    swp = sub.add_parser("sweep", help="analyze many seeds per (n, k) and aggregate")
    swp.add_argument("--n", type=_int_list, required=True, help="gene count(s), comma separated")
    swp.add_argument("--k-list", type=_int_list, required=True)
    swp.add_argument("--instances", type=int, default=30)
    swp.add_argument("--base-seed", type=int, default=1)
    swp.add_argument("--out", required=True)
    swp.add_argument("--threads", type=int, default=1)
    swp.add_argument("--max-exhaustive-n", type=int, default=DEFAULT_MAX_EXHAUSTIVE_N)

    ver = sub.add_parser("verify", help="compare against naive reference implementations")
    ver.add_argument("--max-n", type=int, default=8)
    ver.add_argument("--seeds", type=int, default=5)
    return parser


def _run(args, parser) -> int:
    if args.command == "generate":
        save_landscape(make_landscape(args.n, args.k, args.seed), args.out)
        return EXIT_OK

    if args.command == "analyze":
        if args.landscape:
            land = load_landscape(args.landscape)
        elif None not in (args.n, args.k, args.seed):
            land = make_landscape(args.n, args.k, args.seed)
        else:
            parser.error("analyze needs --landscape or all of --n, --k, --seed")
        report = analyze(land, args.out, threads=args.threads, max_exhaustive_n=args.max_exhaustive_n)
        s = report.stats
        print(f"n={report.n} k={report.k} seed={report.seed}: {s.n_v} optima, {s.n_e} edges -> {args.out}")
        return EXIT_OK

    if args.command == "sweep":
        if args.instances < 1:
            parser.error("--instances must be >= 1")
        result = sweep(args.n, args.k_list, args.instances, args.base_seed, args.out,
                       threads=args.threads, max_exhaustive_n=args.max_exhaustive_n)
        for agg in result.aggregates:
            print(f"n={agg.n} k={agg.k}: {agg.instance_count} instances, "
                  f"mean optima {agg.mean('n_v'):.1f}, mean edges {agg.mean('n_e'):.1f}")
        if result.failures:
            print(f"{len(result.failures)} instance(s) failed; see {Path(args.out) / 'failures.csv'}",
                  file=sys.stderr)
            return EXIT_IO
        return EXIT_OK

    if args.command == "verify":
        if not 1 <= args.max_n <= MAX_VERIFY_N:
            parser.error(f"--max-n must be between 1 and {MAX_VERIFY_N}")
        if args.seeds < 1:
            parser.error("--seeds must be >= 1")
        ok = verify(args.max_n, args.seeds, out=sys.stdout)
        print("verification passed" if ok else "verification FAILED")
        return EXIT_OK if ok else EXIT_VERIFY

    parser.error(f"unknown command {args.command}")


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(message)s")
    try:
        return _run(args, parser)
    except InvalidParametersError as exc:
        print(f"lonlab: invalid parameters: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CapacityError as exc:
        print(f"lonlab: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except OSError as exc:
        print(f"lonlab: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())
