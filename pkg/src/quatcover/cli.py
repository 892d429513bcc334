"""Command line: ``quatcover verify <suite> [options]``."""

from __future__ import annotations

import argparse
import sys

from .report import emit_report
from .suites import SUITES, run_suite


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="quatcover", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    v = sub.add_parser("verify", help="run a verification suite and print its report")
    v.add_argument("suite", choices=SUITES)
    v.add_argument("--alpha", help="cubic parameter as p/q, or 'symbolic'")
    v.add_argument("--genus", type=int, default=2)
    v.add_argument("--prime", type=int, default=11, help="prime for the finite-field oracle")
    v.add_argument("--format", choices=("json", "text"), default="json")
    v.add_argument("--out", help="write the report here instead of stdout")
    v.add_argument("--timings", action="store_true", help="include per-check timings (not deterministic)")
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    params = {"genus": args.genus, "prime": args.prime}
    if args.alpha is not None:
        params["alpha"] = args.alpha
    try:
        report = run_suite(args.suite, params)
    except ValueError as exc:
        print(f"quatcover: error: {exc}", file=sys.stderr)
        return 2
    text = emit_report(report, args.format, args.out, timings=args.timings)
    if args.out is None:
        sys.stdout.write(text)
    return 0 if report.ok else 1


if __name__ == "__main__":
    sys.exit(main())
