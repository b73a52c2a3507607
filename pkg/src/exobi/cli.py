"""Command-line driver.

    exobi verify --suite SUITE --matrix M --max-degree D \
                 --specialize h=1,h3=5 --seed N --format text|json \
                 --catalog FILE --output PATH

Exit codes: 0 when every check passes, 1 when any check fails, 2 on usage
errors (unknown suite or matrix, malformed flags, bad specialisation point).
"""

from __future__ import annotations

import argparse
import sys

from .catalog import CatalogError, load_catalog
from .report import emit_report
from .suites import SUITES, UsageError, VerifyConfig, run_suite


def _parse_specialize(text):
    out = {}
    if not text:
        return out
    for piece in text.split(","):
        piece = piece.strip()
        if not piece:
            continue
        if "=" not in piece:
            raise UsageError("--specialize expects k=v pairs, got %r" % piece)
        k, v = piece.split("=", 1)
        out[k.strip()] = v.strip()
    return out


def build_parser():
    parser = argparse.ArgumentParser(
        prog="exobi",
        description="exact verification workbench for the exotic bialgebras of "
                    "the invertible 4x4 Yang-Baxter solutions")
    sub = parser.add_subparsers(dest="command")
    verify = sub.add_parser("verify", help="run a verification suite")
    verify.add_argument("--suite", default="all", help="one of: %s" % ", ".join(SUITES))
    verify.add_argument("--matrix", default="all",
                        help="catalog matrix name, or 'all'")
    verify.add_argument("--max-degree", type=int, default=6,
                        help="degree cap for bounded rewriting checks (default 6)")
    verify.add_argument("--specialize", default="",
                        help="comma-separated numeric bindings, e.g. h=1,h3=5; "
                             "re-runs the polynomial-identity checks at the point")
    verify.add_argument("--seed", type=int, default=0,
                        help="seed for randomised property instances (default 0)")
    verify.add_argument("--format", default="text", choices=("text", "json"),
                        help="report format")
    verify.add_argument("--catalog", default=None,
                        help="catalog file to use instead of the builtin one")
    verify.add_argument("--output", default=None,
                        help="write the report to this path instead of stdout")
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command != "verify":
        parser.print_help()
        return 2
    try:
        catalog = None
        if args.catalog:
            with open(args.catalog) as fh:
                catalog = load_catalog(fh.read())
        config = VerifyConfig(max_degree=args.max_degree,
                              specialize=_parse_specialize(args.specialize),
                              seed=args.seed,
                              catalog=catalog)
        report = run_suite(args.suite, args.matrix, config)
    except (UsageError, CatalogError, OSError) as exc:
        print("error: %s" % exc, file=sys.stderr)
        return 2
    text = emit_report(report, args.format, args.output)
    if text is not None:
        sys.stdout.write(text)
    return report.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
