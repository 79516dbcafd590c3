"""Command line entry point.

Runs the verification suites at a chosen configuration, renders the
reports as JSON or CSV, and checks baseline-compared cases against
values pinned in a baseline directory.  ``--pin-baselines`` records the
current values instead of checking them; pinned files are keyed by a
hash of the configuration, so values from one configuration are never
compared against another.
"""

from __future__ import annotations

import argparse
import sys

from .report import BaselineStore, render_reports
from .suites import SUITE_ORDER, SuiteConfig, run_suite

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tracespaces-verify",
        description="Run the numerical verification suites and report results.",
    )
    parser.add_argument("--suite", action="append", choices=SUITE_ORDER + ("all",),
                        help="suite to run (repeatable; default: all)")
    parser.add_argument("--baseline-dir", default="baselines",
                        help="directory of pinned regression values")
    parser.add_argument("--pin-baselines", action="store_true",
                        help="record current values as the pinned baselines")
    parser.add_argument("--baseline-tolerance", type=float, default=0.01,
                        help="allowed relative excess over a pinned value")
    parser.add_argument("--grid-n", type=int, default=1024,
                        help="number of samples of the periodic grid")
    parser.add_argument("--grid-l", type=float, default=1.0,
                        help="half width of the spatial interval")
    parser.add_argument("--seed", type=int, default=2024,
                        help="root seed of every random draw")
    parser.add_argument("--family-size", type=int, default=50,
                        help="size of the seeded test-function families")
    parser.add_argument("--format", choices=("json", "csv"), default="json",
                        help="report output format")
    parser.add_argument("--out", help="write the rendered report here instead of stdout")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    config = SuiteConfig(half_width=args.grid_l, n_samples=args.grid_n,
                         seed=args.seed, family_size=args.family_size)
    names = args.suite or ["all"]
    if "all" in names:
        names = list(SUITE_ORDER)

    reports = [run_suite(name, config) for name in names]
    store = BaselineStore(args.baseline_dir)
    ok = True

    if args.pin_baselines:
        for report in reports:
            store.pin(report)
            ok = ok and report.verdict()
            print(f"pinned {report.suite} -> {store.path(report.suite, report.config_hash)}")
    else:
        for report in reports:
            store.check(report, tolerance=args.baseline_tolerance)
            ok = ok and report.verdict()
        rendered = render_reports(reports, fmt=args.format)
        if args.out:
            with open(args.out, "w") as fh:
                fh.write(rendered)
        else:
            sys.stdout.write(rendered)

    for report in reports:
        verdict = "pass" if report.verdict() else "FAIL"
        print(f"{report.suite}: {verdict} ({len(report.cases)} cases)", file=sys.stderr)
    return 0 if ok else 1


if __name__ == "__main__":
    raise SystemExit(main())
