"""Command-line scenario runner.

    qubitdyn <scenario> --config FILE [--set key.path=value]...
             [--output-dir DIR] [--seed N] [--no-timestamp] [--no-plots]

Writes ``report.json``, ``series_*.csv`` and ``fig_*.png`` into the output
directory.  Exit status: 0 all in-scenario checks passed, 1 a check failed,
2 configuration problem, 3 I/O failure.
"""

from __future__ import annotations

import argparse
import datetime
import sys
from pathlib import Path

from . import reporting
from .config import SCENARIO_NAMES, ConfigError, RunConfig, apply_overrides, load_config
from .scenarios import SCENARIOS, OutputSink

DEFAULT_OUTPUT_DIR = "qubitdyn-out"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="qubitdyn",
        description="Run a named scenario and emit its report, data series and figures.",
    )
    parser.add_argument("scenario", choices=SCENARIO_NAMES, help="scenario to run")
    parser.add_argument("--config", required=True, help="path to the JSON run configuration")
    parser.add_argument(
        "--set",
        dest="overrides",
        action="append",
        default=[],
        metavar="KEY=VALUE",
        help="override a config field by dotted path (repeatable)",
    )
    parser.add_argument("--output-dir", help="directory for report and series files")
    parser.add_argument("--seed", type=int, help="seed for randomized sweeps")
    parser.add_argument(
        "--no-timestamp",
        action="store_true",
        help="omit the generation timestamp so reruns are byte-identical",
    )
    parser.add_argument("--no-plots", action="store_true", help="skip figure rendering")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)

    try:
        doc = load_config(args.config)
        doc = apply_overrides(doc, args.overrides)
        if args.output_dir is not None:
            doc["output_dir"] = args.output_dir
        if args.seed is not None:
            doc["seed"] = args.seed
        cfg = RunConfig(args.scenario, doc)
    except ConfigError as exc:
        parser.print_usage(sys.stderr)
        print(f"qubitdyn: config error: {exc}", file=sys.stderr)
        return 2

    out_dir = Path(cfg.get("output_dir", DEFAULT_OUTPUT_DIR))
    try:
        out_dir.mkdir(parents=True, exist_ok=True)
    except OSError as exc:
        print(f"qubitdyn: cannot create output directory: {exc}", file=sys.stderr)
        return 3

    sink = OutputSink(out_dir, render_figures=not args.no_plots)
    try:
        body = SCENARIOS[cfg.scenario](cfg, sink)
    except ConfigError as exc:
        parser.print_usage(sys.stderr)
        print(f"qubitdyn: config error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"qubitdyn: I/O failure: {exc}", file=sys.stderr)
        return 3

    # the output location is run metadata, not part of the physics config
    echoed = {k: v for k, v in cfg.doc.items() if k != "output_dir"}
    report = {
        "scenario": cfg.scenario,
        "seed": cfg.seed,
        "config": echoed,
        "series_files": sink.series_files,
        "figure_files": sink.figure_files,
    }
    report.update(body)
    if not args.no_timestamp:
        report["generated_at"] = (
            datetime.datetime.now(datetime.timezone.utc).isoformat(timespec="seconds")
        )

    try:
        reporting.write_json(out_dir / "report.json", report)
    except OSError as exc:
        print(f"qubitdyn: I/O failure: {exc}", file=sys.stderr)
        return 3

    for check in report["checks"]:
        status = "PASS" if check["passed"] else "FAIL"
        print(
            f"[{status}] {check['name']}: {check['observed']:.3e} "
            f"{check['comparison']} {check['threshold']:.3e}"
        )
    print(f"report: {out_dir / 'report.json'}")
    return 0 if report["passed"] else 1


if __name__ == "__main__":
    sys.exit(main())
