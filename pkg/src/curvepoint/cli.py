"""Command-line entry point: simulate, analyze, serve.

Exit codes: 0 success, 2 usage/config error, 3 runtime failure.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
import time

from . import analysis, experiment
from .config import ConfigError, PRESETS, load_plan
from .geometry import DisplayGeometry
from .serve import CoreService, make_server

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_RUNTIME = 3


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvepoint",
        description="Simulate and analyze ray-cast target selection on a large curved display.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    sim = sub.add_parser("simulate", help="run an experiment plan and write a trial CSV")
    sim.add_argument("--config", help="JSON plan configuration")
    sim.add_argument("--preset", choices=PRESETS, help="published factor grid to start from")
    sim.add_argument("--seed", type=int, help="master seed override")
    sim.add_argument("--out", default="trials.csv", help="output CSV path")

    ana = sub.add_parser("analyze", help="compute reports from a trial CSV")
    ana.add_argument("--in", dest="input", required=True, help="trial CSV from simulate")
    ana.add_argument(
        "--report", required=True, choices=("throughput", "summary", "fitts", "figures"),
        help="which report to produce",
    )
    ana.add_argument(
        "--group", default="technique",
        help="comma-separated grouping keys (summary/fitts), e.g. 'technique,distance'",
    )
    ana.add_argument(
        "--out", default="-",
        help="report CSV path, or a directory for --report figures (default stdout)",
    )

    srv = sub.add_parser("serve", help="serve the interactive session protocol over HTTP")
    srv.add_argument("--port", type=int, default=8741)
    srv.add_argument("--config", help="JSON plan configuration (geometry and seed)")
    srv.add_argument("--seed", type=int, default=0)
    return parser


def _cmd_simulate(args: argparse.Namespace) -> int:
    plan = load_plan(args.config, args.preset, args.seed)
    started = time.perf_counter()
    records = experiment.run(plan)
    experiment.write_csv(records, args.out)
    elapsed = time.perf_counter() - started
    print(f"wrote {len(records)} records to {args.out} in {elapsed:.1f}s")
    return EXIT_OK


def _open_out(path: str):
    if path == "-":
        return sys.stdout
    return open(path, "w", newline="", encoding="utf-8")


def _cmd_analyze(args: argparse.Namespace) -> int:
    records = experiment.read_csv(args.input)
    keys = [k.strip() for k in args.group.split(",") if k.strip()]
    if args.report == "figures":
        out_dir = "." if args.out == "-" else args.out
        os.makedirs(out_dir, exist_ok=True)
        for name, (view_keys, _measure) in analysis.FIGURE_VIEWS.items():
            path = os.path.join(out_dir, f"{name}.csv")
            with open(path, "w", newline="", encoding="utf-8") as fh:
                writer = csv.writer(fh, lineterminator="\n")
                writer.writerow([*view_keys, "y", "ci95_halfwidth"])
                for group, y, ci in analysis.figure_view(records, name):
                    writer.writerow([*group, format(y, ".9g"), format(ci, ".9g")])
        print(f"wrote {len(analysis.FIGURE_VIEWS)} plot-data CSVs to {out_dir}")
        return EXIT_OK
    out = _open_out(args.out)
    close = out is not sys.stdout
    try:
        writer = csv.writer(out, lineterminator="\n")
        if args.report == "throughput":
            report = analysis.throughput(records)
            writer.writerow(["technique", "throughput_bps"])
            for tech, tp in report.technique_means.items():
                writer.writerow([tech, format(tp, ".9g")])
        elif args.report == "summary":
            writer.writerow([*keys, "mean_mt_s", "mt_ci95_halfwidth", "accuracy", "n_trials"])
            for row in analysis.summarize(records, keys):
                writer.writerow(
                    [*row.group,
                     format(row.mean_mt_s, ".9g"),
                     format(row.mt_ci95_halfwidth, ".9g"),
                     format(row.accuracy, ".9g"),
                     row.n_trials]
                )
        else:  # fitts
            groups: dict[tuple, list[experiment.TrialRecord]] = {}
            keyfuncs = [analysis.GROUPING_KEYS[k] for k in keys if k in analysis.GROUPING_KEYS]
            unknown = [k for k in keys if k not in analysis.GROUPING_KEYS]
            if unknown:
                raise ConfigError(f"unknown grouping key(s) {unknown}")
            for rec in records:
                groups.setdefault(tuple(kf(rec) for kf in keyfuncs), []).append(rec)
            writer.writerow([*keys, "intercept_s", "slope_s_per_bit", "r_squared", "n_points"])
            for key in sorted(groups, key=lambda k: tuple(str(x) for x in k)):
                points = analysis.mean_mt_by_id(groups[key])
                intercept, slope, r2 = analysis.fitts_fit(points)
                writer.writerow(
                    [*key, format(intercept, ".9g"), format(slope, ".9g"),
                     format(r2, ".9g"), len(points)]
                )
    finally:
        if close:
            out.close()
    if close:
        print(f"wrote {args.report} report to {args.out}")
    return EXIT_OK


def _cmd_serve(args: argparse.Namespace) -> int:
    geom = DisplayGeometry()
    if args.config:
        geom = load_plan(args.config, None, None).geom
    service = CoreService(geom=geom, master_seed=args.seed)
    try:
        server = make_server(args.port, service)
    except OSError as exc:
        print(f"cannot bind port {args.port}: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    print(f"serving on http://127.0.0.1:{args.port} (Ctrl-C to stop)")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        if args.command == "simulate":
            return _cmd_simulate(args)
        if args.command == "analyze":
            return _cmd_analyze(args)
        return _cmd_serve(args)
    except (ConfigError, FileNotFoundError, ValueError) as exc:
        # bad config, infeasible plan, malformed input files
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    except Exception as exc:  # unexpected: runtime failure
        print(f"runtime failure: {exc}", file=sys.stderr)
        return EXIT_RUNTIME


if __name__ == "__main__":
    sys.exit(main())
