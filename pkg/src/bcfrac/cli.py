"""Command-line front end for the scenario runner.

    bcfrac run --scenario <name> --config <path.json> --out <path.{csv|json}>
               [--refine <k>] [--parallel]
    bcfrac list
    bcfrac validate --config <path>

Exit codes: 0 pass, 1 residual above tolerance at the finest level,
2 configuration error, 3 output I/O error.
"""

from __future__ import annotations

import argparse
import dataclasses
import os
import sys

from .errors import ConfigError
from .harness import ScenarioConfig, emit_results, list_scenarios, run_scenario

__all__ = ["main", "build_parser"]

EXIT_PASS = 0
EXIT_TOLERANCE = 1
EXIT_CONFIG = 2
EXIT_IO = 3


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bcfrac",
        description="Run residual/convergence verification scenarios.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    run = sub.add_parser("run", help="execute one scenario across refinement levels")
    run.add_argument("--scenario", help="scenario name (overrides the config's entry)")
    run.add_argument("--config", help="path to a JSON configuration")
    run.add_argument("--out", help="output path ending in .csv or .json")
    run.add_argument(
        "--refine", type=int, metavar="K", help="override the number of refinement levels"
    )
    run.add_argument(
        "--parallel", action="store_true", help="run independent levels concurrently"
    )

    sub.add_parser("list", help="list available scenarios")

    val = sub.add_parser("validate", help="validate a configuration file and exit")
    val.add_argument("--config", required=True, help="path to a JSON configuration")

    return parser


def _load_config(args: argparse.Namespace) -> ScenarioConfig:
    if args.config is not None:
        cfg = ScenarioConfig.from_file(args.config)
        if args.scenario is not None and args.scenario != cfg.scenario:
            cfg = dataclasses.replace(cfg, scenario=args.scenario)
    elif args.scenario is not None:
        cfg = ScenarioConfig.default_for(args.scenario)
    else:
        raise ConfigError("run needs --config, --scenario, or both")
    if args.refine is not None:
        if args.refine < 1:
            raise ConfigError(f"--refine must be >= 1, got {args.refine}")
        cfg = dataclasses.replace(cfg, refine_levels=args.refine)
    return cfg


def _out_format(path: str) -> str:
    ext = os.path.splitext(path)[1].lower()
    if ext == ".csv":
        return "csv"
    if ext == ".json":
        return "json"
    raise ConfigError(f"cannot infer output format from {path!r}; use .csv or .json")


def _cmd_run(args: argparse.Namespace) -> int:
    try:
        cfg = _load_config(args)
        fmt = _out_format(args.out) if args.out is not None else None
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG

    rows = run_scenario(cfg, parallel=args.parallel)
    for row in rows:
        order = "-" if row.order_estimate is None else f"{row.order_estimate:.2f}"
        print(
            f"{row.scenario}  level={row.level}  h={row.h:.3e}  "
            f"residual={row.residual:.6e}  order={order}  ({row.elapsed_ms:.0f} ms)"
        )

    if fmt is not None:
        try:
            emit_results(rows, fmt, args.out)
        except ConfigError as exc:
            print(f"config error: {exc}", file=sys.stderr)
            return EXIT_CONFIG
        except OSError as exc:
            print(f"cannot write {args.out!r}: {exc}", file=sys.stderr)
            return EXIT_IO
        print(f"wrote {args.out}")

    final = rows[-1].residual
    if final <= cfg.tolerance:
        print(f"PASS  final residual {final:.6e} <= tolerance {cfg.tolerance:g}")
        return EXIT_PASS
    print(f"FAIL  final residual {final:.6e} > tolerance {cfg.tolerance:g}")
    return EXIT_TOLERANCE


def _cmd_validate(args: argparse.Namespace) -> int:
    try:
        cfg = ScenarioConfig.from_file(args.config)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG
    print(f"ok: scenario {cfg.scenario!r}, testfield {cfg.testfield!r}, "
          f"{cfg.refine_levels} level(s)")
    return EXIT_PASS


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "list":
        print(list_scenarios())
        return EXIT_PASS
    if args.command == "validate":
        return _cmd_validate(args)
    return _cmd_run(args)


if __name__ == "__main__":
    sys.exit(main())
