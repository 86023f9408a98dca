"""Command-line entry point: ``fracdiff {simulate,stability,compare,bench}``."""
from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from fracdiff import config as config_mod
from fracdiff.config import ConfigError, SimConfig
from fracdiff.grid import Field2D, write_snapshot
from fracdiff.harness import (
    bench,
    compare,
    manifest,
    write_bench_csv,
    write_manifest,
    write_report_csv,
)
from fracdiff.solvers import drive, ll_run, make_solver
from fracdiff.stability import classify

EXIT_OK = 0
EXIT_CONFIG = 1
EXIT_DIVERGED = 2


def _load_config(args) -> SimConfig:
    if args.config and args.preset:
        raise ConfigError("use either --config or --preset, not both")
    if args.config:
        cfg = config_mod.load(args.config)
    elif args.preset:
        cfg = config_mod.load_preset(args.preset)
    else:
        cfg = SimConfig()
    if getattr(args, "threads", None):
        cfg = cfg.replace(threads=args.threads).validate()
    return cfg


def _out_dir(args) -> Path:
    out = Path(args.out or os.environ.get("FRACDIFF_OUT") or "fracdiff_out")
    out.mkdir(parents=True, exist_ok=True)
    return out


def cmd_simulate(args) -> int:
    cfg = _load_config(args)
    if args.scheme:
        cfg = cfg.replace(scheme=args.scheme).validate()
    out = _out_dir(args)
    snaps = set(cfg.snapshot_steps) | {0, cfg.n_steps}
    if cfg.scheme == "linked" and args.trace:
        report = ll_run(cfg.replace(snapshot_steps=sorted(snaps)), out / "ll_trace.csv")
    else:
        report = drive(make_solver(cfg), snapshot_steps=sorted(snaps))
    for step, values in sorted(report.snapshots.items()):
        write_snapshot(Field2D(cfg.dx, cfg.dy, values), out, step)
    write_report_csv(report, out / "report.csv")
    write_manifest(manifest(cfg, report), out / "manifest.json")
    last = report.rows[-1]
    print(
        f"{cfg.scheme}: {last.step} steps, max|u|={last.max_abs_u:.6g}, "
        f"op_count={last.op_count}" + (f", DIVERGED at step {report.diverged_at}" if report.diverged else "")
    )
    return EXIT_DIVERGED if report.diverged else EXIT_OK


def cmd_stability(args) -> int:
    cfg = _load_config(args)
    overrides = {
        key: getattr(args, key)
        for key in ("gamma", "alpha", "dx", "dt", "a")
        if getattr(args, key) is not None
    }
    if "alpha" in overrides:
        overrides["beta"] = overrides["alpha"]
    if "dx" in overrides:
        overrides["dy"] = overrides["dx"]
    if args.scheme:
        overrides["scheme"] = args.scheme
    if args.approx:
        overrides["use_approx"] = True
    cfg = cfg.replace(**overrides).validate()
    scheme = cfg.scheme
    if scheme == "linked":
        raise ConfigError("no stability bound exists for the linked scheme; pass --scheme full|adaptive")
    verdict = classify(cfg, scheme)
    data = verdict.to_dict()
    if args.json:
        print(json.dumps(data, sort_keys=True))
    else:
        print(f"scheme  {verdict.scheme}{' (approx)' if cfg.use_approx and scheme == 'adaptive' else ''}")
        print(f"r       {verdict.r:.6g}")
        print(f"bound   {verdict.bound:.6g}")
        print(f"stable  {verdict.stable}" + (" (advisory: gamma > 1)" if verdict.advisory else ""))
        print(f"margin  {verdict.margin:.6g}")
        print(f"dt_max  {verdict.dt_max:.6g}")
    if args.out or os.environ.get("FRACDIFF_OUT"):
        (_out_dir(args) / "stability.json").write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_compare(args) -> int:
    cfg = _load_config(args)
    scheme = args.scheme or (cfg.scheme if cfg.scheme != "full" else "adaptive")
    out = _out_dir(args)
    report = compare(cfg, scheme)
    write_report_csv(report, out / "report.csv")
    write_manifest(manifest(cfg, report, compared_against="full"), out / "manifest.json")
    worst = max(r.max_err_pct for r in report.rows)
    print(f"{scheme} vs full: {report.rows[-1].step} steps, worst max_err_pct={worst:.6g}")
    return EXIT_DIVERGED if report.diverged else EXIT_OK


def cmd_bench(args) -> int:
    cfg = _load_config(args)
    if not (args.config or args.preset):
        # counts per interior point do not depend on grid size
        cfg = cfg.replace(nx=3, ny=3, ic="spike")
    n_list = [int(v) for v in args.n_list.split(",")]
    out = _out_dir(args)
    scheme = args.scheme or cfg.scheme
    rows = bench(scheme, n_list, cfg)
    write_bench_csv(rows, out / "bench.csv")
    for row in rows:
        print(f"N={row.N:>7d}  op_count={row.op_count:>14d}  wall_ns={row.wall_ns}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="fracdiff", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--config", help="flat key = value config file")
        p.add_argument("--preset", help=f"built-in preset ({', '.join(config_mod.preset_names())})")
        p.add_argument("--out", help="output directory (default $FRACDIFF_OUT or ./fracdiff_out)")
        p.add_argument("--threads", type=int, help="worker threads for the per-step sum")

    p = sub.add_parser("simulate", help="run one solver")
    common(p)
    p.add_argument("--scheme", choices=config_mod.SCHEMES)
    p.add_argument("--trace", action="store_true", help="write ll_trace.csv (linked scheme)")
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("stability", help="stability verdict and maximum time step")
    common(p)
    p.add_argument("--scheme", choices=("full", "adaptive"))
    p.add_argument("--gamma", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--dx", type=float, help="grid spacing (square grid)")
    p.add_argument("--dt", type=float)
    p.add_argument("--a", type=int)
    p.add_argument("--approx", action="store_true", help="use the base-interval-only sum")
    p.add_argument("--json", action="store_true", help="print JSON only")
    p.set_defaults(func=cmd_stability)

    p = sub.add_parser("compare", help="error of a scheme against the full scheme")
    common(p)
    p.add_argument("--scheme", choices=("adaptive", "linked", "full"))
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("bench", help="operation counts and wall time for several N")
    common(p)
    p.add_argument("--scheme", choices=config_mod.SCHEMES)
    p.add_argument("--n-list", default="256,512,1024,2048")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
