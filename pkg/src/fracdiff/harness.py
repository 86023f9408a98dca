"""Accuracy comparison against the full scheme and operation-count benchmarks."""
from __future__ import annotations

import csv
import json
import platform
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from fracdiff import __version__
from fracdiff.config import SimConfig
from fracdiff.solvers import FullSolver, RunReport, StepRow, make_solver

REPORT_HEADER = ["step", "sim_time", "max_abs_u", "max_err_pct", "avg_err_pct", "op_count", "wall_ns"]
BENCH_HEADER = ["N", "op_count", "wall_ns", "peak_history"]


def error_metric_defs() -> dict:
    return {
        "max_err_pct": "100 * max_interior |u_test - u_ref| / max |u_ref|",
        "avg_err_pct": "100 * mean_interior |u_test - u_ref| / max |u_ref|",
        "normalization": "reference field max |u| at the same step",
    }


def error_metrics(test: np.ndarray, ref: np.ndarray) -> tuple[float, float]:
    """``(max_err_pct, avg_err_pct)`` of ``test`` against ``ref`` over interior points."""
    test = np.asarray(test, dtype=float)
    ref = np.asarray(ref, dtype=float)
    scale = float(np.max(np.abs(ref)))
    diff = np.abs(test[1:-1, 1:-1] - ref[1:-1, 1:-1])
    if scale == 0.0:
        if diff.max() == 0.0:
            return 0.0, 0.0
        return float("inf"), float("inf")
    return 100.0 * float(diff.max()) / scale, 100.0 * float(diff.mean()) / scale


def compare(cfg: SimConfig, scheme: str, n_steps: int | None = None) -> RunReport:
    """Run ``scheme`` and the full scheme in lockstep, one error row per step.

    Stops (with ``diverged`` set) as soon as either run trips the divergence
    detector; the reference's divergence makes the comparison meaningless.
    """
    n_steps = cfg.n_steps if n_steps is None else n_steps
    ref = FullSolver(cfg)
    test = make_solver(cfg, scheme)
    report = RunReport(scheme)
    t0 = time.perf_counter_ns()

    def record():
        max_err, avg_err = error_metrics(test.u.values, ref.u.values)
        report.rows.append(
            StepRow(
                step=test.n,
                sim_time=test.n * cfg.dt,
                max_abs_u=test.max_abs,
                op_count=test.op_count,
                wall_ns=time.perf_counter_ns() - t0,
                max_err_pct=max_err,
                avg_err_pct=avg_err,
            )
        )

    record()
    for _ in range(n_steps):
        ref.step()
        test.step()
        record()
        if ref.diverged() or test.diverged():
            report.diverged = True
            report.diverged_at = test.n
            break
    report.final = test.u
    return report


@dataclass
class BenchRow:
    N: int
    op_count: int
    wall_ns: int
    peak_history: int


def bench(scheme: str, n_list, cfg: SimConfig) -> list[BenchRow]:
    """Instrumented runs of the step loop ``n = 0 .. N`` for every ``N`` in ``n_list``.

    ``N`` is the last loop index, so each run performs ``N + 1`` updates.
    """
    n_list = list(n_list)
    if n_list != sorted(n_list):
        raise ValueError("N list must be ascending")
    rows = []
    for N in n_list:
        run_cfg = cfg.replace(n_steps=N + 1, scheme=scheme)
        solver = make_solver(run_cfg)
        t0 = time.perf_counter_ns()
        for _ in range(N + 1):
            solver.step()
        wall = time.perf_counter_ns() - t0
        peak = getattr(solver, "peak_nodes", solver.n + 1)
        rows.append(BenchRow(N, solver.op_count, wall, peak))
    return rows


def _fmt(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return f"{value:.10g}"
    return str(value)


def write_report_csv(report: RunReport, path: str | Path) -> Path:
    path = Path(path)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(REPORT_HEADER)
        for row in report.rows:
            writer.writerow([_fmt(getattr(row, key)) for key in REPORT_HEADER])
    return path


def read_report_csv(path: str | Path) -> list[dict]:
    with open(path, newline="") as fh:
        return list(csv.DictReader(fh))


def write_bench_csv(rows: list[BenchRow], path: str | Path) -> Path:
    path = Path(path)
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(BENCH_HEADER)
        for row in rows:
            writer.writerow([row.N, row.op_count, row.wall_ns, row.peak_history])
    return path


def manifest(cfg: SimConfig, report: RunReport | None = None, **extra) -> dict:
    data = {
        "config": cfg.to_dict(),
        "knobs": {
            "a_interpretation": "time span (a / dt steps)" if cfg.a_is_time else "step count",
            "a_steps": cfg.a_steps,
            "boundary": f"{cfg.bc}={cfg.bc_value}",
            "divergence_rule": f"max|u| > {cfg.divergence_factor} * max|u0| or non-finite",
            "xi_step": cfg.xi_step,
            "remainder_start": "M(s, eta_max) + s",
            "error_metrics": error_metric_defs(),
        },
        "version": __version__,
        "python": platform.python_version(),
    }
    if report is not None:
        data["result"] = {
            "scheme": report.scheme,
            "steps_run": report.rows[-1].step if report.rows else 0,
            "diverged": report.diverged,
            "diverged_at": report.diverged_at,
            "op_count": report.op_count,
        }
    data.update(extra)
    return data


def write_manifest(data: dict, path: str | Path) -> Path:
    path = Path(path)
    path.write_text(json.dumps(data, indent=2, sort_keys=True) + "\n")
    return path


def config_from_manifest(path: str | Path) -> SimConfig:
    from fracdiff.config import from_mapping

    data = json.loads(Path(path).read_text())
    return from_mapping(data["config"], source=str(path))


def window_max(values, lo: int, hi: int) -> float:
    """Max of ``values[lo:hi + 1]`` (inclusive step window)."""
    return float(np.max(np.asarray(values)[lo : hi + 1]))
