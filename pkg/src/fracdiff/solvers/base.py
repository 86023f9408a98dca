"""Shared explicit time stepping for the three history schemes."""
from __future__ import annotations

import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from fracdiff.config import SimConfig
from fracdiff.grid import BoundarySpec, Field2D, apply_bc, gaussian_ic, laplacian, spike_ic, uniform_ic
from fracdiff.kernel import MemoryKernel, kernel_build


def initial_field(cfg: SimConfig) -> Field2D:
    if cfg.ic == "gaussian":
        f = gaussian_ic(cfg.nx, cfg.ny, cfg.dx, cfg.dy, cfg.sigma1, cfg.sigma2)
    elif cfg.ic == "uniform":
        f = uniform_ic(cfg.nx, cfg.ny, cfg.dx, cfg.dy, cfg.ic_value)
    elif cfg.ic == "spike":
        f = spike_ic(cfg.nx, cfg.ny, cfg.dx, cfg.dy, cfg.ic_value)
    else:
        raise ValueError(f"unknown initial condition {cfg.ic!r}")
    return apply_bc(f, BoundarySpec(cfg.bc, cfg.bc_value))


def weighted_sum(
    coeffs: np.ndarray, laps: np.ndarray, pool: ThreadPoolExecutor | None = None, workers: int = 1
) -> np.ndarray:
    """``sum_k coeffs[k] * laps[k]``; every scheme goes through this one call.

    With a pool, grid rows are split across workers (results may then differ
    from the serial sum in the last bit).
    """
    if pool is None or workers < 2 or laps.shape[1] < 2:
        return np.tensordot(coeffs, laps, axes=1)
    chunks = np.array_split(np.arange(laps.shape[1]), workers)
    parts = pool.map(lambda rows: np.tensordot(coeffs, laps[:, rows], axes=1), chunks)
    return np.concatenate(list(parts), axis=0)


class Solver:
    """Explicit stepper holding ``u^n`` and whatever history its scheme keeps.

    Subclasses implement ``_terms`` (which stored stencils enter the step-``n``
    sum, and with what coefficients) and ``_store``.
    """

    scheme = ""

    def __init__(self, cfg: SimConfig, u0: Field2D | None = None):
        self.cfg = cfg
        self.bc = BoundarySpec(cfg.bc, cfg.bc_value)
        self.u = (u0.copy() if u0 is not None else initial_field(cfg))
        self.n = 0
        self.op_count = 0
        self.u0_max = float(np.max(np.abs(self.u.values)))
        self.kernel = kernel_build(cfg.gamma, max(cfg.n_steps, 1) + 1)
        self.dt_gamma = cfg.dt**cfg.gamma
        self._pool = ThreadPoolExecutor(cfg.threads) if cfg.threads > 1 else None
        self._store(0, laplacian(self.u, cfg.alpha, cfg.beta))

    def _kernel_upto(self, n: int) -> MemoryKernel:
        if n >= len(self.kernel):
            self.kernel = kernel_build(self.cfg.gamma, 2 * (n + 1))
        return self.kernel

    def _terms(self) -> tuple[np.ndarray, np.ndarray]:
        raise NotImplementedError

    def _store(self, i: int, lap: np.ndarray) -> None:
        raise NotImplementedError

    def step(self) -> "Solver":
        """Advance ``u^n -> u^{n+1}``."""
        self._kernel_upto(self.n)
        coeffs, laps = self._terms()
        acc = weighted_sum(coeffs, laps, self._pool, self.cfg.threads)
        self.op_count += len(coeffs) * self.cfg.n_interior
        values = self.u.values.copy()
        values[1:-1, 1:-1] += self.dt_gamma * acc
        self.u = apply_bc(Field2D(self.u.dx, self.u.dy, values), self.bc)
        self.n += 1
        self._store(self.n, laplacian(self.u, self.cfg.alpha, self.cfg.beta))
        return self

    @property
    def max_abs(self) -> float:
        return float(np.max(np.abs(self.u.values)))

    def diverged(self) -> bool:
        if not self.u.is_finite():
            return True
        return self.max_abs > self.cfg.divergence_factor * self.u0_max


@dataclass
class StepRow:
    step: int
    sim_time: float
    max_abs_u: float
    op_count: int
    wall_ns: int
    max_err_pct: float | None = None
    avg_err_pct: float | None = None


@dataclass
class RunReport:
    scheme: str
    rows: list[StepRow] = field(default_factory=list)
    diverged: bool = False
    diverged_at: int | None = None
    snapshots: dict[int, np.ndarray] = field(default_factory=dict)
    final: Field2D | None = None

    @property
    def op_count(self) -> int:
        return self.rows[-1].op_count if self.rows else 0

    def column(self, name: str) -> np.ndarray:
        return np.array([getattr(r, name) for r in self.rows], dtype=float)


def drive(solver: Solver, n_steps: int | None = None, snapshot_steps=(), on_step=None) -> RunReport:
    """Run ``n_steps`` updates, recording one row per state (step 0 is the initial field).

    Stops early, without raising, when the divergence detector trips.
    """
    cfg = solver.cfg
    n_steps = cfg.n_steps if n_steps is None else n_steps
    wanted = set(snapshot_steps)
    report = RunReport(solver.scheme)
    t0 = time.perf_counter_ns()

    def record():
        row = StepRow(
            step=solver.n,
            sim_time=solver.n * cfg.dt,
            max_abs_u=solver.max_abs,
            op_count=solver.op_count,
            wall_ns=time.perf_counter_ns() - t0,
        )
        report.rows.append(row)
        if solver.n in wanted:
            report.snapshots[solver.n] = solver.u.values.copy()
        if on_step is not None:
            on_step(solver)

    record()
    for _ in range(n_steps):
        solver.step()
        record()
        if solver.diverged():
            report.diverged = True
            report.diverged_at = solver.n
            break
    report.final = solver.u
    return report
