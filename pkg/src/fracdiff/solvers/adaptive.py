"""Adaptive-memory scheme: dense sampling of recent history, sparse weighted
sampling of older bands."""
from __future__ import annotations

from fracdiff.config import SimConfig
from fracdiff.plan import sampling_plan
from fracdiff.solvers.base import RunReport, Solver, drive
from fracdiff.solvers.full import LapHistory


def adaptive_indices(a: int, n: int) -> list[tuple[int, int]]:
    """``(lag, multiplicity)`` pairs used for the step-``n`` history sum."""
    lags, mult = sampling_plan(a, n)
    return [(int(m), int(w)) for m, w in zip(lags, mult)]


class AdaptiveSolver(Solver):
    scheme = "adaptive"

    def __init__(self, cfg: SimConfig, u0=None):
        self.a = cfg.a_steps
        if self.a < 2:
            raise ValueError(f"base interval a must be >= 2, got {self.a}")
        self.history = LapHistory((cfg.ny - 2, cfg.nx - 2), cfg.n_steps + 1)
        super().__init__(cfg, u0)

    def _store(self, i, lap):
        self.history.append(lap)

    def _terms(self):
        n = self.n
        lags, mult = sampling_plan(self.a, n)
        # order terms by ascending history index, same as the full scheme
        idx = n - lags[::-1]
        coeffs = mult[::-1] * self.kernel.weights[lags[::-1]]
        return coeffs, self.history.array[idx]


def adaptive_run(cfg: SimConfig) -> RunReport:
    return drive(AdaptiveSolver(cfg), snapshot_steps=cfg.snapshot_steps)
