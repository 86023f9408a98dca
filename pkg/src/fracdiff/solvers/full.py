"""Full-history scheme: every stored stencil enters every step."""
from __future__ import annotations

import numpy as np

from fracdiff.config import SimConfig
from fracdiff.solvers.base import RunReport, Solver, drive


class LapHistory:
    """Append-only stack of interior stencil fields, indexed by timestep."""

    def __init__(self, shape: tuple[int, int], capacity: int):
        self._data = np.empty((max(capacity, 1),) + shape)
        self._len = 0

    def __len__(self) -> int:
        return self._len

    def append(self, lap: np.ndarray) -> None:
        if self._len == len(self._data):
            grown = np.empty((2 * len(self._data),) + self._data.shape[1:])
            grown[: self._len] = self._data[: self._len]
            self._data = grown
        self._data[self._len] = lap
        self._len += 1

    @property
    def array(self) -> np.ndarray:
        return self._data[: self._len]


class FullSolver(Solver):
    scheme = "full"

    def __init__(self, cfg: SimConfig, u0=None):
        self.history = LapHistory((cfg.ny - 2, cfg.nx - 2), cfg.n_steps + 1)
        super().__init__(cfg, u0)

    def _store(self, i, lap):
        self.history.append(lap)

    def _terms(self):
        n = self.n
        # history index i enters with weight psi(n - i)
        coeffs = self.kernel.weights[n::-1]
        return coeffs, self.history.array[: n + 1]


def full_run(cfg: SimConfig) -> RunReport:
    return drive(FullSolver(cfg), snapshot_steps=cfg.snapshot_steps)
