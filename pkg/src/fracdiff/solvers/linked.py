"""Linked-list scheme: history condensed into power-of-two weighted nodes."""
from __future__ import annotations

from pathlib import Path

import numpy as np

from fracdiff.config import SimConfig
from fracdiff.history import HistoryList, HistoryNode
from fracdiff.solvers.base import RunReport, Solver, drive


class LinkedSolver(Solver):
    scheme = "linked"

    def __init__(self, cfg: SimConfig, u0=None):
        self.history = HistoryList(cfg.eta)
        self.peak_nodes = 0
        super().__init__(cfg, u0)

    def _store(self, i, lap):
        self.history.append_and_condense(HistoryNode(i, 1, lap))
        self.peak_nodes = max(self.peak_nodes, len(self.history))

    def _terms(self):
        n = self.n
        nodes = self.history.nodes
        steps = np.fromiter((node.i for node in nodes), dtype=np.int64, count=len(nodes))
        weights = np.fromiter((node.weight for node in nodes), dtype=float, count=len(nodes))
        coeffs = weights * self.kernel.weights[n - steps]
        return coeffs, np.stack([node.lap for node in nodes])


def ll_run(cfg: SimConfig, trace_path: str | Path | None = None) -> RunReport:
    solver = LinkedSolver(cfg)
    if trace_path is None:
        return drive(solver, snapshot_steps=cfg.snapshot_steps)
    with open(trace_path, "w") as fh:
        fh.write("step,timesteps,weights\n")

        def dump(s: LinkedSolver):
            steps = " ".join(map(str, s.history.timesteps()))
            weights = " ".join(map(str, s.history.weights()))
            fh.write(f"{s.n},{steps},{weights}\n")

        return drive(solver, snapshot_steps=cfg.snapshot_steps, on_step=dump)
