from fracdiff.solvers.adaptive import AdaptiveSolver, adaptive_indices, adaptive_run
from fracdiff.solvers.base import RunReport, Solver, StepRow, drive, initial_field
from fracdiff.solvers.full import FullSolver, full_run
from fracdiff.solvers.linked import LinkedSolver, ll_run

SOLVERS = {"full": FullSolver, "adaptive": AdaptiveSolver, "linked": LinkedSolver}


def make_solver(cfg, scheme=None, u0=None) -> Solver:
    return SOLVERS[scheme or cfg.scheme](cfg, u0)


def run(cfg, scheme=None) -> RunReport:
    return drive(make_solver(cfg, scheme), snapshot_steps=cfg.snapshot_steps)


__all__ = [
    "AdaptiveSolver",
    "FullSolver",
    "LinkedSolver",
    "RunReport",
    "SOLVERS",
    "Solver",
    "StepRow",
    "adaptive_indices",
    "adaptive_run",
    "drive",
    "full_run",
    "initial_field",
    "ll_run",
    "make_solver",
    "run",
]
