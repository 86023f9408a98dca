"""2D concentration field, stencils, initial and boundary conditions.

Arrays are indexed ``values[l, j]`` with ``l`` along y and ``j`` along x, so a
row of the array is one y-line of the grid.
"""
from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

import numpy as np


@dataclass
class Field2D:
    dx: float
    dy: float
    values: np.ndarray

    def __post_init__(self):
        self.values = np.asarray(self.values, dtype=float)
        if self.values.ndim != 2 or min(self.values.shape) < 3:
            raise ValueError(f"field needs at least 3x3 points, got shape {self.values.shape}")

    @property
    def nx(self) -> int:
        return self.values.shape[1]

    @property
    def ny(self) -> int:
        return self.values.shape[0]

    @property
    def interior(self) -> np.ndarray:
        return self.values[1:-1, 1:-1]

    def is_finite(self) -> bool:
        return bool(np.isfinite(self.values).all())

    def copy(self) -> "Field2D":
        return Field2D(self.dx, self.dy, self.values.copy())


@dataclass(frozen=True)
class BoundarySpec:
    kind: str = "dirichlet"
    value: float = 0.0


def coordinates(nx: int, ny: int, dx: float, dy: float) -> tuple[np.ndarray, np.ndarray]:
    """Centred coordinates: the origin sits at index ((nx-1)/2, (ny-1)/2)."""
    x = (np.arange(nx) - (nx - 1) / 2.0) * dx
    y = (np.arange(ny) - (ny - 1) / 2.0) * dy
    return x, y


def gaussian_ic(nx: int, ny: int, dx: float, dy: float, sigma1: float, sigma2: float) -> Field2D:
    if sigma1 <= 0 or sigma2 <= 0:
        raise ValueError(f"Gaussian widths must be positive, got {sigma1!r}, {sigma2!r}")
    x, y = coordinates(nx, ny, dx, dy)
    gx = np.exp(-(x**2) / (2.0 * sigma1**2))
    gy = np.exp(-(y**2) / (2.0 * sigma2**2))
    return Field2D(dx, dy, np.outer(gy, gx))


def uniform_ic(nx: int, ny: int, dx: float, dy: float, value: float = 1.0) -> Field2D:
    return Field2D(dx, dy, np.full((ny, nx), float(value)))


def spike_ic(nx: int, ny: int, dx: float, dy: float, value: float = 1.0) -> Field2D:
    u = np.zeros((ny, nx))
    u[ny // 2, nx // 2] = value
    return Field2D(dx, dy, u)


def laplacian(f: Field2D, alpha: float, beta: float) -> np.ndarray:
    """Weighted stencil ``alpha/dx^2 * d_xx u + beta/dy^2 * d_yy u`` on interior points."""
    u = f.values
    c = u[1:-1, 1:-1]
    d_x = u[1:-1, 2:] - 2.0 * c + u[1:-1, :-2]
    d_y = u[2:, 1:-1] - 2.0 * c + u[:-2, 1:-1]
    return (alpha / f.dx**2) * d_x + (beta / f.dy**2) * d_y


def apply_bc(f: Field2D, bc: BoundarySpec = BoundarySpec()) -> Field2D:
    if bc.kind != "dirichlet":
        raise ValueError(f"unknown boundary condition kind {bc.kind!r}")
    u = f.values
    u[0, :] = bc.value
    u[-1, :] = bc.value
    u[:, 0] = bc.value
    u[:, -1] = bc.value
    return f


def write_snapshot(f: Field2D, out_dir: Path, step: int) -> Path:
    path = Path(out_dir) / f"snap_{step}.csv"
    np.savetxt(path, f.values, delimiter=",", fmt="%.12e")
    return path


def read_snapshot(path: Path) -> np.ndarray:
    return np.loadtxt(path, delimiter=",", ndmin=2)


def checkerboard_amplitude(f: Field2D) -> float:
    """Amplitude of the grid-scale mode ``(-1)**(j + l)`` over the interior.

    This is the mode with ``sin^2(k dx / 2) = 1`` in both directions, the one
    that goes unstable first when the mesh ratio exceeds its bound.
    """
    c = f.interior
    ll, jj = np.indices(c.shape)
    sign = np.where((ll + jj) % 2 == 0, 1.0, -1.0)
    return float(abs(np.sum(sign * c)) / c.size)
