"""Worst-case (grid-scale mode) stability verdicts for a configuration.

Bounds are on the mesh ratio ``r = alpha * dt**gamma / dx**2``. For unequal
spacings or coefficients the equivalent ratio
``dt**gamma * (alpha / dx**2 + beta / dy**2) / 2`` is used, which reduces to
``r`` on a square grid with ``alpha == beta``. Verdicts for ``gamma > 1`` are
advisory only.
"""
from __future__ import annotations

from dataclasses import asdict, dataclass

from fracdiff.config import SimConfig
from fracdiff.kernel import b_adap, b_full


@dataclass(frozen=True)
class StabilityVerdict:
    scheme: str
    r: float
    bound: float
    stable: bool
    margin: float
    dt_max: float
    advisory: bool

    def to_dict(self) -> dict:
        return asdict(self)


def _stiffness(cfg: SimConfig) -> float:
    return 0.5 * (cfg.alpha / cfg.dx**2 + cfg.beta / cfg.dy**2)


def mesh_ratio(cfg: SimConfig) -> float:
    return cfg.dt**cfg.gamma * _stiffness(cfg)


def bound(cfg: SimConfig, scheme: str | None = None, use_approx: bool | None = None) -> float:
    scheme = scheme or cfg.scheme
    use_approx = cfg.use_approx if use_approx is None else use_approx
    if scheme == "full":
        return b_full(cfg.gamma)
    if scheme == "adaptive":
        return b_adap(cfg.gamma, cfg.a_steps, cfg.xi_step, use_approx)
    raise ValueError(f"no stability bound is available for scheme {scheme!r}")


def dt_max(cfg: SimConfig, scheme: str | None = None, use_approx: bool | None = None) -> float:
    return (bound(cfg, scheme, use_approx) / _stiffness(cfg)) ** (1.0 / cfg.gamma)


def classify(cfg: SimConfig, scheme: str | None = None, use_approx: bool | None = None) -> StabilityVerdict:
    scheme = scheme or cfg.scheme
    b = bound(cfg, scheme, use_approx)
    r = mesh_ratio(cfg)
    return StabilityVerdict(
        scheme=scheme,
        r=r,
        bound=b,
        stable=r <= b,
        margin=b - r,
        dt_max=(b / _stiffness(cfg)) ** (1.0 / cfg.gamma),
        advisory=cfg.gamma > 1.0,
    )
