"""Simulation configuration: a flat ``key = value`` file (TOML syntax)."""
from __future__ import annotations

import dataclasses
import json
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path

import tomli

SCHEMES = ("full", "adaptive", "linked")
IC_KINDS = ("gaussian", "uniform", "spike")
BC_KINDS = ("dirichlet",)


class ConfigError(ValueError):
    """Malformed or inconsistent configuration; ``line`` is 1-based when known."""

    def __init__(
        self,
        message: str,
        line: int | None = None,
        source: str | None = None,
        key: str | None = None,
    ):
        self.message = message
        self.key = key
        self.line = line
        self.source = source
        where = ""
        if source is not None:
            where = f"{source}:{line}: " if line is not None else f"{source}: "
        elif line is not None:
            where = f"line {line}: "
        super().__init__(where + message)


@dataclass
class SimConfig:
    gamma: float = 0.6
    alpha: float = 50.0
    beta: float = 50.0
    dt: float = 0.1
    dx: float = 10.0
    dy: float = 10.0
    nx: int = 20
    ny: int = 20
    n_steps: int = 2000
    scheme: str = "adaptive"
    a: int = 8
    # interpret `a` as a time span and convert to steps via a / dt
    a_is_time: bool = False
    eta: int = 15
    ic: str = "gaussian"
    sigma1: float = 5.0
    sigma2: float = 5.0
    ic_value: float = 1.0
    bc: str = "dirichlet"
    bc_value: float = 0.0
    snapshot_steps: list[int] = field(default_factory=list)
    divergence_factor: float = 10.0
    xi_step: int = 500
    use_approx: bool = False
    threads: int = 1

    @property
    def a_steps(self) -> int:
        if self.a_is_time:
            return max(2, int(round(self.a / self.dt)))
        return int(self.a)

    @property
    def n_interior(self) -> int:
        return (self.nx - 2) * (self.ny - 2)

    def replace(self, **changes) -> "SimConfig":
        return dataclasses.replace(self, **changes)

    def validate(self) -> "SimConfig":
        for name in ("gamma", "alpha", "beta", "dt", "dx", "dy"):
            if not getattr(self, name) > 0:
                raise ConfigError(f"{name} must be positive, got {getattr(self, name)!r}", key=name)
        if not self.gamma < 2:
            raise ConfigError(f"gamma must lie in (0, 2), got {self.gamma!r}", key="gamma")
        if self.nx < 3 or self.ny < 3:
            raise ConfigError(
                f"nx and ny must be >= 3, got {self.nx}x{self.ny}",
                key="nx" if self.nx < 3 else "ny",
            )
        if self.n_steps < 0:
            raise ConfigError(f"n_steps must be >= 0, got {self.n_steps}", key="n_steps")
        if self.scheme not in SCHEMES:
            raise ConfigError(f"scheme must be one of {SCHEMES}, got {self.scheme!r}", key="scheme")
        if self.scheme == "adaptive" and self.a_steps < 2:
            raise ConfigError(f"adaptive scheme needs a >= 2, got {self.a!r}", key="a")
        if self.scheme == "linked" and self.eta < 2:
            raise ConfigError(f"linked scheme needs eta >= 2, got {self.eta!r}", key="eta")
        if self.ic not in IC_KINDS:
            raise ConfigError(f"ic must be one of {IC_KINDS}, got {self.ic!r}", key="ic")
        if self.ic == "gaussian" and not (self.sigma1 > 0 and self.sigma2 > 0):
            raise ConfigError(
                "gaussian ic needs positive sigma1 and sigma2",
                key="sigma1" if not self.sigma1 > 0 else "sigma2",
            )
        if self.bc not in BC_KINDS:
            raise ConfigError(f"bc must be one of {BC_KINDS}, got {self.bc!r}", key="bc")
        if self.divergence_factor <= 1:
            raise ConfigError("divergence_factor must exceed 1", key="divergence_factor")
        if self.threads < 1:
            raise ConfigError("threads must be >= 1", key="threads")
        return self

    def to_dict(self) -> dict:
        return dataclasses.asdict(self)

    def to_toml(self) -> str:
        lines = []
        for key, value in self.to_dict().items():
            lines.append(f"{key} = {_toml_value(value)}")
        return "\n".join(lines) + "\n"


_FIELDS = {f.name: f for f in dataclasses.fields(SimConfig)}


def _toml_value(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, str):
        return json.dumps(value)
    if isinstance(value, list):
        return "[" + ", ".join(_toml_value(v) for v in value) + "]"
    return repr(value)


def _key_line(text: str, key: str) -> int | None:
    for i, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped.split("=", 1)[0].strip() == key and "=" in stripped:
            return i
    return None


def _coerce(key: str, value, text: str, source: str | None):
    default = _FIELDS[key].default
    kind = type(default) if default is not dataclasses.MISSING else list
    line = _key_line(text, key)
    if kind is list:
        if not isinstance(value, list) or not all(
            isinstance(v, int) and not isinstance(v, bool) for v in value
        ):
            raise ConfigError(f"{key} must be a list of integers", line, source)
        return [int(v) for v in value]
    if kind is bool:
        if not isinstance(value, bool):
            raise ConfigError(f"{key} must be true or false", line, source)
        return value
    if kind is int:
        if isinstance(value, bool) or not isinstance(value, int):
            raise ConfigError(f"{key} must be an integer, got {value!r}", line, source)
        return value
    if kind is float:
        if isinstance(value, bool) or not isinstance(value, (int, float)):
            raise ConfigError(f"{key} must be a number, got {value!r}", line, source)
        return float(value)
    if not isinstance(value, str):
        raise ConfigError(f"{key} must be a string, got {value!r}", line, source)
    return value


def from_mapping(data: dict, text: str = "", source: str | None = None) -> SimConfig:
    kwargs = {}
    for key, value in data.items():
        if key not in _FIELDS:
            raise ConfigError(f"unknown key {key!r}", _key_line(text, key), source)
        if isinstance(value, dict):
            raise ConfigError(f"{key}: nested tables are not supported", _key_line(text, key), source)
        kwargs[key] = _coerce(key, value, text, source)
    cfg = SimConfig(**kwargs)
    try:
        return cfg.validate()
    except ConfigError as exc:
        line = _key_line(text, exc.key) if exc.key else None
        raise ConfigError(exc.message, line, source, exc.key) from None


def loads(text: str, source: str | None = None) -> SimConfig:
    try:
        data = tomli.loads(text)
    except tomli.TOMLDecodeError as exc:
        raise ConfigError(str(exc), getattr(exc, "lineno", None), source) from None
    return from_mapping(data, text, source)


def load(path: str | Path) -> SimConfig:
    path = Path(path)
    return loads(path.read_text(), source=str(path))


def preset_names() -> list[str]:
    files = resources.files("fracdiff") / "presets"
    return sorted(p.name[:-5] for p in files.iterdir() if p.name.endswith(".toml"))


def load_preset(name: str) -> SimConfig:
    res = resources.files("fracdiff") / "presets" / f"{name}.toml"
    if not res.is_file():
        raise ConfigError(f"unknown preset {name!r}; available: {', '.join(preset_names())}")
    return loads(res.read_text(), source=f"preset:{name}")
