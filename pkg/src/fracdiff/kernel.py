"""Grünwald-Letnikov memory weights and the stability bounds built from them.

The weight at lag ``m`` is ``(-1)**m * binom(1 - gamma, m)``, generated by the
multiplicative recurrence ``w[m] = w[m-1] * (m - 2 + gamma) / m``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from fracdiff.plan import sampling_plan

DEFAULT_XI_STEP = 500


def _check_gamma(gamma: float) -> None:
    if not 0.0 < gamma < 2.0:
        raise ValueError(f"fractional order gamma must lie in (0, 2), got {gamma!r}")


@dataclass(frozen=True, eq=False)
class MemoryKernel:
    """Cached weights ``psi(gamma, m)`` for ``m = 0 .. len - 1``."""

    gamma: float
    weights: np.ndarray

    def __len__(self) -> int:
        return len(self.weights)

    def __getitem__(self, m):
        return self.weights[m]


@lru_cache(maxsize=64)
def _weights(gamma: float, length: int) -> np.ndarray:
    w = np.empty(length)
    w[0] = 1.0
    for m in range(1, length):
        w[m] = w[m - 1] * (m - 2 + gamma) / m
    w.setflags(write=False)
    return w


def kernel_build(gamma: float, length: int) -> MemoryKernel:
    _check_gamma(gamma)
    if length < 1:
        raise ValueError(f"kernel length must be >= 1, got {length!r}")
    return MemoryKernel(float(gamma), _weights(float(gamma), int(length)))


def alternating_sum(kernel: MemoryKernel, n: int) -> float:
    """Partial sum ``sum_{m=0}^{n} psi(gamma, m) (-1)^m``."""
    if n < 0 or n >= len(kernel):
        raise IndexError(f"n={n} outside kernel of length {len(kernel)}")
    w = kernel.weights[: n + 1]
    signs = np.where(np.arange(n + 1) % 2 == 0, 1.0, -1.0)
    return float(np.dot(w, signs))


def b_full(gamma: float) -> float:
    _check_gamma(gamma)
    return 2.0 ** (gamma - 3.0)


def xi(gamma: float, a: int, n: int) -> float:
    """Condensed alternating sum seen by the adaptive scheme at step ``n``.

    Each sampled lag ``m`` with multiplicity ``w`` contributes
    ``w * psi(gamma, m) * (-1)**m``; for ``n <= a`` this is the plain partial sum.
    """
    if a < 2:
        raise ValueError(f"base interval a must be >= 2, got {a!r}")
    if n < 1:
        raise ValueError(f"step n must be >= 1, got {n!r}")
    kernel = kernel_build(gamma, n + 1)
    lags, mult = sampling_plan(a, n)
    signs = np.where(lags % 2 == 0, 1.0, -1.0)
    return float(np.sum(mult * kernel.weights[lags] * signs))


def xi_approx(gamma: float, a: int) -> float:
    if a < 1:
        raise ValueError(f"base interval a must be >= 1, got {a!r}")
    return alternating_sum(kernel_build(gamma, a + 1), a)


def b_adap(gamma: float, a: int, n: int = DEFAULT_XI_STEP, use_approx: bool = False) -> float:
    total = xi_approx(gamma, a) if use_approx else xi(gamma, a, n)
    if total <= 0.0:
        raise ArithmeticError(
            f"non-positive condensed sum {total} for gamma={gamma}, a={a}, n={n}"
        )
    return 1.0 / (4.0 * total)


@dataclass(frozen=True)
class BoundSet:
    gamma: float
    a: int
    b_full: float
    xi: float
    xi_approx: float
    b_adap_xi: float
    b_adap_approx: float


def bound_set(gamma: float, a: int, n: int = DEFAULT_XI_STEP) -> BoundSet:
    x = xi(gamma, a, n)
    xa = xi_approx(gamma, a)
    return BoundSet(gamma, a, b_full(gamma), x, xa, 1.0 / (4.0 * x), 1.0 / (4.0 * xa))
