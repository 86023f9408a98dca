"""History sampling plan for the adaptive-memory scheme.

Lags ``0..a`` are sampled individually. Every older band ``(a**(s-1), a**s]``
is sampled at centres ``M(s, eta) = a**(s-1) + (2s-1)*eta - s + 1`` carrying
multiplicity ``2s-1``; lags left over at the end of a band (fewer than
``2s-1`` of them) are sampled individually starting at ``M(s, eta_max) + s``.
Multiplicities always sum to ``n + 1``.
"""
from __future__ import annotations

from functools import lru_cache

import numpy as np


def s_max(a: int, n: int) -> int:
    """Smallest ``s`` with ``a**(s-1) + 1 <= n <= a**s`` (requires ``n > a``)."""
    s = 2
    while a**s < n:
        s += 1
    return s


def centre(a: int, s: int, eta: int) -> int:
    return a ** (s - 1) + (2 * s - 1) * eta - s + 1


def eta_max(a: int, s: int, n: int) -> int:
    lo = a ** (s - 1)
    return min((a**s - lo) // (2 * s - 1), (n - lo) // (2 * s - 1))


@lru_cache(maxsize=4096)
def _plan(a: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    if n <= a:
        return _frozen(np.arange(n + 1), np.ones(n + 1))
    lags = list(range(a + 1))
    mult = [1] * (a + 1)
    for s in range(2, s_max(a, n) + 1):
        k = 2 * s - 1
        top = eta_max(a, s, n)
        for eta in range(1, top + 1):
            lags.append(centre(a, s, eta))
            mult.append(k)
        for p in range(centre(a, s, top) + s, min(a**s, n) + 1):
            lags.append(p)
            mult.append(1)
    return _frozen(np.array(lags), np.array(mult, dtype=float))


def _frozen(*arrays: np.ndarray) -> tuple[np.ndarray, ...]:
    for arr in arrays:
        arr.setflags(write=False)
    return arrays


def sampling_plan(a: int, n: int) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(lags, multiplicities)`` used to approximate the step-``n`` history sum."""
    if a < 2:
        raise ValueError(f"base interval a must be >= 2, got {a!r}")
    if n < 0:
        raise ValueError(f"step n must be >= 0, got {n!r}")
    lags, mult = _plan(int(a), int(n))
    return lags, mult


def plan_length_bound(a: int, n: int) -> float:
    """Upper bound on the number of sampled lags at step ``n``."""
    if n <= a:
        return float(n + 1)
    total = float(a + 1)
    for s in range(2, s_max(a, n) + 1):
        total += (a**s - a ** (s - 1)) / (2 * s - 1) + (2 * s - 1)
    return total
