"""Condensing history list with power-of-two weights.

Each node stands for ``weight`` consecutive past timesteps and is labelled by
the oldest of them. When more than ``eta`` nodes share a weight, the oldest
node of that weight absorbs the second-oldest (its weight doubles and the
second-oldest is dropped). Overflow is resolved from the smallest weight
upward, since a merge can overflow the next category.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Any, Iterator


@dataclass
class HistoryNode:
    i: int
    weight: int = 1
    lap: Any = None


class HistoryList:
    def __init__(self, eta: int):
        # with eta = 1 the merge would swallow the node just appended
        if eta < 2:
            raise ValueError(f"eta must be >= 2, got {eta!r}")
        self.eta = int(eta)
        self.nodes: list[HistoryNode] = []
        self.merges = 0

    def __len__(self) -> int:
        return len(self.nodes)

    def __iter__(self) -> Iterator[HistoryNode]:
        return iter(self.nodes)

    @property
    def newest(self) -> int:
        return self.nodes[-1].i if self.nodes else -1

    def timesteps(self) -> list[int]:
        return [node.i for node in self.nodes]

    def weights(self) -> list[int]:
        return [node.weight for node in self.nodes]

    def append_and_condense(self, node: HistoryNode) -> "HistoryList":
        if node.i != self.newest + 1:
            raise RuntimeError(f"out-of-order append: got step {node.i}, expected {self.newest + 1}")
        if node.weight != 1:
            raise RuntimeError(f"new nodes must carry weight 1, got {node.weight}")
        self.nodes.append(node)
        self._condense()
        return self

    def _condense(self) -> None:
        # weights are non-increasing along the list, so each category is a
        # contiguous run; walk the runs from the newest (weight 1) end
        end = len(self.nodes)
        weight = 1
        while end > 0:
            start = end
            while start > 0 and self.nodes[start - 1].weight == weight:
                start -= 1
            if end - start > self.eta:
                self.nodes[start].weight *= 2
                del self.nodes[start + 1]
                self.merges += 1
                end = start + 1
            else:
                end = start
            weight *= 2

    def check(self) -> None:
        """Raise ``AssertionError`` if any structural invariant is broken."""
        steps = self.timesteps()
        weights = self.weights()
        assert all(a < b for a, b in zip(steps, steps[1:])), "timesteps not increasing"
        assert weights[-1] == 1, "newest node must have weight 1"
        assert all(w > 0 and w & (w - 1) == 0 for w in weights), "weights must be powers of two"
        assert all(a >= b for a, b in zip(weights, weights[1:])), "weights must be non-increasing"
        counts: dict[int, int] = {}
        for w in weights:
            counts[w] = counts.get(w, 0) + 1
        assert max(counts.values()) <= self.eta, f"category overflow: {counts}"
        n = steps[-1]
        assert sum(weights) == n + 1, f"weights sum to {sum(weights)}, expected {n + 1}"
        assert len(self) <= length_bound(self.eta, n), "list longer than the logarithmic bound"


def length_bound(eta: int, n: int) -> float:
    return eta * (math.log2((n + 1) / eta + 1) + 1)
