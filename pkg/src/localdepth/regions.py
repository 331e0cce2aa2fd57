"""Local depth inner regions (core observations)."""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

_ROUND_EPS = 1e-9


@dataclass(frozen=True)
class Region:
    indices: np.ndarray  # sorted ascending
    rule: str  # "threshold" or "proportion"
    alpha: float
    beta: float | None = None

    def __len__(self):
        return self.indices.size

    def mask(self, n: int) -> np.ndarray:
        m = np.zeros(n, dtype=bool)
        m[self.indices] = True
        return m


def _depths(d):
    return np.asarray(getattr(d, "depths", d), dtype=np.float64)


def region_threshold(d, alpha: float) -> Region:
    """Indices whose depth is at least alpha (the deep points)."""
    if not (0.0 <= alpha <= 0.5):
        raise ValueError(f"threshold alpha must lie in [0, 1/2], got {alpha}")
    depths = _depths(d)
    idx = np.flatnonzero(depths >= alpha)
    return Region(idx, "threshold", float(alpha), getattr(d, "beta", None))


def proportion_size(n: int, alpha: float) -> int:
    return int(math.ceil(alpha * n - _ROUND_EPS))


def region_proportion(d, alpha: float) -> Region:
    """The ceil(alpha * n) deepest indices; ties at the cut go to smaller indices."""
    if not (0.0 < alpha <= 1.0):
        raise ValueError(f"proportion alpha must lie in (0, 1], got {alpha}")
    depths = _depths(d)
    size = proportion_size(depths.size, alpha)
    order = np.argsort(-depths, kind="stable")
    idx = np.sort(order[:size])
    return Region(idx, "proportion", float(alpha), getattr(d, "beta", None))
