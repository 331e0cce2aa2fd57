"""Partition agreement: correct classification rate and adjusted Rand index."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np
from scipy.optimize import linear_sum_assignment

# label alphabets up to this size are matched by exhaustive search
EXHAUSTIVE_MAX = 8


@dataclass(frozen=True)
class ConfusionSummary:
    ccr: float
    ari: float
    matched_permutation: dict  # predicted label -> true label


def _encode(truth, pred):
    truth, pred = np.asarray(truth), np.asarray(pred)
    if truth.shape != pred.shape or truth.ndim != 1:
        raise ValueError("label vectors must be 1-D and of equal length")
    t_vals, t = np.unique(truth, return_inverse=True)
    p_vals, p = np.unique(pred, return_inverse=True)
    return t_vals, t, p_vals, p


def confusion(truth, pred):
    t_vals, t, p_vals, p = _encode(truth, pred)
    size = max(t_vals.size, p_vals.size)
    table = np.zeros((size, size), dtype=np.int64)
    np.add.at(table, (p, t), 1)
    return table, t_vals, p_vals


def _best_matching(table):
    size = table.shape[0]
    if size <= EXHAUSTIVE_MAX:
        rows = np.arange(size)
        best, best_sigma = -1, None
        for sigma in permutations(range(size)):
            hits = table[rows, sigma].sum()
            if hits > best:
                best, best_sigma = hits, sigma
        return int(best), np.asarray(best_sigma)
    r, c = linear_sum_assignment(-table)
    sigma = np.empty(size, dtype=int)
    sigma[r] = c
    return int(table[r, c].sum()), sigma


def ccr_match(truth, pred):
    """(CCR, mapping predicted label -> true label) maximizing matches."""
    table, t_vals, p_vals = confusion(truth, pred)
    hits, sigma = _best_matching(table)
    mapping = {}
    for i, pv in enumerate(p_vals):
        j = sigma[i]
        mapping[pv.item()] = t_vals[j].item() if j < t_vals.size else None
    return hits / len(truth), mapping


def ccr(truth, pred) -> float:
    """Best label-permutation match rate between two partitions."""
    return ccr_match(truth, pred)[0]


def _pairs(x):
    return x * (x - 1) / 2.0


def ari(truth, pred) -> float:
    """Adjusted Rand index from pair counts."""
    table, _, _ = confusion(truth, pred)
    n = int(table.sum())
    sum_cells = _pairs(table).sum()
    sum_rows = _pairs(table.sum(axis=1)).sum()
    sum_cols = _pairs(table.sum(axis=0)).sum()
    total = _pairs(n)
    if total == 0:
        return 1.0
    expected = sum_rows * sum_cols / total
    best = 0.5 * (sum_rows + sum_cols)
    if best == expected:
        # both partitions trivial (all singletons or one block)
        return 1.0 if sum_rows == sum_cols else 0.0
    return float((sum_cells - expected) / (best - expected))


def summarize(truth, pred) -> ConfusionSummary:
    rate, mapping = ccr_match(truth, pred)
    return ConfusionSummary(rate, ari(truth, pred), mapping)
