"""Local-depth-based clustering (LDC).

Step 1 partitions the core region (the deepest observations) with k-means;
step 2 gives every observation the label of the nearest core cluster, where
the distance to a cluster is the minimum distance to its members.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field

import numpy as np
from scipy.spatial.distance import cdist

from .data import Dataset, as_dataset
from .depth_core import EmpiricalLocality
from .idld import DepthResult, eidld_self
from .projection import DirectionSet, ProjectionSpec
from .regions import Region, proportion_size, region_proportion

METRICS = {"multivariate": "euclidean", "functional": "l2_grid", "mixed": "mixed"}


class InfeasibleClustering(ValueError):
    """The core region is too small for the requested number of clusters."""


# ---------------------------------------------------------------------------
# metrics


def _robust_scale(block: np.ndarray, weights=None) -> float:
    med = np.median(block, axis=0)
    mad = np.median(np.abs(block - med), axis=0)
    sq = mad**2 if weights is None else mad**2 * weights
    s = float(np.sqrt(sq.sum()))
    return s if s > 0 else 1.0


def block_scales(data: Dataset) -> tuple[float, float]:
    """Robust sizes of the vector and curve blocks of a mixed dataset.

    Each is the root of the summed squared coordinate MADs (quadrature
    weighted for curves), a robust analogue of the total standard deviation.
    """
    return (_robust_scale(data.vectors),
            _robust_scale(data.curves, np.broadcast_to(data.grid.w, data.curves.shape[1:])))


def distance(x, y, kind: str = "euclidean", grid=None, scales=(1.0, 1.0)) -> float:
    """Distance between two observations.

    For ``mixed``, x and y are (vector, curve) pairs and ``scales`` the block
    sizes from :func:`block_scales`.
    """
    if kind == "euclidean":
        x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
        if x.shape != y.shape:
            raise ValueError("shape mismatch")
        return float(np.sqrt(np.sum((x - y) ** 2)))
    if kind == "l2_grid":
        x, y = np.asarray(x, dtype=float), np.asarray(y, dtype=float)
        if x.shape != y.shape or x.shape[-1] != grid.m:
            raise ValueError("shape mismatch")
        return float(np.sqrt(np.sum(grid.w * (x - y) ** 2)))
    if kind == "mixed":
        dv = distance(x[0], y[0]) / scales[0]
        dc = distance(x[1], y[1], "l2_grid", grid) / scales[1]
        return float(np.sqrt(dv**2 + dc**2))
    raise ValueError(f"unknown distance kind {kind!r}")


def embed(data: Dataset, scales=None) -> np.ndarray:
    """Map observations to rows whose Euclidean distance is the observation metric."""
    parts = []
    if data.kind == "mixed" and scales is None:
        scales = block_scales(data)
    sv, sc = scales if data.kind == "mixed" else (1.0, 1.0)
    if data.vectors is not None:
        parts.append(data.vectors / sv)
    if data.curves is not None:
        parts.append((data.curves * np.sqrt(data.grid.w)).reshape(data.n, -1) / sc)
    return np.hstack(parts)


# ---------------------------------------------------------------------------
# k-means


@dataclass
class KMeansResult:
    labels: np.ndarray
    centroids: np.ndarray
    wcss: float
    n_iter: int


def _seed_centroids(X, k, rng):
    # distance-weighted seeding
    n = X.shape[0]
    centers = [int(rng.integers(n))]
    d2 = np.sum((X - X[centers[0]]) ** 2, axis=1)
    for _ in range(1, k):
        total = d2.sum()
        if total > 0:
            nxt = int(rng.choice(n, p=d2 / total))
        else:
            nxt = int(rng.choice(np.setdiff1d(np.arange(n), centers)))
        centers.append(nxt)
        d2 = np.minimum(d2, np.sum((X - X[nxt]) ** 2, axis=1))
    return X[centers].copy()


def _repair_empty(X, labels, centroids, k):
    counts = np.bincount(labels, minlength=k)
    while np.any(counts == 0):
        empty = int(np.flatnonzero(counts == 0)[0])
        big = int(np.argmax(counts))
        members = np.flatnonzero(labels == big)
        far = members[np.argmax(np.sum((X[members] - centroids[big]) ** 2, axis=1))]
        labels[far] = empty
        counts = np.bincount(labels, minlength=k)
        centroids[empty] = X[far]
        centroids[big] = X[labels == big].mean(axis=0)
    return labels


def _lloyd(X, k, max_iter, rng):
    centroids = _seed_centroids(X, k, rng)
    labels = None
    it = 0
    for it in range(1, max_iter + 1):
        new = np.argmin(cdist(X, centroids, "sqeuclidean"), axis=1)
        new = _repair_empty(X, new, centroids, k)
        if labels is not None and np.array_equal(new, labels):
            break
        labels = new
        for j in range(k):
            centroids[j] = X[labels == j].mean(axis=0)
    wcss = float(np.sum((X - centroids[labels]) ** 2))
    return KMeansResult(labels, centroids, wcss, it)


def kmeans(X, k: int, restarts: int = 10, max_iter: int = 100, seed: int = 0) -> KMeansResult:
    """Lloyd's algorithm, best of ``restarts`` seeded runs by within-cluster SS."""
    X = np.asarray(X, dtype=np.float64)
    if X.ndim == 1:
        X = X[:, None]
    if k < 1 or X.shape[0] < k:
        raise InfeasibleClustering(f"k-means needs at least k={k} points, got {X.shape[0]}")
    best = None
    for child in np.random.SeedSequence(int(seed)).spawn(int(restarts)):
        res = _lloyd(X, k, int(max_iter), np.random.default_rng(child))
        if best is None or res.wcss < best.wcss:
            best = res
    return best


# ---------------------------------------------------------------------------
# LDC


@dataclass(frozen=True)
class LdcConfig:
    k: int = 3
    alpha: float = 0.4
    beta: float = 0.2
    spec: ProjectionSpec = field(default_factory=ProjectionSpec)
    kmeans_restarts: int = 10
    kmeans_max_iter: int = 100
    seed: int = 0
    threads: int = 1

    def __post_init__(self):
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if not (0 < self.alpha <= 1):
            raise ValueError("alpha must lie in (0, 1]")
        if not (0 < self.beta <= 1):
            raise ValueError("beta must lie in (0, 1]")
        if self.kmeans_restarts < 1 or self.kmeans_max_iter < 1:
            raise ValueError("k-means restarts and iterations must be positive")


@dataclass
class ClusterModel:
    k: int
    core: Region
    core_labels: np.ndarray
    labels: np.ndarray
    distance: str
    depth: DepthResult
    timings: dict = field(default_factory=dict)

    @property
    def is_core(self) -> np.ndarray:
        return self.core.mask(self.labels.size)


def assign_to_cores(points: np.ndarray, core_points: np.ndarray,
                    core_labels: np.ndarray, k: int) -> np.ndarray:
    """Label of the nearest core cluster (single-linkage point-to-set distance).

    Ties go to the smaller label.
    """
    D = cdist(points, core_points)
    to_cluster = np.full((points.shape[0], k), np.inf)
    for j in range(k):
        members = core_labels == j
        if members.any():
            to_cluster[:, j] = D[:, members].min(axis=1)
    return np.argmin(to_cluster, axis=1)


def ldc_fit(data, cfg: LdcConfig, *, directions: DirectionSet | None = None) -> ClusterModel:
    """Fit LDC. ``directions`` overrides the direction set drawn from ``cfg.spec``."""
    data = as_dataset(data)
    n = data.n
    EmpiricalLocality.from_beta(n, cfg.beta)
    if proportion_size(n, cfg.alpha) < cfg.k:
        raise InfeasibleClustering(
            f"core size ceil(alpha*n) = {proportion_size(n, cfg.alpha)} is below k = {cfg.k}"
        )
    timings = {}
    t0 = time.perf_counter()
    depth = eidld_self(data, cfg.beta, cfg.spec, directions=directions, threads=cfg.threads)
    core = region_proportion(depth, cfg.alpha)
    t1 = time.perf_counter()
    X = embed(data)
    km = kmeans(X[core.indices], cfg.k, cfg.kmeans_restarts, cfg.kmeans_max_iter, cfg.seed)
    t2 = time.perf_counter()
    labels = assign_to_cores(X, X[core.indices], km.labels, cfg.k)
    labels[core.indices] = km.labels
    t3 = time.perf_counter()
    timings.update(depth=t1 - t0, kmeans=t2 - t1, assign=t3 - t2)
    return ClusterModel(cfg.k, core, km.labels, labels, METRICS[data.kind], depth, timings)
