"""Integrated dual local depth: the univariate empirical local depth of
one-dimensional projections, averaged over random directions."""
from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .data import Dataset, as_dataset
from .depth_core import EmpiricalLocality, check_beta
from .projection import DirectionSet, ProjectionSpec, Projector, sample_directions


@dataclass(frozen=True)
class DepthResult:
    depths: np.ndarray
    beta: float
    k: int
    n_ref: int
    spec: ProjectionSpec | None

    @property
    def beta_k(self) -> float:
        return self.k / self.n_ref

    def __len__(self):
        return self.depths.size


def _chunks(n: int, parts: int):
    bounds = np.linspace(0, n, parts + 1).astype(int)
    return [(a, b) for a, b in zip(bounds[:-1], bounds[1:]) if b > a]


def projected_depths(ref_proj: np.ndarray, query_proj: np.ndarray, k: int,
                     threads: int = 1) -> np.ndarray:
    """(N, q) per-direction local depths from (N, n) and (N, q) projections.

    Rows are independent, so they can be split across threads; each thread
    writes its own rows and the output does not depend on the split.
    """
    sorted_ref = np.sort(ref_proj, axis=1)
    queries = np.ascontiguousarray(query_proj, dtype=np.float64)
    out = np.empty(queries.shape, dtype=np.float64)
    threads = max(1, int(threads))
    if threads == 1 or sorted_ref.shape[0] == 1:
        _kernels.eld_matrix(sorted_ref, queries, k, out)
        return out

    def work(span):
        a, b = span
        _kernels.eld_matrix(sorted_ref[a:b], queries[a:b], k, out[a:b])

    with ThreadPoolExecutor(max_workers=threads) as pool:
        list(pool.map(work, _chunks(sorted_ref.shape[0], threads)))
    return out


def _average_in_order(per_direction: np.ndarray) -> np.ndarray:
    total = np.zeros(per_direction.shape[1])
    for row in per_direction:
        total += row
    return total / per_direction.shape[0]


def _directions(reference: Dataset, spec, directions):
    if directions is not None:
        return directions, spec
    if spec is None:
        spec = ProjectionSpec()
    spec = spec.resolve(reference)
    return sample_directions(spec, reference), spec


def eidld(reference, queries, beta: float, spec: ProjectionSpec | None = None, *,
          directions: DirectionSet | None = None, threads: int = 1) -> DepthResult:
    """Empirical IDLD of each query with respect to the reference sample.

    The window count is k = floor(n_ref * beta). Pass ``directions`` to use an
    explicit direction set instead of sampling one from ``spec``.
    """
    reference = as_dataset(reference)
    queries = as_dataset(queries)
    reference.check_compatible(queries)
    loc = EmpiricalLocality.from_beta(reference.n, check_beta(beta))
    dirs, spec = _directions(reference, spec, directions)
    if dirs.n < 1:
        raise ValueError("need at least one direction")
    projector = Projector(dirs, reference)
    ref_proj = projector.transform(reference)
    query_proj = ref_proj if queries is reference else projector.transform(queries)
    per_dir = projected_depths(ref_proj, query_proj, loc.k, threads)
    return DepthResult(_average_in_order(per_dir), float(beta), loc.k, reference.n, spec)


def eidld_self(reference, beta: float, spec: ProjectionSpec | None = None, *,
               directions: DirectionSet | None = None, threads: int = 1) -> DepthResult:
    """Depth of every sample point within its own sample."""
    reference = as_dataset(reference)
    return eidld(reference, reference, beta, spec, directions=directions, threads=threads)
