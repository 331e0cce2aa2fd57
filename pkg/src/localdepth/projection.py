"""Random linear functionals and their action on observations.

Directions are drawn from a counter-based stream: direction ``i`` of a spec is
a pure function of ``(seed, i)``, so any subset can be regenerated in any order.

* sphere   -- uniform on the unit sphere of R^d
* brownian -- Brownian-motion path on the grid (one per channel), applied to
              a curve through trapezoid quadrature
* mixed    -- one of each; the two block projections are standardized by the
              reference median / MAD and averaged with weight 1/2 each
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .data import Dataset, Grid

KINDS = ("sphere", "brownian", "mixed")
_DATA_KIND = {"multivariate": "sphere", "functional": "brownian", "mixed": "mixed"}


@dataclass(frozen=True)
class ProjectionSpec:
    n_projections: int = 50
    seed: int = 0
    kind: str | None = None  # inferred from the data when None

    def __post_init__(self):
        if int(self.n_projections) < 1:
            raise ValueError("need at least one projection")
        if self.kind is not None and self.kind not in KINDS:
            raise ValueError(f"unknown projection kind {self.kind!r}")

    def resolve(self, data: Dataset) -> "ProjectionSpec":
        kind = _DATA_KIND[data.kind]
        if self.kind is not None and self.kind != kind:
            raise ValueError(f"{self.kind} projections cannot act on {data.kind} data")
        return ProjectionSpec(int(self.n_projections), int(self.seed), kind)


@dataclass(frozen=True)
class Direction:
    kind: str
    vec: np.ndarray | None = None
    curve_weights: np.ndarray | None = None  # (channels, m)


@dataclass(frozen=True)
class DirectionSet:
    """N directions stacked: ``vecs`` is (N, d), ``paths`` is (N, channels, m)."""

    kind: str
    vecs: np.ndarray | None = None
    paths: np.ndarray | None = None

    @property
    def n(self) -> int:
        return (self.vecs if self.vecs is not None else self.paths).shape[0]

    def __getitem__(self, i) -> Direction:
        return Direction(
            self.kind,
            None if self.vecs is None else self.vecs[i],
            None if self.paths is None else self.paths[i],
        )

    @classmethod
    def stack(cls, dirs) -> "DirectionSet":
        dirs = list(dirs)
        kind = dirs[0].kind
        vecs = None if dirs[0].vec is None else np.stack([d.vec for d in dirs])
        paths = None if dirs[0].curve_weights is None else np.stack([d.curve_weights for d in dirs])
        return cls(kind, vecs, paths)


def _stream(seed: int, index: int) -> np.random.Generator:
    return np.random.default_rng([int(index), int(seed) & 0xFFFFFFFFFFFFFFFF])


def brownian_path(rng: np.random.Generator, grid: Grid) -> np.ndarray:
    steps = rng.standard_normal(grid.m - 1) * np.sqrt(np.diff(grid.t))
    return np.concatenate([[0.0], np.cumsum(steps)])


def sample_direction(spec: ProjectionSpec, index: int, *, dim: int | None = None,
                     grid: Grid | None = None, channels: int = 1) -> Direction:
    if spec.kind is None:
        raise ValueError("resolve the projection kind before sampling")
    if not (0 <= index < spec.n_projections):
        raise IndexError(f"direction index {index} outside [0, {spec.n_projections})")
    rng = _stream(spec.seed, index)
    vec = paths = None
    if spec.kind in ("sphere", "mixed"):
        if dim is None or dim < 1:
            raise ValueError("sphere directions need a positive dimension")
        g = rng.standard_normal(dim)
        vec = g / np.linalg.norm(g)
    if spec.kind in ("brownian", "mixed"):
        if grid is None:
            raise ValueError("brownian directions need a grid")
        paths = np.stack([brownian_path(rng, grid) for _ in range(channels)])
    return Direction(spec.kind, vec, paths)


def sample_directions(spec: ProjectionSpec, data: Dataset) -> DirectionSet:
    spec = spec.resolve(data)
    return DirectionSet.stack(
        sample_direction(spec, i, dim=data.dim, grid=data.grid, channels=data.channels or 1)
        for i in range(spec.n_projections)
    )


def project(obs, direction: Direction, grid: Grid | None = None) -> float:
    """Action of one direction on one sphere/brownian observation.

    Mixed observations are only meaningful against a reference sample; use
    :class:`Projector` for those.
    """
    if direction.kind == "sphere":
        x = np.asarray(obs, dtype=np.float64)
        if x.shape != direction.vec.shape:
            raise ValueError(f"shape mismatch {x.shape} vs {direction.vec.shape}")
        return float(x @ direction.vec)
    if direction.kind == "brownian":
        if grid is None:
            raise ValueError("brownian projection needs the grid")
        x = np.asarray(obs, dtype=np.float64)
        if x.ndim == 1:
            x = x[None, :]
        if x.shape != direction.curve_weights.shape:
            raise ValueError(f"shape mismatch {x.shape} vs {direction.curve_weights.shape}")
        return float(np.sum(x * direction.curve_weights * grid.w))
    raise ValueError("mixed observations need a reference sample; use Projector")


def _vector_block(data: Dataset, dirs: DirectionSet) -> np.ndarray:
    if dirs.vecs.shape[1] != data.dim:
        raise ValueError(f"directions live in R^{dirs.vecs.shape[1]}, data in R^{data.dim}")
    return dirs.vecs @ data.vectors.T


def _curve_block(data: Dataset, dirs: DirectionSet) -> np.ndarray:
    if dirs.paths.shape[1:] != data.curves.shape[1:]:
        raise ValueError("direction paths and curves disagree in shape")
    weighted = dirs.paths * data.grid.w
    return np.einsum("Ncm,ncm->Nn", weighted, data.curves)


def _robust_location_scale(p: np.ndarray):
    med = np.median(p, axis=1, keepdims=True)
    mad = np.median(np.abs(p - med), axis=1, keepdims=True)
    return med, np.where(mad > 0, mad, 1.0)


class Projector:
    """Projects datasets on a fixed direction set, fitted on a reference sample.

    Only the mixed kind uses the reference (for block standardization); the
    other kinds are plain linear maps.
    """

    def __init__(self, directions: DirectionSet, reference: Dataset):
        self.directions = directions
        self.kind = directions.kind
        expected = _DATA_KIND[reference.kind]
        if expected != self.kind:
            raise ValueError(f"{self.kind} directions cannot act on {reference.kind} data")
        self._stats = None
        if self.kind == "mixed":
            self._stats = (
                _robust_location_scale(_vector_block(reference, directions)),
                _robust_location_scale(_curve_block(reference, directions)),
            )

    def transform(self, data: Dataset) -> np.ndarray:
        """(N, n) matrix of projected values."""
        if _DATA_KIND[data.kind] != self.kind:
            raise ValueError(f"{self.kind} directions cannot act on {data.kind} data")
        if self.kind == "sphere":
            return _vector_block(data, self.directions)
        if self.kind == "brownian":
            return _curve_block(data, self.directions)
        (mv, sv), (mc, sc) = self._stats
        pv = (_vector_block(data, self.directions) - mv) / sv
        pc = (_curve_block(data, self.directions) - mc) / sc
        return 0.5 * pv + 0.5 * pc
