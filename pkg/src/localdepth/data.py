"""Containers for multivariate, functional and mixed samples."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Grid:
    """Evaluation abscissae of functional observations with trapezoid weights."""

    t: np.ndarray
    w: np.ndarray

    @classmethod
    def from_points(cls, t) -> "Grid":
        t = np.asarray(t, dtype=np.float64)
        if t.ndim != 1 or t.size < 2:
            raise ValueError("grid needs at least two abscissae")
        dt = np.diff(t)
        if np.any(dt <= 0) or not np.all(np.isfinite(t)):
            raise ValueError("grid abscissae must be finite and strictly increasing")
        w = np.zeros_like(t)
        w[:-1] += dt / 2
        w[1:] += dt / 2
        return cls(t=t, w=w)

    @classmethod
    def equispaced(cls, start: float, stop: float, m: int = 101) -> "Grid":
        return cls.from_points(np.linspace(start, stop, m))

    @property
    def m(self) -> int:
        return self.t.size


@dataclass(frozen=True)
class Dataset:
    """n observations made of a vector block, a curve block, or both.

    ``vectors`` has shape (n, d); ``curves`` has shape (n, c, m) where c is the
    number of channels (1 for ordinary functional data) evaluated on ``grid``.
    """

    vectors: np.ndarray | None = None
    curves: np.ndarray | None = None
    grid: Grid | None = None

    def __post_init__(self):
        if self.vectors is None and self.curves is None:
            raise ValueError("dataset needs a vector block or a curve block")
        if self.vectors is not None:
            v = np.asarray(self.vectors, dtype=np.float64)
            if v.ndim == 1:
                v = v[:, None]
            if v.ndim != 2:
                raise ValueError("vector block must be (n, d)")
            object.__setattr__(self, "vectors", v)
        if self.curves is not None:
            c = np.asarray(self.curves, dtype=np.float64)
            if c.ndim == 2:
                c = c[:, None, :]
            if c.ndim != 3:
                raise ValueError("curve block must be (n, m) or (n, channels, m)")
            if self.grid is None:
                raise ValueError("curve block needs a grid")
            if c.shape[2] != self.grid.m:
                raise ValueError(f"curves have {c.shape[2]} points, grid has {self.grid.m}")
            object.__setattr__(self, "curves", c)
        if self.vectors is not None and self.curves is not None:
            if self.vectors.shape[0] != self.curves.shape[0]:
                raise ValueError("vector and curve blocks disagree on n")

    @property
    def kind(self) -> str:
        if self.curves is None:
            return "multivariate"
        if self.vectors is None:
            return "functional"
        return "mixed"

    @property
    def n(self) -> int:
        block = self.vectors if self.vectors is not None else self.curves
        return block.shape[0]

    @property
    def dim(self) -> int | None:
        return None if self.vectors is None else self.vectors.shape[1]

    @property
    def channels(self) -> int | None:
        return None if self.curves is None else self.curves.shape[1]

    def subset(self, idx) -> "Dataset":
        idx = np.asarray(idx)
        return Dataset(
            vectors=None if self.vectors is None else self.vectors[idx],
            curves=None if self.curves is None else self.curves[idx],
            grid=self.grid,
        )

    def check_compatible(self, other: "Dataset") -> None:
        if self.kind != other.kind:
            raise ValueError(f"kind mismatch: {self.kind} vs {other.kind}")
        if self.vectors is not None and self.vectors.shape[1] != other.vectors.shape[1]:
            raise ValueError("vector dimension mismatch")
        if self.curves is not None:
            if self.curves.shape[1:] != other.curves.shape[1:]:
                raise ValueError("curve shape mismatch")
            if not np.array_equal(self.grid.t, other.grid.t):
                raise ValueError("grids differ")


def as_dataset(x) -> Dataset:
    """Accept a Dataset or an (n, d) / (n,) array of vectors."""
    if isinstance(x, Dataset):
        return x
    return Dataset(vectors=np.asarray(x, dtype=np.float64))
