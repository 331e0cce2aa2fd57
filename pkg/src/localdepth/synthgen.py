"""Seeded generators for the synthetic clustering designs.

Model ids
---------
* ``"1"`` .. ``"14"``        multivariate Gaussian mixtures (three groups)
* ``"fda-A"`` .. ``"fda-D"`` univariate functional designs
* ``"mfd-A"`` .. ``"mfd-C"`` bivariate functional designs

``N(mu, v)`` in the bivariate functional designs is read as mean / variance;
the functional designs quote standard deviations. The reading used is echoed
in each dataset's ``meta``.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .data import Dataset, Grid

CENTERS = np.array([[-3.0, -3.0, 0.0], [0.0, 0.0, 0.0], [3.0, 3.0, 0.0]])
ELLIPTIC_SD = np.sqrt([3.0, 0.25, 1.0])
OUTLIER_RANGE = (25.0, 25.01)
N_OUTLIERS = 5

MULTIVARIATE_IDS = tuple(str(i) for i in range(1, 15))
FUNCTIONAL_IDS = ("fda-A", "fda-B", "fda-C", "fda-D")
MFD_IDS = ("mfd-A", "mfd-B", "mfd-C")
MODEL_IDS = MULTIVARIATE_IDS + FUNCTIONAL_IDS + MFD_IDS


@dataclass
class LabeledDataset:
    data: Dataset
    labels: np.ndarray
    model_id: str
    meta: dict = field(default_factory=dict)

    @property
    def n_groups(self) -> int:
        return int(np.unique(self.labels).size)


def _rng(seed):
    return np.random.default_rng(int(seed))


# ---------------------------------------------------------------------------
# multivariate


def _gaussian_groups(rng, sizes, elliptic, extra_noise):
    sd = ELLIPTIC_SD if elliptic else np.ones(3)
    blocks, labels = [], []
    for g, size in enumerate(sizes):
        x = CENTERS[g] + rng.standard_normal((size, 3)) * sd
        if extra_noise:
            x = np.hstack([x, rng.standard_normal((size, extra_noise))])
        blocks.append(x)
        labels.append(np.full(size, g))
    return np.vstack(blocks), np.concatenate(labels)


def gen_multivariate(model, seed: int = 0, group_size: int = 300) -> LabeledDataset:
    """Models 1-14 (three groups in R^3 or R^5).

    1/2 spherical/elliptical in R^3; 3/4 the same plus two N(0,1) noise
    coordinates; 5-8 are 1-4 with the first coordinate of the first five
    observations of group 0 replaced by U[25, 25.01]; 9-12 the same on the
    last coordinate; 13/14 are 1/2 with a 60/20/20 split of 300 observations.
    """
    mid = str(model)
    if mid not in MULTIVARIATE_IDS:
        raise ValueError(f"unknown multivariate model {model!r}")
    m = int(mid)
    rng = _rng(seed)
    if m >= 13:
        base = m - 12
        sizes = (180, 60, 60)
    else:
        base = (m - 1) % 4 + 1
        sizes = (group_size,) * 3
    elliptic = base in (2, 4)
    extra = 2 if base in (3, 4) else 0
    x, labels = _gaussian_groups(rng, sizes, elliptic, extra)
    if 5 <= m <= 12:
        col = 0 if m <= 8 else x.shape[1] - 1
        x[:N_OUTLIERS, col] = rng.uniform(*OUTLIER_RANGE, size=N_OUTLIERS)
    return LabeledDataset(Dataset(vectors=x), labels, mid,
                          {"sizes": list(sizes), "elliptic": elliptic, "dim": x.shape[1]})


def gen_timing_data(n: int, p: int, seed: int = 0) -> np.ndarray:
    """Model-3 style data with p - 2 noise coordinates, n split over three groups."""
    if p < 3:
        raise ValueError("need p >= 3")
    rng = _rng(seed)
    sizes = [n // 3 + (1 if g < n % 3 else 0) for g in range(3)]
    x, _ = _gaussian_groups(rng, sizes, False, p - 3)
    return x


# ---------------------------------------------------------------------------
# functional

FDA_N = {"fda-A": 90, "fda-B": 90, "fda-C": 90, "fda-D": 600}
FDA_ERROR_SD = 0.05
WARP_RATE_MEAN = 1.0


def _warped(t, e, sign, shifted=False):
    e1, e2, e3, e4 = (col[:, None] for col in e.T)
    arg = e3 + e4 * ((-1.0 / 3.0 + 0.75 * t) if shifted else t)
    return (1 + e1) * np.sin(arg) + sign * (1 + e2) * np.sin(arg**2 / (2 * np.pi))


def _warp_errors(rng, size):
    e = rng.normal(0.0, FDA_ERROR_SD, size=(size, 4))
    e[:, 3] += WARP_RATE_MEAN
    return e


def model_d_means(t):
    u = (2 - 5 * t) / 2
    f1 = np.minimum(u, u**2 * np.sin(5 * np.pi * t / 2))
    f3 = np.cos(2 * np.pi * t)
    return np.stack([f1, -f1, f3, -f3])


MODEL_D_ERROR_MEAN = 0.4
MODEL_D_ERROR_SD = 0.9


def model_d_covariance(t):
    """sd 0.9 with correlation 0.3 exp(-(s-t)^2 / 0.3) off the diagonal."""
    diff = t[:, None] - t[None, :]
    corr = 0.3 * np.exp(-diff**2 / 0.3)
    np.fill_diagonal(corr, 1.0)
    return MODEL_D_ERROR_SD**2 * corr


def gen_functional(model: str, seed: int = 0, n: int | None = None) -> LabeledDataset:
    if model not in FUNCTIONAL_IDS:
        raise ValueError(f"unknown functional model {model!r}")
    rng = _rng(seed)
    n = FDA_N[model] if n is None else n
    meta = {"error_sd": FDA_ERROR_SD, "warp_rate_mean": WARP_RATE_MEAN}
    if model == "fda-D":
        grid = Grid.equispaced(0.0, 1.0, 101)
        per = n // 4
        means = model_d_means(grid.t)
        chol = np.linalg.cholesky(model_d_covariance(grid.t))
        errors = MODEL_D_ERROR_MEAN + rng.standard_normal((4 * per, grid.m)) @ chol.T
        curves = np.repeat(means, per, axis=0) + errors
        labels = np.repeat(np.arange(4), per)
        meta = {"error_mean": MODEL_D_ERROR_MEAN, "error_sd": MODEL_D_ERROR_SD}
        return LabeledDataset(Dataset(curves=curves, grid=grid), labels, model, meta)

    grid = Grid.equispaced(0.0, 2 * np.pi, 101)
    t = grid.t[None, :]
    if model == "fda-C":
        per = n // 3
        parts = [_warped(t, _warp_errors(rng, per), +1),
                 _warped(t, _warp_errors(rng, per), -1),
                 _warped(t, _warp_errors(rng, per), -1, shifted=True)]
    else:
        per = n // 2
        parts = [_warped(t, _warp_errors(rng, per), +1),
                 _warped(t, _warp_errors(rng, per), -1, shifted=(model == "fda-B"))]
    labels = np.repeat(np.arange(len(parts)), per)
    return LabeledDataset(Dataset(curves=np.vstack(parts), grid=grid), labels, model, meta)


# ---------------------------------------------------------------------------
# bivariate functional


def _hat(t, peak):
    return np.maximum(6 - np.abs(t - peak), 0.0)


def mfd_a_group(g, t, a1, a2, e1, e2):
    """Channels (n, 2, m) of group g given the random amplitudes and noise."""
    c10 = np.sin((10 + a1) * t) + (1 + a1) + e1
    c5 = np.sin((5 + a2) * t) + (0.5 + a2) + e2
    c15 = np.sin((15 + a1) * t) + (1 + a1) + e1
    return np.stack([(c10, c5), (c5, c15), (c15, c10)][g], axis=1)


def _mfd_a(rng, per):
    grid = Grid.equispaced(0.0, 1.0, 101)
    t = grid.t[None, :]
    curves, labels = [], []
    for g in range(3):
        a1 = rng.normal(0.0, np.sqrt(0.2), size=(per, 1))
        a2 = rng.normal(0.0, np.sqrt(0.3), size=(per, 1))
        e1 = rng.standard_normal((per, grid.m)) * np.sqrt(np.abs(a1) / 2)
        e2 = rng.standard_normal((per, grid.m)) * np.sqrt(np.abs(a2) / 2)
        curves.append(mfd_a_group(g, t, a1, a2, e1, e2))
        labels.append(np.full(per, g))
    return grid, np.vstack(curves), np.concatenate(labels)


# channel shapes per group: (weight on the hat, which hat) for each channel
_MFD_DESIGNS = {
    "mfd-B": [((1.0, 1), (0.5, 1)), ((1.0, 2), (0.5, 2)),
              ((0.5, 1), (1.0, 2)), ((0.5, 2), (1.0, 1))],
    "mfd-C": [((1.0, 1), (0.5, 1)), ((1.0, 2), (0.5, 2)),
              ((1.0, 1), (1.0, 1)), ((0.5, 2), (0.5, 1))],
}


def _mfd_hats(rng, per, design):
    grid = Grid.equispaced(1.0, 21.0, 101)
    hats = {1: _hat(grid.t, 7.0), 2: _hat(grid.t, 15.0)}
    curves, labels = [], []
    for g, channels in enumerate(design):
        u = rng.uniform(0.0, 0.1, size=(per, 1))
        chans = []
        for level, h in channels:
            e = rng.standard_normal((per, grid.m)) * 0.5
            chans.append(u + (level - u) * hats[h][None, :] + e)
        curves.append(np.stack(chans, axis=1))
        labels.append(np.full(per, g))
    return grid, np.vstack(curves), np.concatenate(labels)


def gen_mfd(model: str, seed: int = 0, per_group: int | None = None) -> LabeledDataset:
    if model not in MFD_IDS:
        raise ValueError(f"unknown bivariate functional model {model!r}")
    rng = _rng(seed)
    if model == "mfd-A":
        grid, curves, labels = _mfd_a(rng, per_group or 100)
        meta = {"a1_variance": 0.2, "a2_variance": 0.3, "interval": [0.0, 1.0]}
    else:
        grid, curves, labels = _mfd_hats(rng, per_group or 250, _MFD_DESIGNS[model])
        meta = {"noise_variance": 0.25, "interval": [1.0, 21.0]}
    return LabeledDataset(Dataset(curves=curves, grid=grid), labels, model, meta)


def generate(model_id, seed: int = 0) -> LabeledDataset:
    mid = str(model_id)
    if mid in MULTIVARIATE_IDS:
        return gen_multivariate(mid, seed)
    if mid in FUNCTIONAL_IDS:
        return gen_functional(mid, seed)
    if mid in MFD_IDS:
        return gen_mfd(mid, seed)
    raise ValueError(f"unknown model id {model_id!r}")
