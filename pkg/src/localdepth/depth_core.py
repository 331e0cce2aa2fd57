"""Univariate local depth: population formulas and the empirical estimator.

For a window half-width ``d`` the empirical estimator splits the closed
window [z - d, z + d] into

    upper = F_n(z + d) - F_n(z)       (points in (z, z + d])
    lower = F_n(z-) - F_n((z - d)-)   (points in [z - d, z))

where F_n(t-) is the left limit; sample points equal to z sit in neither
half. The lower count is the upper count of the reflected sample, so the
estimator is exactly reflection invariant. For continuous F both halves
reduce to the population masses F(z + d) - F(z) and F(z) - F(z - d). The
simplicial local depth is ``2 / beta_k**2 * upper * lower`` with
``beta_k = k / n``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels

# guards floor/ceil of float products such as 0.29 * 100 = 28.999999999999996
_ROUND_EPS = 1e-9


def check_beta(beta: float) -> float:
    beta = float(beta)
    if not (0.0 < beta <= 1.0):
        raise ValueError(f"locality level beta must lie in (0, 1], got {beta}")
    return beta


@dataclass(frozen=True)
class EmpiricalLocality:
    """Window count k = floor(n * beta) for a sample of size n."""

    n: int
    k: int

    @classmethod
    def from_beta(cls, n: int, beta: float) -> "EmpiricalLocality":
        beta = check_beta(beta)
        if n < 1:
            raise ValueError("sample size must be positive")
        k = int(math.floor(n * beta + _ROUND_EPS))
        k = min(k, n)
        if k < 1:
            raise ValueError(
                f"floor(n * beta) = 0 for n={n}, beta={beta}; need k >= 1"
            )
        return cls(n=n, k=k)

    @property
    def beta_k(self) -> float:
        return self.k / self.n


class SortedSample:
    """An immutable sorted copy of a real sample (houses F_n)."""

    def __init__(self, values, assume_sorted: bool = False):
        a = np.array(values, dtype=np.float64).ravel()
        if a.size < 1:
            raise ValueError("empty sample")
        if not assume_sorted:
            a.sort()
        a.setflags(write=False)
        self.values = a

    @property
    def n(self) -> int:
        return self.values.size

    def ecdf(self, t):
        return np.searchsorted(self.values, t, side="right") / self.n


def _as_sorted(s) -> SortedSample:
    return s if isinstance(s, SortedSample) else SortedSample(s)


def ecdf_eval(s, t):
    """Fraction of sample values <= t."""
    return _as_sorted(s).ecdf(t)


# ---------------------------------------------------------------------------
# population side


def _cdf(F):
    return F.cdf if hasattr(F, "cdf") else F


def neighborhood_width(F, x: float, beta: float, *, eps: float = 1e-9,
                       tol: float = 1e-12, search_bound: float | None = None) -> float:
    """Smallest half-width lambda with F(x + lambda) - F(x - lambda) >= beta.

    ``F`` is a callable CDF or an object with ``cdf`` (and ideally ``ppf``,
    e.g. a frozen scipy distribution). The infimum is located by bisection.
    """
    beta = check_beta(beta)
    cdf = _cdf(F)

    def mass(lam):
        return cdf(x + lam) - cdf(x - lam)

    if search_bound is None:
        if hasattr(F, "ppf"):
            median = float(F.ppf(0.5))
            search_bound = float(F.ppf(1 - eps) - F.ppf(eps)) + abs(x - median)
        else:
            search_bound = 1.0
            while mass(search_bound) < beta and search_bound < 1e12:
                search_bound *= 2
    hi = float(search_bound)
    if mass(hi) < beta:
        # the quantile-based bound can sit a hair short of full mass
        hi *= 1 + 1e-6
        if mass(hi) < beta:
            raise ValueError(
                f"no half-width up to {hi:g} reaches mass {beta} around x={x}"
            )
    lo = 0.0
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        if mass(mid) >= beta:
            hi = mid
        else:
            lo = mid
    return hi


def _window_asymmetry(F, x, beta):
    """(upper - lower) / (upper + lower) at the neighborhood width.

    For continuous F the window mass at the infimum width is exactly beta, so
    the depths below only need this ratio; using it removes the bisection
    error and gives exactly 1/2 when the two masses agree.
    """
    cdf = _cdf(F)
    lam = neighborhood_width(F, x, beta)
    fx = cdf(x)
    upper, lower = cdf(x + lam) - fx, fx - cdf(x - lam)
    total = upper + lower
    if total <= 0:
        return 1.0
    return (upper - lower) / total


def ld_simplicial(F, x: float, beta: float) -> float:
    """Population simplicial local depth, (2 / beta^2) * upper mass * lower mass."""
    r = _window_asymmetry(F, x, beta)
    return float(0.5 * (1.0 - r * r))


def ld_tukey(F, x: float, beta: float) -> float:
    """Population Tukey local depth, min(upper mass, lower mass) / beta."""
    r = _window_asymmetry(F, x, beta)
    return float(0.5 * (1.0 - abs(r)))


# ---------------------------------------------------------------------------
# empirical side


def empirical_width(s, z: float, k: int) -> float:
    """k-th order statistic of the distances |X_j - z|."""
    s = _as_sorted(s)
    if not (1 <= k <= s.n):
        raise ValueError(f"k must lie in [1, {s.n}], got {k}")
    return float(_kernels.kth_distance(s.values, float(z), int(k)))


def eld_simplicial(s, z: float, loc: EmpiricalLocality) -> float:
    """Empirical simplicial local depth of z at locality beta(k) = k / n.

    Not clamped to [0, 1/2]: with tied distances the window may hold more
    than k points.
    """
    s = _as_sorted(s)
    if loc.n != s.n:
        raise ValueError(f"locality built for n={loc.n}, sample has n={s.n}")
    return float(_kernels.eld_one(s.values, float(z), loc.k))


def eld_simplicial_many(s, z, loc: EmpiricalLocality) -> np.ndarray:
    s = _as_sorted(s)
    if loc.n != s.n:
        raise ValueError(f"locality built for n={loc.n}, sample has n={s.n}")
    z = np.atleast_1d(np.asarray(z, dtype=np.float64))
    return _kernels.eld_rows(s.values[None, :], z[None, :], loc.k)[0]


def lemma2_bound(n: int, beta: float, sup_dist: float) -> float:
    """Upper bound on |ELD^{beta(k)}(z, F_n) - LD^beta(z, F)| given ||F_n - F||."""
    beta = check_beta(beta)
    loc = EmpiricalLocality.from_beta(n, beta)
    first = 0.5 * (1.0 - (loc.beta_k / beta) ** 2)
    return first + 2.0 / beta**2 * (8.0 / n + 4.0 * sup_dist)


def kolmogorov_distance(s, F) -> float:
    """sup_t |F_n(t) - F(t)| for a continuous F, attained at sample points."""
    a = _as_sorted(s).values
    n = a.size
    f = np.asarray(_cdf(F)(a), dtype=np.float64)
    above = np.arange(1, n + 1) / n - f
    below = f - np.arange(0, n) / n
    return float(max(above.max(), below.max()))
