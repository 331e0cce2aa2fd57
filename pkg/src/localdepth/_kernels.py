"""Compiled window kernels for the empirical univariate local depth.

All comparisons are made on the rounded signed differences ``a[j] - z``, which
are monotone in ``j`` for a sorted sample. Membership of the two half windows
is decided from these differences rather than from the rounded bounds
``z +/- d``, so results depend only on the ordering of distances.
"""
import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def kth_distance(a, z, k):
    """k-th smallest |a[j] - z| over a sorted sample (1 <= k <= n)."""
    n = a.shape[0]
    lo = 0
    hi = n - k
    # leftmost start of the k nearest contiguous values
    while lo < hi:
        mid = (lo + hi) // 2
        if z - a[mid] > a[mid + k] - z:
            lo = mid + 1
        else:
            hi = mid
    left = z - a[lo]
    right = a[lo + k - 1] - z
    return left if left > right else right


@njit(cache=True, nogil=True)
def _count_lt(a, z):
    # #{j : a[j] < z}
    lo = 0
    hi = a.shape[0]
    while lo < hi:
        mid = (lo + hi) // 2
        if a[mid] < z:
            lo = mid + 1
        else:
            hi = mid
    return lo


@njit(cache=True, nogil=True)
def _count_diff_le(a, z, d):
    # #{j : a[j] - z <= d}; the difference is nondecreasing in j
    lo = 0
    hi = a.shape[0]
    while lo < hi:
        mid = (lo + hi) // 2
        if a[mid] - z <= d:
            lo = mid + 1
        else:
            hi = mid
    return lo


@njit(cache=True, nogil=True)
def _count_le(a, z):
    # #{j : a[j] <= z}
    lo = 0
    hi = a.shape[0]
    while lo < hi:
        mid = (lo + hi) // 2
        if a[mid] <= z:
            lo = mid + 1
        else:
            hi = mid
    return lo


@njit(cache=True, nogil=True)
def _count_rdiff_gt(a, z, d):
    # #{j : z - a[j] > d}; the difference is nonincreasing in j
    lo = 0
    hi = a.shape[0]
    while lo < hi:
        mid = (lo + hi) // 2
        if z - a[mid] > d:
            lo = mid + 1
        else:
            hi = mid
    return lo


@njit(cache=True, nogil=True)
def window_counts(a, z, d):
    """Counts of the half windows (z, z + d] and [z - d, z).

    The lower count is the upper count of the reflected sample, so a sign
    flip of the data leaves the pair unchanged (swapped).
    """
    upper = _count_diff_le(a, z, d) - _count_le(a, z)
    lower = _count_lt(a, z) - _count_rdiff_gt(a, z, d)
    return upper, lower


@njit(cache=True, nogil=True)
def eld_one(a, z, k):
    d = kth_distance(a, z, k)
    upper, lower = window_counts(a, z, d)
    return (2.0 * upper * lower) / (k * k)


@njit(cache=True, nogil=True)
def eld_matrix(sorted_ref, queries, k, out):
    """Fill out[i, j] with the local depth of queries[i, j] in sorted_ref[i]."""
    for i in range(sorted_ref.shape[0]):
        a = sorted_ref[i]
        for j in range(queries.shape[1]):
            out[i, j] = eld_one(a, queries[i, j], k)
    return out


def eld_rows(sorted_ref: np.ndarray, queries: np.ndarray, k: int) -> np.ndarray:
    sorted_ref = np.ascontiguousarray(sorted_ref, dtype=np.float64)
    queries = np.ascontiguousarray(queries, dtype=np.float64)
    out = np.empty(queries.shape, dtype=np.float64)
    return eld_matrix(sorted_ref, queries, int(k), out)
