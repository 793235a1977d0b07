"""Score aggregation: normal-approximation intervals and stratified bootstrap."""
from __future__ import annotations

import math

import numpy as np

from .errors import EmptyStratum

Z_95 = 1.959963984540054


def mean_ci(scores, z: float = Z_95) -> tuple[float, float, float]:
    """Mean with a two-sided normal-approximation interval (mean +- z * SE)."""
    x = np.asarray(scores, dtype=float)
    if x.size == 0:
        raise EmptyStratum("no scores")
    m = float(x.mean())
    if x.size < 2:
        return m, m, m
    half = z * float(x.std(ddof=1)) / math.sqrt(x.size)
    return m, m - half, m + half


def stratified_mean(strata) -> float:
    """Mean over strata of the per-stratum means."""
    return float(np.mean([np.mean(s) for s in strata]))


def bootstrap_ci(strata, level: float = 0.05, resamples: int = 10_000,
                 seed: int = 0, chunk: int = 2_000_000) -> tuple[float, float]:
    """Percentile interval of the mean of per-stratum means.

    Each stratum (one game) is resampled with replacement independently of
    the others, keeping its own size.
    """
    arrays = [np.asarray(s, dtype=float) for s in strata]
    if not arrays or any(a.size == 0 for a in arrays):
        raise EmptyStratum("every stratum needs at least one score")
    rng = np.random.default_rng(seed)
    totals = np.zeros(resamples)
    for a in arrays:
        n = a.size
        rows = max(1, chunk // n)
        for start in range(0, resamples, rows):
            stop = min(resamples, start + rows)
            idx = rng.integers(0, n, size=(stop - start, n))
            totals[start:stop] += a[idx].mean(axis=1)
    means = totals / len(arrays)
    lo, hi = np.percentile(means, [100 * level / 2, 100 * (1 - level / 2)])
    return float(lo), float(hi)
