"""Two references for the stratified bootstrap of win/draw/loss scores,
written independently of ``ubfm.stats``.

* ``exact_interval`` computes the bootstrap distribution exactly: the sum of
  n draws from a stratum's empirical {-1, 0, +1} distribution is an n-fold
  convolution, and the mean of means combines the strata.
* ``multinomial_interval`` resamples category counts instead of indices.
"""
import numpy as np


def _sum_pmf(scores):
    x = np.asarray(scores)
    n = x.size
    p = np.array([(x == -1).mean(), (x == 0).mean(), (x == 1).mean()])
    pmf = np.array([1.0])
    for _ in range(n):
        pmf = np.convolve(pmf, p)
    support = np.arange(-n, n + 1) / n        # stratum mean for each sum
    return support, pmf


def exact_distribution(strata):
    support, pmf = np.array([0.0]), np.array([1.0])
    for s in strata:
        sup, p = _sum_pmf(s)
        support = (support[:, None] + sup[None, :]).ravel()
        pmf = (pmf[:, None] * p[None, :]).ravel()
    support = support / len(strata)
    order = np.argsort(support, kind="stable")
    return support[order], pmf[order]


def exact_interval(strata, level=0.05):
    support, pmf = exact_distribution(strata)
    cdf = np.cumsum(pmf)
    lo = support[np.searchsorted(cdf, level / 2)]
    hi = support[np.searchsorted(cdf, 1 - level / 2)]
    return float(lo), float(hi)


def multinomial_interval(strata, level=0.05, resamples=1_000_000, seed=12345):
    rs = np.random.RandomState(seed)
    total = np.zeros(resamples)
    for s in strata:
        x = np.asarray(s)
        n = x.size
        p = [(x == -1).mean(), (x == 0).mean(), (x == 1).mean()]
        counts = rs.multinomial(n, p, size=resamples)
        total += (counts[:, 2] - counts[:, 0]) / n
    means = total / len(strata)
    return (float(np.quantile(means, level / 2)), float(np.quantile(means, 1 - level / 2)))


def synthetic_strata(seed=2024):
    rng = np.random.default_rng(seed)
    a = rng.choice([-1, 0, 1], size=120, p=[0.5, 0.2, 0.3])
    b = rng.choice([-1, 0, 1], size=80, p=[0.25, 0.35, 0.4])
    return [a.tolist(), b.tolist()]
