"""Test-side reference computations shared by several test modules."""

import numpy as np
from scipy import special, stats

from plcrf.channel import LAMBDA


def exact_single_cdf(x, gbar0, mu_db, sigma_db):
    """CDF of ``gbar0 h^2`` with ``ln h ~ N(LAMBDA mu, (LAMBDA sigma)^2)``."""
    mu, sigma = LAMBDA * mu_db, LAMBDA * sigma_db
    return special.ndtr((np.log(np.asarray(x) / gbar0) - 2 * mu) / (2 * sigma))


def ks_distance(samples, cdf) -> float:
    """Kolmogorov distance between the empirical CDF of ``samples`` and ``cdf``."""
    return float(stats.kstest(np.asarray(samples), cdf).statistic)


def lognormal_sums(mu_db, sigma_db, branches, n, seed):
    """Independent sampler (not the package's) for sums of squared log-normals."""
    rng = np.random.Generator(np.random.PCG64(seed))
    mu, sigma = LAMBDA * mu_db, LAMBDA * sigma_db
    out = np.zeros(n)
    for _ in range(branches):
        out += rng.lognormal(2 * mu, 2 * sigma, n)
    return out
