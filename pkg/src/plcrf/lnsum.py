"""Three-parameter approximation to the distribution of a sum of squared
log-normal gains.

The SNR after MRC over ``L`` branches, normalised by its per-branch average,
``S = sum_l h_l**2`` with ``ln h_l ~ N(mu, sigma^2)``, is modelled as

    F(x) = Phi(a0 - a1 * (x / gbar0) ** (-a2 / LAMBDA))

which in dB reads ``Phi(a0 - a1 * exp(-a2 * x_dB))``.  Constants are obtained
by least squares in probit space against Monte-Carlo quantiles of ``S``.
"""

from __future__ import annotations

import math
import threading
from dataclasses import dataclass

import numpy as np
from scipy import optimize, special

from plcrf.channel import LAMBDA

DEFAULT_FIT_SEED = 0x5EED
DEFAULT_FIT_SAMPLES = 10_000_000
N_QUANTILES = 200
PROB_RANGE = (1e-4, 1.0 - 1e-4)
MIN_SATURATION = 0.999
_A2_FLOOR = 1e-7
_CHUNK = 1_000_000


class FitError(RuntimeError):
    """The optimiser failed to produce an admissible fit."""


@dataclass(frozen=True)
class LognormalSumFit:
    a0: float
    a1: float
    a2: float
    mu_db: float
    sigma_db: float
    branches: int
    lam: float = LAMBDA
    seed: int = DEFAULT_FIT_SEED
    samples: int = DEFAULT_FIT_SAMPLES

    @property
    def saturation(self) -> float:
        """``Phi(a0)``: the limit of the CDF as ``x -> inf``."""
        return float(special.ndtr(self.a0))


def sample_normalised_sums(mu_db: float, sigma_db: float, branches: int, n: int, rng) -> np.ndarray:
    """``n`` draws of ``sum_l h_l**2`` with ``ln h_l ~ N(LAMBDA mu_db, (LAMBDA sigma_db)^2)``."""
    mu, sigma = LAMBDA * mu_db, LAMBDA * sigma_db
    out = np.empty(n)
    for start in range(0, n, _CHUNK):
        stop = min(n, start + _CHUNK)
        z = rng.standard_normal((stop - start, branches))
        out[start:stop] = np.exp(2.0 * (mu + sigma * z)).sum(axis=1)
    return out


def _validate_inputs(mu_db, sigma_db, branches):
    if not (math.isfinite(mu_db) and math.isfinite(sigma_db)):
        raise ValueError("mu_db and sigma_db must be finite")
    if not sigma_db > 0:
        raise ValueError(f"sigma_db must be > 0, got {sigma_db}")
    if not (float(branches).is_integer() and branches >= 1):
        raise ValueError(f"branches must be an integer >= 1, got {branches}")


def _fit(mu_db, sigma_db, branches, seed, samples) -> LognormalSumFit:
    rng = np.random.default_rng(np.random.SeedSequence([seed, int(branches)]))
    sums = sample_normalised_sums(mu_db, sigma_db, int(branches), samples, rng)
    z = np.linspace(special.ndtri(PROB_RANGE[0]), special.ndtri(PROB_RANGE[1]), N_QUANTILES)
    x_db = 10.0 * np.log10(np.quantile(sums, special.ndtr(z)))
    del sums

    # Parameterised as b0 + b1 * (1 - exp(-a2 x)) / a2, which stays well
    # conditioned as a2 -> 0 (the exactly log-normal case, L = 1).
    def resid(theta):
        b0, b1, a2 = theta
        return b0 + b1 * (-np.expm1(-a2 * x_db)) / a2 - z

    scale_db = 2.0 * sigma_db
    res = optimize.least_squares(
        resid,
        x0=[-2.0 * mu_db / scale_db, 1.0 / scale_db, 0.01],
        bounds=([-np.inf, 1e-12, _A2_FLOOR], [np.inf, np.inf, np.inf]),
        x_scale="jac",
        xtol=1e-15,
        ftol=1e-15,
        gtol=1e-15,
        max_nfev=5000,
    )
    if not res.success:
        raise FitError(f"least squares did not converge: {res.message}")
    b0, b1, a2 = res.x
    a1 = b1 / a2
    a0 = b0 + a1

    if special.ndtr(a0) < MIN_SATURATION:
        a0_min = float(special.ndtri(MIN_SATURATION))

        def resid_direct(theta):
            c0, c1, c2 = theta
            return c0 - c1 * np.exp(-c2 * x_db) - z

        res = optimize.least_squares(
            resid_direct,
            x0=[max(a0, a0_min), a1, a2],
            bounds=([a0_min, 1e-12, _A2_FLOOR], [np.inf, np.inf, np.inf]),
            x_scale="jac",
            max_nfev=5000,
        )
        if not res.success:
            raise FitError(f"constrained least squares did not converge: {res.message}")
        a0, a1, a2 = res.x

    if not (a1 > 0 and a2 > 0 and np.isfinite([a0, a1, a2]).all()):
        raise FitError(f"inadmissible constants a0={a0}, a1={a1}, a2={a2}")
    return LognormalSumFit(float(a0), float(a1), float(a2), float(mu_db), float(sigma_db), int(branches),
                           seed=seed, samples=samples)


_cache: dict[tuple, LognormalSumFit] = {}
_cache_lock = threading.Lock()
_key_locks: dict[tuple, threading.Lock] = {}


def fit_lognormal_sum(mu_db: float, sigma_db: float, branches: int, *,
                      seed: int = DEFAULT_FIT_SEED, samples: int = DEFAULT_FIT_SAMPLES) -> LognormalSumFit:
    """Fit ``(a0, a1, a2)`` for the given shadowing moments and branch count.

    Results are cached per ``(mu_db, sigma_db, branches, seed, samples)``;
    concurrent callers asking for the same key wait for a single fit.

    Raises
    ------
    ValueError
        Invalid moments or branch count.
    FitError
        The optimiser did not converge or produced inadmissible constants.
    """
    _validate_inputs(mu_db, sigma_db, branches)
    if samples < 10_000:
        raise ValueError(f"samples must be >= 1e4, got {samples}")
    key = (float(mu_db), float(sigma_db), int(branches), int(seed), int(samples))
    with _cache_lock:
        hit = _cache.get(key)
        if hit is not None:
            return hit
        lock = _key_locks.setdefault(key, threading.Lock())
    with lock:
        with _cache_lock:
            hit = _cache.get(key)
        if hit is None:
            hit = _fit(*key)
            with _cache_lock:
                _cache[key] = hit
    return hit


def clear_fit_cache() -> None:
    with _cache_lock:
        _cache.clear()
        _key_locks.clear()


def _check_x(x):
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise ValueError("x must be > 0")
    return x


def probit(fit: LognormalSumFit, x, gbar0):
    """The argument of Phi, ``a0 - a1 (x/gbar0)^(-a2/lam)``, for x > 0."""
    x = _check_x(x)
    if not gbar0 > 0:
        raise ValueError("gbar0 must be > 0")
    e = -(fit.a2 / fit.lam) * np.log(x / gbar0)
    with np.errstate(over="ignore"):
        return (fit.a0 - fit.a1) - fit.a1 * np.expm1(e)


def _slope(fit, x, gbar0):
    """d(probit)/dx."""
    e = -(fit.a2 / fit.lam) * np.log(x / gbar0)
    with np.errstate(over="ignore"):
        return fit.a1 * (fit.a2 / fit.lam) * np.exp(e) / x


def lnsum_cdf(fit: LognormalSumFit, x, gbar0):
    """Approximate CDF of ``gbar0 * sum h_l^2`` at ``x``."""
    out = special.ndtr(probit(fit, x, gbar0))
    return out if np.ndim(out) else float(out)


def lnsum_logcdf(fit: LognormalSumFit, x, gbar0):
    out = special.log_ndtr(probit(fit, x, gbar0))
    return out if np.ndim(out) else float(out)


def lnsum_pdf(fit: LognormalSumFit, x, gbar0):
    """Density matching :func:`lnsum_cdf`, per unit of linear SNR."""
    x = _check_x(x)
    u = probit(fit, x, gbar0)
    # phi(u) underflows before the slope overflows; guard inf * 0.
    with np.errstate(over="ignore", invalid="ignore"):
        out = np.exp(-0.5 * u * u - 0.5 * math.log(2.0 * math.pi)) * _slope(fit, x, gbar0)
    out = np.where(np.isfinite(out), out, 0.0)
    return out if np.ndim(out) else float(out)
