"""Adaptive direct integration of the metric definitions.

Independent of the Hermite-based closed forms in :mod:`plcrf.metrics`:
every integral is taken in ``u = ln x`` with QUADPACK over a fixed set of
breakpoints covering both the log-normal-sum bulk (tens of dB wide) and the
narrow Gamma bulk of the MIMO hop.
"""

from __future__ import annotations

import math

import numpy as np
from scipy import integrate, special, stats

from plcrf import distributions as dist
from plcrf.distributions import EndToEndDistribution
from plcrf.metrics import Modulation

_EPSREL = 1e-11
_EPSABS = 1e-16


def _log_breaks(e2e: EndToEndDistribution) -> list[float]:
    centre = math.log(e2e.plc.gbar0)
    pts = {centre + k for k in np.arange(-90.0, 91.0, 3.0)}
    rf = e2e.rf
    q = stats.gamma.ppf([1e-12, 1e-6, 1e-3, 0.05, 0.5, 0.95, 1 - 1e-3, 1 - 1e-6, 1 - 1e-12], rf.shape_a) * rf.scale
    pts |= {math.log(v) for v in q if v > 0}
    mode = math.log(rf.mean)
    w = 1.0 / math.sqrt(rf.shape_a)
    pts |= {mode + k * w for k in np.arange(-12.0, 12.5, 0.5)}
    return sorted(pts)


def _integrate_u(f_x, breaks: list[float], upper: float = math.inf) -> float:
    """``int_0^upper f(x) dx`` as ``int f(e^u) e^u du``."""
    u_max = math.log(upper) if math.isfinite(upper) else math.inf
    pts = [-math.inf] + [b for b in breaks if b < u_max] + [u_max]

    def g(u):
        x = math.exp(u)
        if x == 0.0 or math.isinf(x):
            return 0.0
        return f_x(x) * x

    total = 0.0
    for lo, hi in zip(pts[:-1], pts[1:]):
        total += integrate.quad(g, lo, hi, epsabs=_EPSABS, epsrel=_EPSREL, limit=400)[0]
    return total


def direct_outage(e2e: EndToEndDistribution, gamma_th: float) -> float:
    """``int_0^gamma_th f_eq(x) dx``."""
    return _integrate_u(lambda x: float(dist.e2e_pdf(e2e, x)), _log_breaks(e2e), upper=gamma_th)


def direct_ber(e2e: EndToEndDistribution, mod: Modulation) -> float:
    """``q^p / (2 Gamma(p)) int x^(p-1) e^(-q x) F_eq(x) dx``."""
    p, q = mod.p, mod.q

    def f(x):
        return x ** (p - 1.0) * math.exp(-q * x) * float(dist.e2e_cdf(e2e, x))

    return q**p / (2.0 * math.gamma(p)) * _integrate_u(f, _log_breaks(e2e))


def direct_pe3(e2e: EndToEndDistribution, mod: Modulation) -> float:
    p, q = mod.p, mod.q
    a, alpha, rho = e2e.rf.shape_a, e2e.rf.alpha_g, e2e.rf.rho

    def f(x):
        return (x ** (p - 1.0) * math.exp(-q * x) * special.gammaincc(a, alpha * x / rho)
                * float(dist.relay_cdf(e2e.plc, x)))

    return _integrate_u(f, _log_breaks(e2e))


def direct_capacity(e2e: EndToEndDistribution) -> float:
    """``int ln(1+x) [f_D (1 - F_R) + f_R (1 - F_D)] dx``."""
    return _integrate_u(lambda x: math.log1p(x) * float(dist.e2e_pdf(e2e, x)), _log_breaks(e2e))
