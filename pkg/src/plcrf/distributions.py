"""Per-hop and end-to-end SNR distributions of the cascaded PLC/RF link.

All functions are defined for ``x > 0``; callers should treat ``x = 0`` as
CDF 0 because the log-normal-sum model has a power-law singularity there.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special

from plcrf import lnsum
from plcrf.channel import DerivedScales
from plcrf.lnsum import LognormalSumFit


@dataclass(frozen=True)
class PlcHopDistribution:
    fit: LognormalSumFit
    gbar0: float
    relays: int

    def __post_init__(self):
        if not (float(self.relays).is_integer() and self.relays >= 1):
            raise ValueError(f"relays must be an integer >= 1, got {self.relays}")
        if not self.gbar0 > 0:
            raise ValueError(f"gbar0 must be > 0, got {self.gbar0}")


@dataclass(frozen=True)
class RfHopDistribution:
    """Gamma(shape_a, rho / alpha_g) SNR of the MIMO-OSTBC hop."""

    shape_a: float
    alpha_g: float
    rho: float

    def __post_init__(self):
        for name in ("shape_a", "alpha_g", "rho"):
            v = getattr(self, name)
            if not (v > 0 and math.isfinite(v)):
                raise ValueError(f"{name} must be positive and finite, got {v}")

    @property
    def scale(self) -> float:
        return self.rho / self.alpha_g

    @property
    def mean(self) -> float:
        return self.shape_a * self.scale

    @property
    def variance(self) -> float:
        return self.shape_a * self.scale**2


@dataclass(frozen=True)
class EndToEndDistribution:
    plc: PlcHopDistribution
    rf: RfHopDistribution


def build_e2e(scales: DerivedScales, fit: LognormalSumFit, relays: int) -> EndToEndDistribution:
    return EndToEndDistribution(
        PlcHopDistribution(fit, scales.gbar0, relays),
        RfHopDistribution(scales.shape_a, scales.alpha_g, scales.rho),
    )


def _pos(x):
    x = np.asarray(x, dtype=float)
    if np.any(~(x > 0)):
        raise ValueError("x must be > 0")
    return x


def _out(v):
    return v if np.ndim(v) else float(v)


def relay_logcdf(plc: PlcHopDistribution, x):
    """``M * log Phi(.)``: log of the best-of-M relay CDF."""
    return _out(plc.relays * np.asarray(lnsum.lnsum_logcdf(plc.fit, _pos(x), plc.gbar0)))


def relay_cdf(plc: PlcHopDistribution, x):
    """CDF of the selected-relay SNR, ``F_single(x) ** M`` (log-space)."""
    return _out(np.exp(relay_logcdf(plc, x)))


def relay_pdf(plc: PlcHopDistribution, x):
    x = _pos(x)
    single = np.asarray(lnsum.lnsum_pdf(plc.fit, x, plc.gbar0))
    if plc.relays == 1:
        return _out(single)
    log_rest = (plc.relays - 1) * np.asarray(lnsum.lnsum_logcdf(plc.fit, x, plc.gbar0))
    return _out(plc.relays * single * np.exp(log_rest))


def relay_sf(plc: PlcHopDistribution, x):
    """``1 - relay_cdf`` computed as ``-expm1(log F)`` to keep the lower tail."""
    return _out(-np.expm1(relay_logcdf(plc, x)))


def mimo_cdf(rf: RfHopDistribution, x):
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("x must be >= 0")
    return _out(special.gammainc(rf.shape_a, rf.alpha_g * x / rf.rho))


def mimo_sf(rf: RfHopDistribution, x):
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("x must be >= 0")
    return _out(special.gammaincc(rf.shape_a, rf.alpha_g * x / rf.rho))


def mimo_pdf(rf: RfHopDistribution, x):
    x = np.asarray(x, dtype=float)
    if np.any(x < 0):
        raise ValueError("x must be >= 0")
    t = rf.alpha_g * x / rf.rho
    with np.errstate(divide="ignore", invalid="ignore"):
        logpdf = (rf.shape_a - 1.0) * np.log(t) - t - special.gammaln(rf.shape_a) + math.log(rf.alpha_g / rf.rho)
        out = np.exp(logpdf)
    if rf.shape_a == 1.0:
        out = np.where(t == 0, rf.alpha_g / rf.rho, out)
    out = np.where(np.isnan(out), 0.0, out)
    return _out(out)


def e2e_sf(e2e: EndToEndDistribution, x):
    """``P(min(gamma_R, gamma_D) > x) = (1 - F_R)(1 - F_D)``."""
    x = _pos(x)
    return _out(np.asarray(relay_sf(e2e.plc, x)) * np.asarray(mimo_sf(e2e.rf, x)))


def e2e_cdf(e2e: EndToEndDistribution, x):
    """CDF of ``min(gamma_R, gamma_D)``: ``F_R + F_D (1 - F_R)``."""
    x = _pos(x)
    f_r = np.asarray(relay_cdf(e2e.plc, x))
    f_d = np.asarray(mimo_cdf(e2e.rf, x))
    return _out(f_r + f_d * (1.0 - f_r))


def e2e_pdf(e2e: EndToEndDistribution, x):
    x = _pos(x)
    return _out(
        np.asarray(relay_pdf(e2e.plc, x)) * np.asarray(mimo_sf(e2e.rf, x))
        + np.asarray(mimo_pdf(e2e.rf, x)) * np.asarray(relay_sf(e2e.plc, x))
    )
