"""A complete cascaded-link description and its analytic SNR distribution."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from plcrf.channel import DerivedScales, InvariantError, PlcLinkConfig, RfLinkConfig, derive_scales
from plcrf.distributions import EndToEndDistribution, RfHopDistribution, build_e2e
from plcrf.lnsum import DEFAULT_FIT_SAMPLES, DEFAULT_FIT_SEED, fit_lognormal_sum


@dataclass(frozen=True)
class System:
    """PLC and RF hop configurations.

    ``gbar0`` and ``rho`` optionally pin the average SNR scales directly
    (linear), bypassing the power/attenuation/noise derivation; sweeps over
    the average PLC SNR use this.
    """

    plc: PlcLinkConfig = PlcLinkConfig()
    rf: RfLinkConfig = RfLinkConfig()
    gbar0: float | None = None
    rho: float | None = None

    def __post_init__(self):
        for name in ("gbar0", "rho"):
            v = getattr(self, name)
            if v is not None and not (v > 0 and math.isfinite(v)):
                raise InvariantError(name, f"must be > 0 and finite, got {v}")

    def scales(self) -> DerivedScales:
        s = derive_scales(self.plc, self.rf)
        if self.gbar0 is not None:
            s = replace(s, gbar0=self.gbar0)
        if self.rho is not None:
            s = replace(s, rho=self.rho)
        if not s.gbar0 > 0:
            raise InvariantError("plc.power", "average PLC SNR must be > 0")
        if not s.rho > 0:
            raise InvariantError("rf.power", "RF SNR scale must be > 0")
        return s

    def with_(self, **changes) -> "System":
        """Copy with top-level fields or dotted ``plc.x`` / ``rf.x`` fields replaced."""
        top = {}
        plc, rf = {}, {}
        for key, value in changes.items():
            if key.startswith("plc."):
                plc[key[4:]] = value
            elif key.startswith("rf."):
                rf[key[3:]] = value
            else:
                top[key] = value
        return replace(
            self,
            plc=replace(self.plc, **plc) if plc else self.plc,
            rf=replace(self.rf, **rf) if rf else self.rf,
            **top,
        )


def system_e2e(system: System, *, fit_seed: int = DEFAULT_FIT_SEED,
               fit_samples: int = DEFAULT_FIT_SAMPLES) -> EndToEndDistribution:
    plc = system.plc
    fit = fit_lognormal_sum(plc.mu_db, plc.sigma_db, int(plc.branches), seed=fit_seed, samples=fit_samples)
    return build_e2e(system.scales(), fit, int(plc.relays))


def rf_hop(system: System) -> RfHopDistribution:
    s = system.scales()
    return RfHopDistribution(s.shape_a, s.alpha_g, s.rho)
