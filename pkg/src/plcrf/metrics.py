"""Closed-form outage probability, average BER and ergodic capacity.

BER and capacity follow the three-term decompositions

    P_e = (P_e1 - P_e2 + P_e3) q^p / (2 Gamma(p))
    C   = C1 + C2 - C3

where P_e2 and C1 are Meijer-G (here: Gamma-expectation) terms, P_e3 and C3
use the half-range Gauss-Hermite rule and C2 the full-range rule after the
change of variable ``sqrt(2) z = a0 - a1 (x / gbar0)^(-a2 / lambda)``.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass, field

import numpy as np
from scipy import special

from plcrf import distributions as dist
from plcrf.distributions import EndToEndDistribution, RfHopDistribution
from plcrf.special import (
    SQRT_PI,
    full_hermite_rule,
    gamma_log1p_mean,
    half_range_hermite_rule,
    meijer_ber_term,
    meijer_cap_term,
)

DEFAULT_HALF_RANGE_ORDER = 64
DEFAULT_FULL_RANGE_ORDER = 4000
PE3_TOLERANCE = 1e-6


class QuadratureWarning(RuntimeWarning):
    """Fixed-order quadrature disagrees with adaptive integration."""


@dataclass(frozen=True)
class Modulation:
    p: float
    q: float
    name: str = ""

    def __post_init__(self):
        if not (self.p > 0 and self.q > 0):
            raise ValueError(f"modulation p and q must be > 0, got p={self.p}, q={self.q}")


MODULATIONS = {
    "BFSK": Modulation(0.5, 0.5, "BFSK"),
    "BPSK": Modulation(0.5, 1.0, "BPSK"),
    "DPSK": Modulation(1.0, 1.0, "DPSK"),
    "NCFSK": Modulation(1.0, 0.5, "NCFSK"),
}


def modulation(name: str) -> Modulation:
    try:
        return MODULATIONS[name.upper()]
    except KeyError:
        raise ValueError(f"unknown modulation {name!r}; choose from {sorted(MODULATIONS)}") from None


@dataclass(frozen=True)
class MetricQuery:
    e2e: EndToEndDistribution
    gamma_th: float = 1.0
    modulation: Modulation = MODULATIONS["BPSK"]
    half_range_order: int = DEFAULT_HALF_RANGE_ORDER
    full_range_order: int = DEFAULT_FULL_RANGE_ORDER

    def __post_init__(self):
        if not (self.gamma_th > 0 and math.isfinite(self.gamma_th)):
            raise ValueError(f"gamma_th must be > 0, got {self.gamma_th}")
        # validates the orders eagerly
        half_range_hermite_rule(self.half_range_order)
        full_hermite_rule(self.full_range_order)


@dataclass(frozen=True)
class MetricResult:
    value: float
    components: dict = field(default_factory=dict)

    def __float__(self):
        return self.value


def outage_probability(query: MetricQuery) -> MetricResult:
    """``1 + (F_R(g_th) - 1) Q(A, alpha g_th / rho)``, evaluated as
    ``-expm1(log(1 - F_R) + log Q)`` so small outages keep full precision."""
    e2e, g = query.e2e, query.gamma_th
    log_sf_r = np.log(dist.relay_sf(e2e.plc, g))
    q_term = special.gammaincc(e2e.rf.shape_a, e2e.rf.alpha_g * g / e2e.rf.rho)
    with np.errstate(divide="ignore"):
        value = float(-np.expm1(log_sf_r + np.log(q_term)))
    return MetricResult(value, {
        "f_relay": dist.relay_cdf(e2e.plc, g),
        "f_mimo": dist.mimo_cdf(e2e.rf, g),
    })


def wireless_only_outage(rf_full_path: RfHopDistribution, gamma_th: float) -> float:
    """Outage of the direct MIMO link spanning the whole Tx-Rx distance."""
    if gamma_th < 0:
        raise ValueError("gamma_th must be >= 0")
    return dist.mimo_cdf(rf_full_path, gamma_th)


def conditional_ber(mod: Modulation, snr):
    """``Gamma(p, q snr) / (2 Gamma(p))``."""
    snr = np.asarray(snr, dtype=float)
    if np.any(snr < 0):
        raise ValueError("snr must be >= 0")
    out = 0.5 * special.gammaincc(mod.p, mod.q * snr)
    return out if np.ndim(out) else float(out)


def ber_terms(query: MetricQuery) -> tuple[float, float, float]:
    e2e, mod = query.e2e, query.modulation
    p, q = mod.p, mod.q
    a, alpha, rho = e2e.rf.shape_a, e2e.rf.alpha_g, e2e.rf.rho
    pe1 = math.gamma(p) / q**p
    pe2 = meijer_ber_term(p, a, alpha / (q * rho)) / (q**p * math.gamma(a))
    rule = half_range_hermite_rule(query.half_range_order)
    y = rule.nodes
    f = (2.0 * y ** (2.0 * p - 1.0) / q**p
         * special.gammaincc(a, alpha * y**2 / (q * rho))
         * dist.relay_cdf(e2e.plc, y**2 / q))
    pe3 = float(np.dot(rule.weights, f))
    return pe1, pe2, pe3


def average_ber(query: MetricQuery, check: bool = True) -> MetricResult:
    """Average BER for binary modulation ``(p, q)``.

    With ``check`` the half-range value of ``P_e3`` is compared against an
    adaptive evaluation; a disagreement above 1e-6 issues a
    :class:`QuadratureWarning` and sets ``components["quadrature_ok"]``.
    """
    p, q = query.modulation.p, query.modulation.q
    pe1, pe2, pe3 = ber_terms(query)
    value = (pe1 - pe2 + pe3) * q**p / (2.0 * math.gamma(p))
    comps = {"pe1": pe1, "pe2": pe2, "pe3": pe3, "half_range_order": query.half_range_order}
    if check:
        from plcrf.oracles import direct_pe3

        ref = direct_pe3(query.e2e, query.modulation)
        comps["pe3_adaptive"] = ref
        comps["quadrature_ok"] = abs(ref - pe3) <= PE3_TOLERANCE
        if not comps["quadrature_ok"]:
            warnings.warn(
                f"half-range order {query.half_range_order} gives P_e3={pe3:.3e}, adaptive {ref:.3e}; "
                "increase the quadrature order",
                QuadratureWarning,
                stacklevel=2,
            )
    return MetricResult(float(value), comps)


def capacity_c1(rf: RfHopDistribution) -> float:
    """``E[ln(1 + gamma_D)]`` by direct integration of the Gamma density."""
    return gamma_log1p_mean(rf.shape_a, rf.rho / rf.alpha_g)


def capacity_c1_meijer(rf: RfHopDistribution) -> float:
    """The same quantity through the G^{3,1}_{2,3} instance; may overflow to inf."""
    a, z = rf.shape_a, rf.alpha_g / rf.rho
    g = meijer_cap_term(a, z)
    return math.exp(a * math.log(z) - special.gammaln(a) + math.log(g))


def capacity_c2(query: MetricQuery) -> tuple[float, int]:
    """Full-range Hermite sum for ``int ln(1+x) (1 - F_D) dF_R``.

    Nodes with ``a0 - sqrt(2) z <= 0`` lie beyond the image of ``x -> inf``
    and contribute nothing; they are counted and reported.
    """
    plc, rf = query.e2e.plc, query.e2e.rf
    fit = plc.fit
    rule = full_hermite_rule(query.full_range_order)
    z = rule.nodes
    s = math.sqrt(2.0) * z
    inside = fit.a0 - s > 0
    zi, si = z[inside], s[inside]
    # x(z) = gbar0 * ((a0 - s) / a1) ** (-lam / a2), via log1p for a0 ~ a1
    log_x = math.log(plc.gbar0) - (fit.lam / fit.a2) * np.log1p((fit.a0 - fit.a1 - si) / fit.a1)
    with np.errstate(over="ignore"):
        x = np.exp(log_x)
        tail = special.gammaincc(rf.shape_a, rf.alpha_g * x / rf.rho)
        log_term = np.where(log_x > 0, log_x + np.log1p(np.exp(-log_x)), np.log1p(x))
    weight_m = plc.relays * special.ndtr(si) ** (plc.relays - 1) if plc.relays > 1 else 1.0
    g = np.where(tail > 0, weight_m / SQRT_PI * log_term * tail, 0.0)
    if not np.all(np.isfinite(g)):
        raise FloatingPointError("non-finite value in the capacity Hermite sum")
    return float(np.dot(rule.weights[inside], g)), int((~inside).sum())


def capacity_c3(query: MetricQuery) -> float:
    """Half-range sum for ``int ln(1+x) F_R(x) f_D(x) dx`` after ``alpha x / rho = y^2``."""
    plc, rf = query.e2e.plc, query.e2e.rf
    rule = half_range_hermite_rule(query.half_range_order)
    y = rule.nodes
    x = rf.rho * y**2 / rf.alpha_g
    poly = np.exp((2.0 * rf.shape_a - 1.0) * np.log(y) - special.gammaln(rf.shape_a))
    return float(2.0 * np.dot(rule.weights, poly * np.log1p(x) * dist.relay_cdf(plc, x)))


def average_capacity(query: MetricQuery) -> MetricResult:
    """Ergodic capacity in nats/s/Hz."""
    rf = query.e2e.rf
    c1 = capacity_c1(rf)
    c2, guarded = capacity_c2(query)
    c3 = capacity_c3(query)
    try:
        c1_meijer = capacity_c1_meijer(rf)
    except (OverflowError, ValueError):
        c1_meijer = None
    comps = {
        "c1": c1,
        "c2": c2,
        "c3": c3,
        "c1_meijer": c1_meijer,
        "guarded_nodes": guarded,
        "half_range_order": query.half_range_order,
        "full_range_order": query.full_range_order,
    }
    return MetricResult(max(c1 + c2 - c3, 0.0), comps)


def nats_to_bits(c: float) -> float:
    return c / math.log(2.0)
