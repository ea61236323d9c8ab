import math
import warnings

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import special

from conftest import baseline_system
from plcrf import distributions as dist
from plcrf import oracles
from plcrf.channel import db_to_linear
from plcrf.metrics import (
    MODULATIONS,
    MetricQuery,
    QuadratureWarning,
    average_ber,
    average_capacity,
    ber_terms,
    capacity_c1,
    capacity_c1_meijer,
    capacity_c2,
    conditional_ber,
    modulation,
    nats_to_bits,
    outage_probability,
    wireless_only_outage,
)
from plcrf.distributions import RfHopDistribution
from plcrf.system import rf_hop, system_e2e


def e2e_at(gbar0_db=10.0, rho_db=20.0, branches=1, relays=2, **rf):
    system = baseline_system(branches, relays, gbar0_db, rho_db)
    if rf:
        system = system.with_(**{f"rf.{k}": v for k, v in rf.items()})
    return system_e2e(system)


# -- outage ---------------------------------------------------------------------

def _outage(e2e, g):
    return outage_probability(MetricQuery(e2e, g)).value


@given(st.floats(-3, 4))
def test_outage_equals_e2e_cdf(log_g):
    e2e = e2e_at()
    g = 10**log_g
    direct_form = 1 + (dist.relay_cdf(e2e.plc, g) - 1) * special.gammaincc(18, 3 * g / e2e.rf.rho)
    assert _outage(e2e, g) == pytest.approx(dist.e2e_cdf(e2e, g), rel=1e-12, abs=1e-300)
    assert _outage(e2e, g) == pytest.approx(direct_form, rel=1e-12, abs=1e-300)


def test_outage_limits(e2e_l1m2):
    assert _outage(e2e_l1m2, 1e-200) == pytest.approx(0.0, abs=1e-12)
    assert _outage(e2e_l1m2, 1e12) == 1.0
    for g in (0.0, -1.0, math.inf):
        with pytest.raises(ValueError):
            MetricQuery(e2e_l1m2, g)


def test_outage_components(e2e_l1m2):
    r = outage_probability(MetricQuery(e2e_l1m2, 2.0))
    assert r.components["f_relay"] == dist.relay_cdf(e2e_l1m2.plc, 2.0)
    assert r.components["f_mimo"] == dist.mimo_cdf(e2e_l1m2.rf, 2.0)


def test_outage_monotone_threshold(e2e_l2m1):
    vals = [_outage(e2e_l2m1, g) for g in np.logspace(-3, 3, 40)]
    assert np.all(np.diff(vals) >= 0)


@pytest.mark.parametrize("change", [
    dict(gbar0_db=15.0), dict(rho_db=25.0), dict(relays=3), dict(branches=2), dict(n_r=4),
])
def test_outage_improves(change):
    base = e2e_at()
    better = e2e_at(**{"gbar0_db": 10.0, "rho_db": 20.0, "branches": 1, "relays": 2, **change})
    for g in (0.5, 2.0, 5.0, 20.0):
        assert _outage(better, g) <= _outage(base, g) + 1e-15


@pytest.mark.parametrize("g", [0.3, 2.0, 10.0, 60.0])
def test_outage_vs_direct_integration(e2e_l1m2, g):
    assert abs(_outage(e2e_l1m2, g) - oracles.direct_outage(e2e_l1m2, g)) <= 1e-6


def test_wireless_only():
    rf = RfHopDistribution(18.0, 3.0, 5.0)
    assert wireless_only_outage(rf, 0.0) == 0.0
    assert wireless_only_outage(rf, 40.0) == dist.mimo_cdf(rf, 40.0)
    sys_los = baseline_system().with_(**{"rf.dist": 10.0, "rf.n_pl": 2.8, "rf.power": 300.0})
    sys_nlos = sys_los.with_(**{"rf.n_pl": 3.2})
    los, nlos = (rf_hop(s.with_(rho=None)) for s in (sys_los, sys_nlos))
    for g in np.logspace(-3, 1, 10):
        assert wireless_only_outage(nlos, g) >= wireless_only_outage(los, g)
    with pytest.raises(ValueError):
        wireless_only_outage(rf, -1.0)


# -- conditional BER --------------------------------------------------------------

def test_conditional_ber_examples():
    snr = np.linspace(0, 30, 301)
    for mod in MODULATIONS.values():
        assert conditional_ber(mod, 0.0) == 0.5
        v = conditional_ber(mod, snr)
        assert np.all(np.diff(v) <= 0) and np.all(v > 0) and np.all(v <= 0.5)
    bpsk, dpsk = modulation("bpsk"), modulation("DPSK")
    assert np.max(np.abs(conditional_ber(bpsk, snr) - special.ndtr(-np.sqrt(2 * snr)))) <= 1e-12
    assert np.max(np.abs(conditional_ber(bpsk, snr) - 0.5 * special.erfc(np.sqrt(snr)))) <= 1e-12
    assert np.max(np.abs(conditional_ber(dpsk, snr) - 0.5 * np.exp(-snr))) <= 1e-12
    with pytest.raises(ValueError):
        conditional_ber(bpsk, -1.0)
    with pytest.raises(ValueError):
        modulation("qam")


# -- average BER ----------------------------------------------------------------

@pytest.mark.parametrize("gbar0_db", [0.0, 10.0, 20.0, 40.0])
@pytest.mark.parametrize("name", ["BPSK", "NCFSK"])
def test_ber_vs_direct_integration(gbar0_db, name):
    e2e = e2e_at(gbar0_db=gbar0_db)
    mod = modulation(name)
    with warnings.catch_warnings():
        warnings.simplefilter("error", QuadratureWarning)
        r = average_ber(MetricQuery(e2e, modulation=mod))
    assert r.components["quadrature_ok"]
    assert abs(r.value - oracles.direct_ber(e2e, mod)) <= 1e-6
    assert 0 < r.value < 0.5


def test_ber_terms_structure(e2e_l1m2):
    pe1, pe2, pe3 = ber_terms(MetricQuery(e2e_l1m2))
    assert pe1 == pytest.approx(math.sqrt(math.pi))
    # at rho = 20 dB the difference pe1 - pe2 is ~1e-40, below rounding
    assert 0 < pe2 <= pe1 * (1 + 1e-14) and pe3 > 0
    pe1, pe2, _ = ber_terms(MetricQuery(e2e_at(rho_db=-5.0)))
    assert pe1 - pe2 > 1e-3


def test_ber_low_order_flagged(e2e_l1m2):
    with pytest.warns(QuadratureWarning):
        r = average_ber(MetricQuery(e2e_l1m2, half_range_order=2))
    assert r.components["quadrature_ok"] is False


def test_ber_high_snr_limit():
    vals = [average_ber(MetricQuery(e2e_at(gbar0_db=g, rho_db=g)), check=False).value for g in (20, 40, 60, 80)]
    assert np.all(np.diff(vals) < 0)
    assert vals[-1] < 1e-3


def test_ber_monotone_in_scales():
    by_g = [average_ber(MetricQuery(e2e_at(gbar0_db=g)), check=False).value for g in range(0, 41, 5)]
    by_r = [average_ber(MetricQuery(e2e_at(rho_db=r)), check=False).value for r in range(0, 41, 5)]
    assert np.all(np.diff(by_g) <= 0) and np.all(np.diff(by_r) <= 0)


def test_ber_modulation_ordering():
    for g in np.linspace(0, 36, 10):
        e2e = e2e_at(gbar0_db=g)
        b = {n: average_ber(MetricQuery(e2e, modulation=m), check=False).value for n, m in MODULATIONS.items()}
        assert b["BPSK"] <= b["BFSK"]
        assert b["DPSK"] <= b["NCFSK"]


# -- capacity ---------------------------------------------------------------------

@pytest.mark.parametrize("gbar0_db", [0.0, 10.0, 20.0, 40.0])
@pytest.mark.parametrize("branches, relays", [(1, 2), (2, 1)])
def test_capacity_vs_direct_integration(gbar0_db, branches, relays):
    e2e = e2e_at(gbar0_db=gbar0_db, branches=branches, relays=relays)
    c = average_capacity(MetricQuery(e2e)).value
    ref = oracles.direct_capacity(e2e)
    assert c == pytest.approx(ref, rel=1e-4)


def test_capacity_components(e2e_l1m2):
    r = average_capacity(MetricQuery(e2e_l1m2))
    c = r.components
    assert r.value == pytest.approx(c["c1"] + c["c2"] - c["c3"], rel=1e-15)
    assert c["c1_meijer"] == pytest.approx(c["c1"], rel=1e-8)
    assert c["half_range_order"] == 64 and c["full_range_order"] == 4000
    assert c["guarded_nodes"] >= 0


def test_capacity_c1_exponential():
    rf = RfHopDistribution(1.0, 1.0, 1.0)
    assert capacity_c1(rf) == pytest.approx(math.e * special.exp1(1.0), rel=1e-12)
    assert capacity_c1_meijer(rf) == pytest.approx(capacity_c1(rf), rel=1e-10)


def test_capacity_guard_counts_nodes():
    e2e = e2e_at(branches=4)
    _, guarded = capacity_c2(MetricQuery(e2e))
    # a0 is finite for L >= 2, so the largest full-range nodes fall outside the map
    assert guarded > 0
    assert e2e.plc.fit.a0 < np.sqrt(2) * 60


def test_capacity_low_snr_limit():
    c = average_capacity(MetricQuery(e2e_at(gbar0_db=-60, rho_db=-60))).value
    assert 0 <= c < 1e-5


def test_capacity_monotone():
    by_g = [average_capacity(MetricQuery(e2e_at(gbar0_db=g))).value for g in range(0, 41, 5)]
    by_r = [average_capacity(MetricQuery(e2e_at(rho_db=r))).value for r in range(0, 41, 5)]
    assert np.all(np.diff(by_g) >= 0) and np.all(np.diff(by_r) >= 0)


def test_nats_to_bits():
    assert nats_to_bits(math.log(2)) == pytest.approx(1.0)


def test_query_validates_orders(e2e_l1m2):
    with pytest.raises(ValueError):
        MetricQuery(e2e_l1m2, half_range_order=65)
    with pytest.raises(ValueError):
        MetricQuery(e2e_l1m2, full_range_order=0)
