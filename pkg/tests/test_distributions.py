import math

import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate, stats

from _oracles import ks_distance
from conftest import baseline_system
from plcrf import distributions as dist
from plcrf.distributions import EndToEndDistribution, PlcHopDistribution, RfHopDistribution
from plcrf.lnsum import fit_lognormal_sum, lnsum_cdf, lnsum_pdf
from plcrf.montecarlo import sample_e2e_snr, sample_mimo_snr, sample_plc_snr
from plcrf.system import system_e2e


def probes(e2e, n=200):
    g = math.sqrt(e2e.plc.gbar0 * e2e.rf.mean)
    return g * np.logspace(-4, 4, n)


@pytest.fixture(scope="module")
def fit2():
    return fit_lognormal_sum(0.0, 12.0, 2)


def test_relay_single_equals_lnsum(e2e_l2m1):
    plc = e2e_l2m1.plc
    x = probes(e2e_l2m1, 50)
    np.testing.assert_allclose(dist.relay_cdf(plc, x), lnsum_cdf(plc.fit, x, plc.gbar0), rtol=1e-14)
    np.testing.assert_allclose(dist.relay_pdf(plc, x), lnsum_pdf(plc.fit, x, plc.gbar0), rtol=1e-14)


def test_relay_two_at_median(fit2):
    plc = PlcHopDistribution(fit2, 3.0, 2)
    x_med = 3.0 * (fit2.a1 / fit2.a0) ** (fit2.lam / fit2.a2)
    assert dist.relay_cdf(plc, x_med) == pytest.approx(0.25, abs=1e-9)


@given(st.integers(1, 40), st.floats(-3, 3))
def test_relay_is_power_of_single(m, log_x):
    fit = fit_lognormal_sum(0.0, 12.0, 2)
    plc = PlcHopDistribution(fit, 5.0, m)
    x = 5.0 * 10**log_x
    assert dist.relay_cdf(plc, x) == pytest.approx(lnsum_cdf(fit, x, 5.0) ** m, rel=1e-12, abs=1e-300)
    assert dist.relay_cdf(plc, x) <= fit.saturation**m


def test_relay_many_relays_no_underflow(fit2):
    plc = PlcHopDistribution(fit2, 1.0, 500)
    assert dist.relay_logcdf(plc, 1e-3) > -1e6
    assert np.isfinite(dist.relay_logcdf(plc, 1e-3))
    assert dist.relay_sf(plc, 1e-3) == pytest.approx(1.0)


def test_stochastic_ordering_in_m(fit2):
    x = 3.0 * np.logspace(-4, 4, 200)
    prev = None
    for m in (1, 2, 3, 5):
        cur = dist.relay_cdf(PlcHopDistribution(fit2, 3.0, m), x)
        if prev is not None:
            assert np.all(cur <= prev)
        prev = cur


def _fd_check(cdf, pdf, xs):
    for x in xs:
        h = x * 1e-5
        fd = (cdf(x + h) - cdf(x - h)) / (2 * h)
        p = pdf(x)
        if p < 1e-280:
            continue
        assert p == pytest.approx(fd, rel=1e-5), x


@pytest.mark.parametrize("which", ["l1m2", "l2m1"])
def test_finite_differences(which, e2e_l1m2, e2e_l2m1):
    e2e = e2e_l1m2 if which == "l1m2" else e2e_l2m1
    xs = np.logspace(-2, 3, 50)
    _fd_check(lambda x: dist.relay_cdf(e2e.plc, x), lambda x: dist.relay_pdf(e2e.plc, x), xs)
    _fd_check(lambda x: dist.mimo_cdf(e2e.rf, x), lambda x: dist.mimo_pdf(e2e.rf, x), xs)
    _fd_check(lambda x: dist.e2e_cdf(e2e, x), lambda x: dist.e2e_pdf(e2e, x), xs)


def test_relay_pdf_integrates(e2e_l1m2):
    plc = e2e_l1m2.plc
    c = math.log(plc.gbar0)
    pts = [-np.inf] + [c + k for k in range(-80, 81, 4)] + [np.inf]
    total = sum(integrate.quad(lambda u: dist.relay_pdf(plc, math.exp(u)) * math.exp(u), a, b,
                               epsabs=1e-14, epsrel=1e-12, limit=200)[0] for a, b in zip(pts[:-1], pts[1:]))
    assert total == pytest.approx(plc.fit.saturation ** plc.relays, abs=1e-4)


def test_mimo_examples():
    rf = RfHopDistribution(18.0, 3.0, 100.0)
    assert dist.mimo_cdf(rf, 0.0) == 0.0
    assert rf.mean == pytest.approx(600.0)
    assert rf.variance == pytest.approx(18 * (100 / 3) ** 2)
    expo = RfHopDistribution(1.0, 2.0, 5.0)
    x = np.linspace(0, 20, 41)
    np.testing.assert_allclose(dist.mimo_cdf(expo, x), 1 - np.exp(-2 * x / 5), rtol=1e-13, atol=1e-16)
    np.testing.assert_allclose(dist.mimo_pdf(expo, x), 0.4 * np.exp(-0.4 * x), rtol=1e-13)
    np.testing.assert_allclose(dist.mimo_pdf(rf, x[1:]), stats.gamma.pdf(x[1:], 18, scale=100 / 3), rtol=1e-10)


def test_mimo_rejects_negative():
    rf = RfHopDistribution(18.0, 3.0, 100.0)
    for f in (dist.mimo_cdf, dist.mimo_pdf, dist.mimo_sf):
        with pytest.raises(ValueError):
            f(rf, -1.0)


def test_survival_factorisation(e2e_l1m2):
    x = probes(e2e_l1m2)
    lhs = 1.0 - dist.e2e_cdf(e2e_l1m2, x)
    rhs = (1.0 - dist.relay_cdf(e2e_l1m2.plc, x)) * (1.0 - dist.mimo_cdf(e2e_l1m2.rf, x))
    np.testing.assert_allclose(lhs, rhs, rtol=1e-12, atol=1e-15)
    exact = dist.relay_sf(e2e_l1m2.plc, x) * dist.mimo_sf(e2e_l1m2.rf, x)
    np.testing.assert_array_equal(dist.e2e_sf(e2e_l1m2, x), exact)


def test_e2e_bounds_and_monotone(e2e_l2m1):
    x = probes(e2e_l2m1)
    f = dist.e2e_cdf(e2e_l2m1, x)
    assert np.all(np.diff(f) >= 0)
    assert np.all(f >= np.maximum(dist.relay_cdf(e2e_l2m1.plc, x), dist.mimo_cdf(e2e_l2m1.rf, x)) - 1e-15)
    assert np.all(np.diff(dist.relay_cdf(e2e_l2m1.plc, x)) >= 0)
    assert np.all(np.diff(dist.mimo_cdf(e2e_l2m1.rf, x)) >= 0)


def test_e2e_identity_equal_hops():
    fit = fit_lognormal_sum(0.0, 12.0, 1)
    e2e = EndToEndDistribution(PlcHopDistribution(fit, 10.0, 1), RfHopDistribution(1.0, 1.0, 10.0))
    # find x where both hop CDFs coincide
    from scipy.optimize import brentq

    x = brentq(lambda t: dist.relay_cdf(e2e.plc, t) - dist.mimo_cdf(e2e.rf, t), 1e-3, 1e4)
    f = dist.relay_cdf(e2e.plc, x)
    assert dist.e2e_cdf(e2e, x) == pytest.approx(2 * f - f * f, rel=1e-10)


def test_e2e_near_zero(e2e_l1m2):
    assert dist.e2e_cdf(e2e_l1m2, 1e-200) == pytest.approx(0.0, abs=1e-12)
    with pytest.raises(ValueError):
        dist.e2e_cdf(e2e_l1m2, 0.0)
    with pytest.raises(ValueError):
        dist.e2e_pdf(e2e_l1m2, -1.0)


def test_e2e_degenerate_relay_reduces_to_mimo():
    fit = fit_lognormal_sum(0.0, 12.0, 1)
    e2e = EndToEndDistribution(PlcHopDistribution(fit, 1e200, 1), RfHopDistribution(18.0, 3.0, 100.0))
    x = np.linspace(100, 2000, 50)
    assert np.max(dist.relay_cdf(e2e.plc, x)) == 0.0
    np.testing.assert_allclose(dist.e2e_pdf(e2e, x), dist.mimo_pdf(e2e.rf, x), rtol=1e-14)


def test_e2e_pdf_integrates_to_cdf(e2e_l1m2):
    from scipy.optimize import brentq

    x_star = math.exp(brentq(lambda u: dist.e2e_cdf(e2e_l1m2, math.exp(u)) - 0.999, -20, 20))
    c = math.log(e2e_l1m2.plc.gbar0)
    mode = math.log(e2e_l1m2.rf.mean)
    pts = sorted({c + k for k in range(-80, 81, 4)} | {mode + k * 0.1 for k in range(-20, 21)})
    pts = [-np.inf] + [p for p in pts if p < math.log(x_star)] + [math.log(x_star)]
    total = sum(integrate.quad(lambda u: dist.e2e_pdf(e2e_l1m2, math.exp(u)) * math.exp(u), a, b,
                               epsabs=1e-15, epsrel=1e-12, limit=200)[0] for a, b in zip(pts[:-1], pts[1:]))
    assert total == pytest.approx(0.999, abs=1e-5)


@pytest.mark.parametrize("branches, relays", [(1, 1), (1, 2), (2, 2), (3, 1)])
def test_sampled_relay_matches_cdf(branches, relays):
    system = baseline_system(branches, relays)
    e2e = system_e2e(system)
    draws = sample_plc_snr(system, np.random.default_rng(11 + branches * 7 + relays), 1_000_000)
    assert ks_distance(draws, lambda x: dist.relay_cdf(e2e.plc, np.maximum(x, 1e-300))) <= 0.01


def test_sampled_mimo_and_e2e_match_cdf(e2e_l1m2):
    system = baseline_system()
    rng = np.random.default_rng(2024)
    d = sample_mimo_snr(system, rng, 1_000_000)
    assert ks_distance(d, lambda x: dist.mimo_cdf(e2e_l1m2.rf, x)) <= 0.005
    e = sample_e2e_snr(system, rng, 1_000_000)
    assert ks_distance(e, lambda x: dist.e2e_cdf(e2e_l1m2, np.maximum(x, 1e-300))) <= 0.01


def test_sampled_mimo_variance(e2e_l1m2):
    draws = sample_mimo_snr(baseline_system(), np.random.default_rng(8), 1_000_000)
    n = draws.size
    var = draws.var(ddof=1)
    # standard error of the sample variance from the fourth central moment
    m4 = np.mean((draws - draws.mean()) ** 4)
    se = math.sqrt((m4 - var**2) / n)
    assert abs(var - e2e_l1m2.rf.variance) <= 3 * se


def test_hop_validation():
    fit = fit_lognormal_sum(0.0, 12.0, 1)
    with pytest.raises(ValueError):
        PlcHopDistribution(fit, 1.0, 0)
    with pytest.raises(ValueError):
        PlcHopDistribution(fit, 0.0, 1)
    with pytest.raises(ValueError):
        RfHopDistribution(0.0, 1.0, 1.0)
