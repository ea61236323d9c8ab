import math

import numpy as np
import pytest
from scipy import stats

from _oracles import exact_single_cdf, ks_distance
from conftest import baseline_system
from plcrf.channel import LAMBDA
from plcrf.metrics import MetricQuery, average_ber, conditional_ber, modulation
from plcrf.montecarlo import (
    BLOCK_SIZE,
    MIN_EVENTS,
    SimPlan,
    block_rng,
    mc_ber,
    mc_bitflip_ber_bpsk,
    mc_capacity,
    mc_outage,
    mc_wireless_only_outage,
    sample_mimo_snr,
    sample_plc_snr,
    simulate_mean,
)
from plcrf.system import System, system_e2e

BPSK = modulation("BPSK")


def test_plan_validation():
    for kw in (dict(trials=999), dict(trials=2500.5), dict(workers=0), dict(confidence=1.0), dict(seed=-1),
               dict(seed=2**64)):
        with pytest.raises(ValueError):
            SimPlan(**kw)
    assert SimPlan().confidence == 0.99


def test_block_streams_independent_of_order():
    a = block_rng(5, 3).standard_normal(4)
    block_rng(5, 2).standard_normal(100)
    assert np.array_equal(a, block_rng(5, 3).standard_normal(4))
    assert not np.array_equal(a, block_rng(5, 4).standard_normal(4))
    assert not np.array_equal(a, block_rng(6, 3).standard_normal(4))


@pytest.mark.parametrize("fn", ["outage", "ber", "capacity"])
def test_worker_invariance(fn):
    system = baseline_system()
    trials = 3 * BLOCK_SIZE + 123
    out = []
    for workers in (1, 2, 5):
        plan = SimPlan(trials=trials, seed=77, workers=workers)
        est = {"outage": lambda: mc_outage(plan, system, 2.0),
               "ber": lambda: mc_ber(plan, system, BPSK),
               "capacity": lambda: mc_capacity(plan, system)}[fn]()
        out.append((est.mean, est.half_width, est.trials))
    assert out[0] == out[1] == out[2]
    assert out[0][2] == trials


def test_plc_single_branch_matches_exact():
    system = baseline_system(1, 1, gbar0_db=10.0)
    draws = sample_plc_snr(system, np.random.default_rng(1), 1_000_000)
    assert np.all(draws > 0)
    assert ks_distance(draws, lambda x: exact_single_cdf(x, 10.0, 0.0, 12.0)) <= 0.005


@pytest.mark.parametrize("branches", [1, 2, 4])
def test_plc_sample_mean_moment(branches):
    # sigma = 12 dB gives a log-variance too large for a 1e6-draw mean check; use 3 dB
    sigma_db, mu_db, gbar0 = 3.0, 1.0, 2.0
    system = System(gbar0=gbar0).with_(**{"plc.branches": branches, "plc.relays": 1,
                                          "plc.sigma_db": sigma_db, "plc.mu_db": mu_db})
    draws = sample_plc_snr(system, np.random.default_rng(branches), 1_000_000)
    mu, sigma = LAMBDA * mu_db, LAMBDA * sigma_db
    expected = branches * gbar0 * math.exp(2 * mu + 2 * sigma**2)
    se = draws.std(ddof=1) / math.sqrt(draws.size)
    assert abs(draws.mean() - expected) <= 3 * se


def test_plc_selection_dominates():
    s1, s2 = baseline_system(1, 1), baseline_system(1, 2)
    rng = np.random.default_rng(3)
    d1 = np.sort(sample_plc_snr(s1, rng, 200_000))
    d2 = np.sort(sample_plc_snr(s2, rng, 200_000))
    grid = np.logspace(-3, 4, 60)
    f1 = np.searchsorted(d1, grid) / d1.size
    f2 = np.searchsorted(d2, grid) / d2.size
    assert np.all(f2 <= f1 + 0.003)


def test_mimo_sample_mean():
    system = baseline_system()
    e2e = system_e2e(system)
    draws = sample_mimo_snr(system, np.random.default_rng(4), 1_000_000)
    se = draws.std(ddof=1) / math.sqrt(draws.size)
    assert abs(draws.mean() - e2e.rf.mean) <= 3 * se
    assert e2e.rf.mean == pytest.approx(18 * 100 / 3)


def test_mimo_rayleigh_case():
    system = baseline_system().with_(**{"rf.m": 1.0, "rf.n_r": 1, "rf.n_d": 1, "rf.omega": 2.0})
    rho = system.scales().rho
    draws = sample_mimo_snr(system, np.random.default_rng(5), 500_000)
    assert ks_distance(draws, stats.expon(scale=2.0 * rho).cdf) <= 0.005


def test_scalar_draws():
    rng = np.random.default_rng(0)
    assert isinstance(sample_plc_snr(baseline_system(), rng), float)
    assert isinstance(sample_mimo_snr(baseline_system(), rng), float)


def test_outage_below_support():
    plan = SimPlan(trials=100_000, seed=1)
    est = mc_outage(plan, baseline_system(), 1e-12)
    assert est.mean == 0.0 and est.events == 0 and est.insufficient
    # one-sided Clopper-Pearson bound for zero events: 1 - (1 - c)^(1/n)
    assert est.half_width == pytest.approx(1 - 0.01 ** (1 / plan.trials), rel=1e-6)


def test_few_events_flagged():
    plan = SimPlan(trials=10_000, seed=1)
    assert not mc_outage(plan, baseline_system(), 50.0).insufficient


def test_point_mass_stub_is_exact():
    plan = SimPlan(trials=5000, seed=2, workers=3)
    g_star = 1.7
    stub = lambda rng, n: np.full(n, g_star)  # noqa: E731
    ber = mc_ber(plan, baseline_system(), BPSK, sampler=stub)
    assert ber.mean == conditional_ber(BPSK, g_star)
    assert ber.half_width == 0.0
    cap = mc_capacity(plan, baseline_system(), sampler=stub)
    assert cap.mean == float(np.log1p(g_star))


def test_half_width_clt_scaling():
    system = baseline_system()
    ratios = []
    for rep in range(20):
        a = mc_capacity(SimPlan(trials=5_000, seed=rep), system)
        b = mc_capacity(SimPlan(trials=20_000, seed=1000 + rep), system)
        ratios.append(b.half_width / a.half_width)
    assert abs(np.mean(ratios) - 0.5) <= 0.05


def test_half_width_nonnegative_and_confidence():
    system = baseline_system()
    lo = mc_capacity(SimPlan(trials=10_000, seed=3, confidence=0.9), system)
    hi = mc_capacity(SimPlan(trials=10_000, seed=3, confidence=0.999), system)
    assert 0 <= lo.half_width < hi.half_width
    assert lo.mean == hi.mean


def test_smooth_ber_matches_bitflip():
    system = baseline_system(gbar0_db=5.0, rho_db=5.0)
    plan = SimPlan(trials=1_000_000, seed=12)
    smooth = mc_ber(plan, system, BPSK)
    flips = mc_bitflip_ber_bpsk(plan, system)
    assert smooth.std_error < flips.std_error
    combined = math.hypot(smooth.std_error, flips.std_error)
    assert abs(smooth.mean - flips.mean) <= 3 * combined


def test_wireless_only_matches_cdf():
    system = baseline_system().with_(rho=None).with_(**{"rf.dist": 20.0, "rf.n_pl": 3.2, "rf.power": 300.0})
    from plcrf.system import rf_hop
    from plcrf.metrics import wireless_only_outage

    g = 0.02
    exact = wireless_only_outage(rf_hop(system), g)
    est = mc_wireless_only_outage(SimPlan(trials=200_000, seed=9), system, g)
    assert est.events >= MIN_EVENTS
    assert abs(est.mean - exact) <= 3 * est.std_error


def test_mc_ber_near_closed_form():
    system = baseline_system()
    plan = SimPlan(trials=200_000, seed=21)
    est = mc_ber(plan, system, BPSK)
    ref = average_ber(MetricQuery(system_e2e(system)), check=False).value
    assert abs(est.mean - ref) <= 3 * est.std_error


def test_simulate_mean_exact_for_constants():
    plan = SimPlan(trials=BLOCK_SIZE * 2 + 7, seed=0, workers=2)
    n, mean, m2 = simulate_mean(plan, lambda rng, k: np.full(k, 0.1), lambda v: v)
    assert (n, mean, m2) == (plan.trials, 0.1, 0.0)
