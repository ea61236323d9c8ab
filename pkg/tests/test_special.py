import math

import mpmath as mp
import numpy as np
import pytest
from hypothesis import given, strategies as st
from scipy import integrate, special as sps

from plcrf.special import (
    MAX_HALF_RANGE_ORDER,
    SQRT_PI,
    full_hermite_rule,
    gamma_log1p_mean,
    half_range_hermite_rule,
    log_std_normal_cdf,
    meijer_ber_term,
    meijer_cap_term,
    reg_upper_gamma,
    std_normal_cdf,
    upper_gamma,
)

A_GRID = (1.0, 6.0, 18.0)
Z_GRID = (1e-3, 1e-1, 1.0, 10.0)


# -- normal CDF ---------------------------------------------------------------

def test_normal_cdf_examples():
    assert std_normal_cdf(0.0) == 0.5
    assert std_normal_cdf(1.959964) == pytest.approx(0.975, abs=1e-6)
    assert std_normal_cdf(-np.inf) == 0.0
    # independent check by integrating the density
    ref = 0.5 + integrate.quad(lambda t: math.exp(-t * t / 2) / math.sqrt(2 * math.pi), 0, 1.959964)[0]
    assert std_normal_cdf(1.959964) == pytest.approx(ref, abs=1e-12)


@given(st.floats(-30, 30))
def test_normal_cdf_symmetry(x):
    assert std_normal_cdf(-x) == pytest.approx(1 - std_normal_cdf(x), abs=1e-15)
    assert 0 <= std_normal_cdf(x) <= 1


def test_log_normal_cdf_deep_tail():
    assert log_std_normal_cdf(-40.0) == pytest.approx(float(mp.log(mp.ncdf(-40))), rel=1e-12)


# -- incomplete gamma -----------------------------------------------------------

def test_upper_gamma_identities():
    x = np.linspace(0, 30, 61)
    assert np.max(np.abs(upper_gamma(1.0, x) - np.exp(-x))) <= 1e-12
    assert reg_upper_gamma(7.5, 0.0) == 1.0
    assert upper_gamma(4.0, 0.0) == pytest.approx(6.0, rel=1e-15)


def test_reg_upper_gamma_18_18():
    ref = integrate.quad(lambda t: t**17 * math.exp(-t), 18, np.inf)[0] / math.gamma(18)
    assert reg_upper_gamma(18, 18) == pytest.approx(ref, rel=1e-10)
    assert abs(reg_upper_gamma(18, 18) - 0.4695) <= 1e-3


@given(st.floats(0.05, 50), st.floats(0, 100), st.floats(0.01, 10))
def test_upper_gamma_decreasing(s, x, dx):
    q0, q1 = reg_upper_gamma(s, x), reg_upper_gamma(s, x + dx)
    assert 0 <= q1 <= q0 <= 1


@pytest.mark.parametrize("s, x", [(0.0, 1.0), (-1.0, 1.0), (1.0, -0.5)])
def test_upper_gamma_rejects(s, x):
    with pytest.raises(ValueError):
        reg_upper_gamma(s, x)
    with pytest.raises(ValueError):
        upper_gamma(s, x)


# -- quadrature rules -----------------------------------------------------------

def _half_moment(j):
    return math.gamma((j + 1) / 2) / 2


def _full_moment(j):
    return 0.0 if j % 2 else math.gamma((j + 1) / 2)


@pytest.mark.parametrize("order", range(1, MAX_HALF_RANGE_ORDER + 1))
def test_half_range_exactness(order):
    r = half_range_hermite_rule(order)
    for j in range(2 * order):
        got = math.fsum(r.weights * r.nodes**j)
        assert got == pytest.approx(_half_moment(j), rel=1e-10)


@pytest.mark.parametrize("order", [1, 2, 5, 10, 20, 40, 64, 100])
def test_full_range_exactness(order):
    r = full_hermite_rule(order)
    for j in range(2 * order):
        got = math.fsum(r.weights * r.nodes**j)
        # odd moments vanish; compare against the even-moment scale
        scale = math.gamma((j + 1) / 2)
        assert abs(got - _full_moment(j)) <= 1e-10 * scale


def test_rule_examples():
    h = half_range_hermite_rule(30)
    assert h.integrate(np.ones_like) == pytest.approx(SQRT_PI / 2, rel=1e-14)
    assert h.integrate(lambda y: y) == pytest.approx(0.5, rel=1e-14)
    assert h.integrate(lambda y: y**2) == pytest.approx(SQRT_PI / 4, rel=1e-14)
    f = full_hermite_rule(40)
    assert f.weights.sum() == pytest.approx(SQRT_PI, rel=1e-14)
    assert f.integrate(lambda x: x) == pytest.approx(0.0, abs=1e-14)
    assert f.integrate(lambda x: x**2) == pytest.approx(SQRT_PI / 2, rel=1e-14)
    assert h.weight_integral == pytest.approx(SQRT_PI / 2)


def test_large_full_rule_trims_underflow():
    r = full_hermite_rule(4000)
    assert len(r.nodes) < 4000
    assert np.all(r.weights > 0)
    assert r.weights.sum() == pytest.approx(SQRT_PI, rel=1e-12)


@pytest.mark.parametrize("order", [0, -3, MAX_HALF_RANGE_ORDER + 1, 2.5])
def test_half_range_rejects_order(order):
    with pytest.raises(ValueError):
        half_range_hermite_rule(order)


@pytest.mark.parametrize("order", [0, 20001])
def test_full_range_rejects_order(order):
    with pytest.raises(ValueError):
        full_hermite_rule(order)


def test_rules_read_only():
    r = half_range_hermite_rule(10)
    with pytest.raises(ValueError):
        r.nodes[0] = 1.0


@pytest.mark.parametrize("a, ratio", [(18.0, 1e-2), (6.0, 0.1), (1.0, 1.0), (18.0, 0.3)])
def test_half_range_on_gamma_tail(a, ratio):
    """``int exp(-y^2) Q(A, ratio y^2) dy``: fixed rule vs adaptive quadrature."""
    r = half_range_hermite_rule(64)
    got = r.integrate(lambda y: sps.gammaincc(a, ratio * y**2))
    ref = integrate.quad(lambda y: math.exp(-y * y) * sps.gammaincc(a, ratio * y * y), 0, np.inf,
                         epsabs=0, epsrel=1e-13, limit=200)[0]
    assert got == pytest.approx(ref, rel=1e-6)


# -- Meijer-G instances -----------------------------------------------------------

@pytest.mark.parametrize("a", A_GRID)
@pytest.mark.parametrize("z", Z_GRID)
@pytest.mark.parametrize("p", [0.5, 1.0])
def test_meijer_ber_vs_mpmath(p, a, z):
    ref = float(mp.meijerg([[1 - p], [1]], [[0, a], []], z))
    assert meijer_ber_term(p, a, z) == pytest.approx(ref, rel=1e-8)


@pytest.mark.parametrize("a", A_GRID)
@pytest.mark.parametrize("z", Z_GRID)
def test_meijer_cap_vs_mpmath(a, z):
    with mp.workdps(30):
        ref = float(mp.meijerg([[-a], [1 - a]], [[0, -a, -a], []], z))
    assert meijer_cap_term(a, z) == pytest.approx(ref, rel=1e-8)


def test_meijer_ber_matches_pe2_integral():
    p, q, a, ratio = 0.5, 1.0, 18.0, 1e-2
    direct = integrate.quad(lambda x: x ** (p - 1) * math.exp(-q * x) * sps.gammaincc(a, ratio * x),
                            0, np.inf, epsabs=0, epsrel=1e-12, limit=400, points=None)[0]
    got = meijer_ber_term(p, a, ratio / q) / (q**p * math.gamma(a))
    assert got == pytest.approx(direct, rel=1e-8)


@pytest.mark.filterwarnings("ignore::scipy.integrate.IntegrationWarning")
def test_meijer_ber_limits():
    p, a = 0.5, 6.0
    assert meijer_ber_term(p, a, 1e-9) == pytest.approx(math.gamma(p) * math.gamma(a), rel=1e-6)
    # decays like z^-p: only x below ~A/z keeps Q near one
    vals = [meijer_ber_term(p, a, z) for z in (1e2, 1e4, 1e6, 1e8)]
    assert np.all(np.diff(vals) < 0)
    assert vals[-1] / (math.gamma(p) * math.gamma(a)) < 1e-3


def test_cap_term_exponential_case():
    # A = 1, rho/alpha = 1: E[ln(1+X)] = e E1(1)
    expected = math.e * sps.exp1(1.0)
    assert gamma_log1p_mean(1.0, 1.0) == pytest.approx(expected, rel=1e-12)
    assert gamma_log1p_mean(1.0, 1.0) == pytest.approx(0.596347, abs=1e-6)
    assert meijer_cap_term(1.0, 1.0) == pytest.approx(expected, rel=1e-10)


@pytest.mark.parametrize("a", A_GRID)
def test_cap_term_matches_gamma_expectation(a):
    for z in Z_GRID:
        c1 = gamma_log1p_mean(a, 1.0 / z)
        via_g = math.exp(a * math.log(z) - sps.gammaln(a)) * meijer_cap_term(a, z)
        assert via_g == pytest.approx(c1, rel=1e-8)


def test_cap_term_limits_and_monotone():
    assert gamma_log1p_mean(6.0, 1e-9) < 1e-7
    vals = [gamma_log1p_mean(18.0, s) for s in np.geomspace(1e-3, 1e3, 25)]
    assert np.all(np.diff(vals) > 0)


@pytest.mark.parametrize("args", [(0.0, 1.0, 1.0), (0.5, -1.0, 1.0), (0.5, 1.0, 0.0), (0.5, 1.0, np.inf)])
def test_meijer_ber_rejects(args):
    with pytest.raises(ValueError):
        meijer_ber_term(*args)


@pytest.mark.parametrize("args", [(0.0, 1.0), (1.0, 0.0), (np.nan, 1.0)])
def test_meijer_cap_rejects(args):
    with pytest.raises(ValueError):
        meijer_cap_term(*args)
