import math

import pytest
from hypothesis import given, strategies as st

from plcrf.channel import (
    LAMBDA,
    PlcLinkConfig,
    RfLinkConfig,
    db_to_linear,
    derive_scales,
    linear_to_db,
    ostbc_shape,
    plc_attenuation,
    plc_avg_snr,
    plc_noise_variance,
    power_for_tx_snr,
    rf_path_loss,
    rf_snr_scale,
)
from plcrf.errors import InvariantError

dists = st.floats(0.0, 200.0)


def test_attenuation_zero_distance():
    assert plc_attenuation(PlcLinkConfig(dist=0.0, freq=77.0, alpha1=0.3)) == 1.0


def test_attenuation_reference_values():
    expected = math.exp(-2 * (0.00933 + 0.0051 * 20**0.7) * 10)
    got = plc_attenuation(PlcLinkConfig(dist=10.0))
    assert got == pytest.approx(expected, rel=1e-15)
    assert got == pytest.approx(0.3617, abs=1e-4)


@given(dists, dists)
def test_attenuation_multiplicative(d1, d2):
    a = plc_attenuation(PlcLinkConfig(dist=d1)) * plc_attenuation(PlcLinkConfig(dist=d2))
    assert plc_attenuation(PlcLinkConfig(dist=d1 + d2)) == pytest.approx(a, rel=1e-12, abs=1e-300)


@given(st.floats(0.1, 100.0), st.floats(1.0, 100.0))
def test_attenuation_decreasing(d, f):
    base = plc_attenuation(PlcLinkConfig(dist=d, freq=f))
    assert 0 < base <= 1
    assert plc_attenuation(PlcLinkConfig(dist=d * 1.1, freq=f)) < base
    assert plc_attenuation(PlcLinkConfig(dist=d, freq=f * 1.1)) < base


def test_negative_distance_rejected():
    with pytest.raises(InvariantError) as exc:
        PlcLinkConfig(dist=-1.0)
    assert exc.value.field == "dist"


@pytest.mark.parametrize("p, expected", [(0.0, 1.0), (1.0, 11.0), (0.05, 1.5)])
def test_noise_variance(p, expected):
    assert plc_noise_variance(PlcLinkConfig(p_imp=p)) == pytest.approx(expected, rel=1e-15)


@given(st.floats(0, 1), st.floats(0, 1))
def test_noise_variance_monotone_in_p(p1, p2):
    lo, hi = sorted((p1, p2))
    assert plc_noise_variance(PlcLinkConfig(p_imp=lo)) <= plc_noise_variance(PlcLinkConfig(p_imp=hi))
    assert plc_noise_variance(PlcLinkConfig(p_imp=lo)) >= 1.0


def test_avg_snr_examples():
    var0 = plc_noise_variance(PlcLinkConfig())
    l0 = plc_attenuation(PlcLinkConfig(dist=7.0))
    assert plc_avg_snr(PlcLinkConfig(dist=7.0, power=var0 / l0)) == pytest.approx(1.0, rel=1e-14)
    g = plc_avg_snr(PlcLinkConfig(dist=10.0, power=10.0))
    assert g == pytest.approx(10 * plc_attenuation(PlcLinkConfig(dist=10.0)) / 1.5, rel=1e-15)
    assert g == pytest.approx(2.4113, abs=1e-3)
    assert plc_avg_snr(PlcLinkConfig(dist=10.0, power=100.0)) == pytest.approx(10 * g, rel=1e-14)


def test_zero_noise_rejected():
    with pytest.raises(InvariantError):
        plc_avg_snr(PlcLinkConfig(var_bg=0.0, var_imp=0.0))


def test_rf_examples():
    assert rf_path_loss(RfLinkConfig(dist=1.0, n_pl=2.8)) == 1.0
    assert rf_path_loss(RfLinkConfig(dist=2.0, n_pl=3.2)) == pytest.approx(2**-3.2, rel=1e-15)
    assert rf_path_loss(RfLinkConfig(dist=2.0, n_pl=3.2)) == pytest.approx(0.10882, abs=1e-5)
    assert ostbc_shape(RfLinkConfig()) == (18.0, 3.0)


def test_rf_zero_distance_rejected():
    with pytest.raises(InvariantError) as exc:
        RfLinkConfig(dist=0.0)
    assert exc.value.field == "dist"


@pytest.mark.parametrize("name", ["dist", "rate", "n_r", "var_noise"])
def test_rho_decreasing(name):
    base = RfLinkConfig(n_pl=2.8)
    bump = {"dist": 3.0, "rate": 0.9, "n_r": 4, "var_noise": 2.0}[name]
    assert rf_snr_scale(RfLinkConfig(**{name: bump})) < rf_snr_scale(base)


def test_derive_scales_deterministic():
    a = derive_scales(PlcLinkConfig(dist=12.5), RfLinkConfig())
    b = derive_scales(PlcLinkConfig(dist=12.5), RfLinkConfig())
    assert a == b
    assert a.shape_a == 18.0


def test_db_helpers():
    assert db_to_linear(20.0) == 100.0
    assert linear_to_db(db_to_linear(-13.0)) == pytest.approx(-13.0, abs=1e-13)
    assert LAMBDA == pytest.approx(math.log(10) / 10)
    assert power_for_tx_snr(25.0, 1.5) == pytest.approx(1.5 * 10**2.5)


@pytest.mark.parametrize("field, value", [("p_imp", 1.5), ("branches", 0), ("relays", 2.5), ("freq", 0.0),
                                          ("sigma_db", -1.0), ("power", float("nan"))])
def test_plc_invariants(field, value):
    with pytest.raises(InvariantError) as exc:
        PlcLinkConfig(**{field: value})
    assert exc.value.field == field


@pytest.mark.parametrize("field, value", [("m", 0.4), ("rate", 1.2), ("n_d", 0), ("c", 0.0), ("omega", -1.0)])
def test_rf_invariants(field, value):
    with pytest.raises(InvariantError) as exc:
        RfLinkConfig(**{field: value})
    assert exc.value.field == field
