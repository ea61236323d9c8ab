"""Link configurations and the scalar channel quantities derived from them.

Units: PLC carrier frequency in MHz, cable and RF distances in metres,
powers in watts.  All dB values go through :func:`db_to_linear`.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, fields

from plcrf.errors import InvariantError

LAMBDA = math.log(10.0) / 10.0


def db_to_linear(x_db):
    """Power-ratio dB to linear, ``10 ** (x_db / 10)``."""
    return 10.0 ** (x_db / 10.0)


def linear_to_db(x):
    return 10.0 * math.log10(x)


def _require(cond: bool, field: str, message: str) -> None:
    if not cond:
        raise InvariantError(field, message)


def _finite(obj) -> None:
    for f in fields(obj):
        v = getattr(obj, f.name)
        if isinstance(v, bool) or not isinstance(v, (int, float)):
            raise InvariantError(f.name, f"expected a number, got {type(v).__name__}")
        _require(math.isfinite(v), f.name, f"must be finite, got {v}")


@dataclass(frozen=True)
class PlcLinkConfig:
    """Physical parameters of the multiwire PLC hop (base node to relays).

    ``freq`` is in MHz, ``dist`` in metres; ``mu_db`` and ``sigma_db`` are the
    log-normal gain moments in dB, converted with ``LAMBDA = ln(10)/10``.
    """

    alpha1: float = 0.00933
    alpha2: float = 0.0051
    k: float = 0.7
    freq: float = 20.0
    dist: float = 0.0
    mu_db: float = 0.0
    sigma_db: float = 12.0
    p_imp: float = 0.05
    var_bg: float = 1.0
    var_imp: float = 10.0
    branches: int = 1
    relays: int = 1
    power: float = 1.0

    def __post_init__(self):
        _finite(self)
        for name in ("alpha1", "alpha2", "k", "var_bg", "var_imp", "power", "sigma_db"):
            _require(getattr(self, name) >= 0, name, f"must be >= 0, got {getattr(self, name)}")
        _require(self.dist >= 0, "dist", f"cable length must be >= 0, got {self.dist}")
        _require(self.freq > 0, "freq", f"must be > 0, got {self.freq}")
        _require(0.0 <= self.p_imp <= 1.0, "p_imp", f"must lie in [0, 1], got {self.p_imp}")
        for name in ("branches", "relays"):
            v = getattr(self, name)
            _require(float(v).is_integer() and v >= 1, name, f"must be an integer >= 1, got {v}")


@dataclass(frozen=True)
class RfLinkConfig:
    """Parameters of the MIMO-OSTBC hop over Nakagami-m fading."""

    m: float = 3.0
    omega: float = 1.0
    n_r: int = 3
    n_d: int = 2
    rate: float = 0.85
    c: float = 1.0
    n_pl: float = 2.8
    dist: float = 2.0
    power: float = 1.0
    var_noise: float = 1.0

    def __post_init__(self):
        _finite(self)
        _require(self.m >= 0.5, "m", f"Nakagami shape must be >= 0.5, got {self.m}")
        _require(self.omega > 0, "omega", f"must be > 0, got {self.omega}")
        for name in ("n_r", "n_d"):
            v = getattr(self, name)
            _require(float(v).is_integer() and v >= 1, name, f"must be an integer >= 1, got {v}")
        _require(0 < self.rate <= 1, "rate", f"OSTBC rate must lie in (0, 1], got {self.rate}")
        _require(self.dist > 0, "dist", f"RF distance must be > 0, got {self.dist}")
        _require(self.c > 0, "c", f"must be > 0, got {self.c}")
        _require(self.n_pl >= 0, "n_pl", f"must be >= 0, got {self.n_pl}")
        _require(self.power >= 0, "power", f"must be >= 0, got {self.power}")
        _require(self.var_noise > 0, "var_noise", f"must be > 0, got {self.var_noise}")


@dataclass(frozen=True)
class DerivedScales:
    l0: float
    var0: float
    gbar0: float
    l1: float
    rho: float
    shape_a: float
    alpha_g: float


def plc_attenuation(cfg: PlcLinkConfig) -> float:
    """Cable attenuation ``exp(-2 (alpha1 + alpha2 f^k) d)``."""
    if cfg.dist < 0:
        raise InvariantError("dist", "cable length must be >= 0")
    return math.exp(-2.0 * (cfg.alpha1 + cfg.alpha2 * cfg.freq**cfg.k) * cfg.dist)


def plc_noise_variance(cfg: PlcLinkConfig) -> float:
    """Bernoulli-Gaussian noise power ``(1-p) s_g^2 + p (s_g^2 + s_i^2)``."""
    return (1.0 - cfg.p_imp) * cfg.var_bg + cfg.p_imp * (cfg.var_bg + cfg.var_imp)


def plc_avg_snr(cfg: PlcLinkConfig) -> float:
    var0 = plc_noise_variance(cfg)
    if var0 <= 0:
        raise InvariantError("var_bg", "total PLC noise variance must be > 0")
    return cfg.power * plc_attenuation(cfg) / var0


def rf_path_loss(cfg: RfLinkConfig) -> float:
    if cfg.dist <= 0:
        raise InvariantError("dist", "RF distance must be > 0")
    return cfg.c / cfg.dist**cfg.n_pl


def rf_snr_scale(cfg: RfLinkConfig) -> float:
    """``rho = P1 L1 / (R_c N_R s_1^2)``."""
    return cfg.power * rf_path_loss(cfg) / (cfg.rate * cfg.n_r * cfg.var_noise)


def ostbc_shape(cfg: RfLinkConfig) -> tuple[float, float]:
    """``(A, alpha) = (m N_R N_D, m / Omega)``."""
    return cfg.m * cfg.n_r * cfg.n_d, cfg.m / cfg.omega


def derive_scales(plc: PlcLinkConfig, rf: RfLinkConfig) -> DerivedScales:
    shape_a, alpha_g = ostbc_shape(rf)
    return DerivedScales(
        l0=plc_attenuation(plc),
        var0=plc_noise_variance(plc),
        gbar0=plc_avg_snr(plc),
        l1=rf_path_loss(rf),
        rho=rf_snr_scale(rf),
        shape_a=shape_a,
        alpha_g=alpha_g,
    )


def power_for_tx_snr(tx_snr_db: float, noise_var: float) -> float:
    """Transmit power giving ``P / noise_var`` equal to ``tx_snr_db`` before attenuation."""
    return db_to_linear(tx_snr_db) * noise_var
