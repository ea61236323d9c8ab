"""Special functions and quadrature rules used by the closed-form metrics.

Gaussian CDF and incomplete-gamma kernels are thin wrappers over
:mod:`scipy.special`.  The two Meijer G instances needed by the BER and
capacity expressions are evaluated through their defining real integrals with
adaptive Gauss-Kronrod quadrature rather than a general contour evaluator.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np
from scipy import integrate, special, stats

from plcrf._halfrange_table import RULES as _HALF_RANGE_RULES

SQRT_PI = math.sqrt(math.pi)

MAX_HALF_RANGE_ORDER = max(_HALF_RANGE_RULES)
MAX_FULL_RANGE_ORDER = 20000

_QUAD_OPTS = dict(epsabs=0.0, epsrel=1e-12, limit=400)


def std_normal_cdf(x):
    """Standard normal CDF, vectorised."""
    return special.ndtr(x)


def log_std_normal_cdf(x):
    """``log(Phi(x))`` without underflow in the lower tail."""
    return special.log_ndtr(x)


def upper_gamma(s, x):
    """Upper incomplete gamma function ``Gamma(s, x)`` (unregularised)."""
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0):
        raise ValueError("shape s must be positive")
    if np.any(np.asarray(x) < 0):
        raise ValueError("x must be non-negative")
    return special.gammaincc(s, x) * special.gamma(s)


def reg_upper_gamma(s, x):
    """Regularised upper incomplete gamma ``Gamma(s, x) / Gamma(s)``."""
    s = np.asarray(s, dtype=float)
    if np.any(s <= 0):
        raise ValueError("shape s must be positive")
    if np.any(np.asarray(x) < 0):
        raise ValueError("x must be non-negative")
    return special.gammaincc(s, x)


@dataclass(frozen=True)
class QuadratureRule:
    """Gaussian rule for ``exp(-x**2)`` on the full line or on ``[0, inf)``.

    For large full-range orders the outermost weights underflow to zero and
    are dropped, so ``len(nodes)`` can be smaller than ``order``.
    """

    kind: str
    order: int
    nodes: np.ndarray
    weights: np.ndarray

    def integrate(self, f) -> float:
        """``sum(w_i * f(x_i))``, approximating the weighted integral of ``f``."""
        return float(np.dot(self.weights, f(self.nodes)))

    @property
    def weight_integral(self) -> float:
        return SQRT_PI if self.kind == "full_hermite" else SQRT_PI / 2


def _readonly(a) -> np.ndarray:
    a = np.array(a, dtype=float)
    a.setflags(write=False)
    return a


@lru_cache(maxsize=None)
def half_range_hermite_rule(order: int) -> QuadratureRule:
    """Half-range rule: ``int_0^inf exp(-y^2) f(y) dy ~ sum w_i f(y_i)``."""
    if not isinstance(order, (int, np.integer)) or not 1 <= order <= MAX_HALF_RANGE_ORDER:
        raise ValueError(f"half-range order must be an integer in [1, {MAX_HALF_RANGE_ORDER}], got {order!r}")
    nodes, weights = _HALF_RANGE_RULES[int(order)]
    return QuadratureRule("half_range_hermite", int(order), _readonly(nodes), _readonly(weights))


@lru_cache(maxsize=None)
def full_hermite_rule(order: int) -> QuadratureRule:
    """Physicists' Gauss-Hermite rule on the real line."""
    if not isinstance(order, (int, np.integer)) or not 1 <= order <= MAX_FULL_RANGE_ORDER:
        raise ValueError(f"full-range order must be an integer in [1, {MAX_FULL_RANGE_ORDER}], got {order!r}")
    nodes, weights = special.roots_hermite(int(order))
    keep = weights > 0
    return QuadratureRule("full_hermite", int(order), _readonly(nodes[keep]), _readonly(weights[keep]))


def _quad_split(f, breaks, **opts) -> float:
    """Adaptive quadrature over consecutive intervals of ``breaks`` (last may be inf)."""
    kw = dict(_QUAD_OPTS)
    kw.update(opts)
    total = 0.0
    for lo, hi in zip(breaks[:-1], breaks[1:]):
        if hi > lo:
            total += integrate.quad(f, lo, hi, **kw)[0]
    return total


def _gamma_breaks(shape: float, scale: float = 1.0) -> list[float]:
    """Breakpoints bracketing the bulk of a Gamma(shape, scale) density."""
    probs = [1e-14, 1e-8, 1e-4, 0.01, 0.1, 0.5, 0.9, 0.99, 1 - 1e-4, 1 - 1e-8, 1 - 1e-14]
    q = stats.gamma.ppf(probs, shape) * scale
    pts = sorted({0.0, *(float(v) for v in q if v > 0)})
    return pts + [math.inf]


def meijer_ber_term(p: float, shape_a: float, z: float) -> float:
    """``G^{2,1}_{2,2}(z | 1-p, 1; 0, A)``.

    Evaluated as ``Gamma(A) * int_0^inf t^(p-1) e^(-t) Q(A, z t) dt`` with
    ``Q`` the regularised upper incomplete gamma.  With ``z = alpha/(q rho)``
    this is ``q^p Gamma(A)`` times the BER integral term ``P_e2``.
    """
    if not (p > 0 and shape_a > 0 and z > 0):
        raise ValueError(f"meijer_ber_term requires p, A, z > 0 (got p={p}, A={shape_a}, z={z})")
    if not all(map(math.isfinite, (p, shape_a, z))):
        raise ValueError("meijer_ber_term parameters must be finite")

    def tail(t):
        return math.exp(-t) * special.gammaincc(shape_a, z * t)

    # t^(p-1) is handled as an algebraic end-point weight on [0, 1].
    head = integrate.quad(tail, 0.0, 1.0, weight="alg", wvar=(p - 1.0, 0.0), epsabs=0.0, epsrel=1e-13)[0]
    # Q(A, z t) drops from 1 to 0 around t = A/z; e^-t dies past ~750.
    centre = shape_a / z
    width = 8.0 * math.sqrt(shape_a) / z
    breaks = sorted({1.0, *(v for v in (centre - width, centre, centre + width) if 1.0 < v < 800.0), 800.0})

    def body(t):
        return t ** (p - 1.0) * tail(t)

    rest = _quad_split(body, breaks + [math.inf])
    return math.exp(special.gammaln(shape_a)) * (head + rest)


def gamma_log1p_mean(shape: float, scale: float) -> float:
    """``E[ln(1 + X)]`` for ``X ~ Gamma(shape, scale)``.

    This is the capacity of a Gamma-distributed SNR in nats/s/Hz.
    """
    if not (shape > 0 and scale > 0):
        raise ValueError("shape and scale must be positive")
    log_norm = -special.gammaln(shape)

    def f(t):
        if t <= 0.0:
            return 0.0
        return math.log1p(scale * t) * math.exp((shape - 1.0) * math.log(t) - t + log_norm)

    return _quad_split(f, _gamma_breaks(shape))


def meijer_cap_term(shape_a: float, z: float) -> float:
    """``G^{3,1}_{2,3}(z | -A, 1-A; 0, -A, -A)``.

    Evaluated as ``int_0^inf ln(1+x) x^(A-1) e^(-z x) dx`` in the log-variable
    ``x = e^u``; ``z = alpha/rho`` makes ``z^A / Gamma(A)`` times this the
    mean log-capacity of the Gamma SNR.  May overflow for very large ``A``
    combined with tiny ``z``.
    """
    if not (shape_a > 0 and z > 0):
        raise ValueError(f"meijer_cap_term requires A, z > 0 (got A={shape_a}, z={z})")
    if not (math.isfinite(shape_a) and math.isfinite(z)):
        raise ValueError("meijer_cap_term parameters must be finite")
    # Rescale by the peak of x^A e^{-z x} to keep the integrand O(1).
    u_peak = math.log(shape_a / z)
    log_peak = shape_a * u_peak - shape_a

    def f(u):
        x = math.exp(u)
        return math.log1p(x) * math.exp(shape_a * u - z * x - log_peak)

    # In u the integrand is a Gumbel-like bump of width ~ 1/sqrt(A) at u_peak
    # with a slow left tail e^{(A+1)u} and a doubly exponential right tail.
    w = 1.0 / math.sqrt(shape_a)
    lo = u_peak - 40.0 / shape_a - 40.0 * w - 40.0
    breaks = [u_peak + k * w for k in (-30, -10, -4, -1, 0, 1, 4, 10)]
    breaks = [-math.inf, lo] + [b for b in breaks if b > lo] + [u_peak + 4.0 + 10.0 * w, math.inf]
    return math.exp(log_peak) * _quad_split(f, breaks)
