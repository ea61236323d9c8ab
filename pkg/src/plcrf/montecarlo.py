"""Monte-Carlo oracle for the cascaded link.

Simulates the physical model directly: MRC over ``L`` log-normal branches,
best of ``M`` relays, Nakagami-m MIMO Frobenius-norm SNR, and the DF minimum.
It never touches the log-normal-sum approximation.

Random streams are keyed by ``(seed, block index)`` where a block is a fixed
run of consecutive trial indices, so estimates do not depend on how many
workers process the blocks.  Block statistics are merged in block order.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Callable

import numpy as np
from scipy import special, stats

from plcrf.channel import LAMBDA
from plcrf.metrics import Modulation, conditional_ber
from plcrf.system import System

MIN_TRIALS = 1000
MIN_EVENTS = 10
BLOCK_SIZE = 1 << 16


@dataclass(frozen=True)
class SimPlan:
    trials: int = 1_000_000
    seed: int = 0
    workers: int = 1
    confidence: float = 0.99

    def __post_init__(self):
        if not (float(self.trials).is_integer() and self.trials >= MIN_TRIALS):
            raise ValueError(f"trials must be an integer >= {MIN_TRIALS}, got {self.trials}")
        if not (float(self.workers).is_integer() and self.workers >= 1):
            raise ValueError(f"workers must be an integer >= 1, got {self.workers}")
        if not 0 < self.confidence < 1:
            raise ValueError(f"confidence must lie in (0, 1), got {self.confidence}")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class SimEstimate:
    mean: float
    half_width: float
    trials: int
    std_error: float
    events: int | None = None

    @property
    def insufficient(self) -> bool:
        """Fewer than ``MIN_EVENTS`` events behind a proportion estimate."""
        return self.events is not None and self.events < MIN_EVENTS


def block_rng(seed: int, block: int) -> np.random.Generator:
    return np.random.Generator(np.random.Philox(np.random.SeedSequence(seed, spawn_key=(block,))))


def sample_plc_snr(system: System, rng: np.random.Generator, size: int | None = None):
    """Selected-relay SNR: max over M relays of ``sum_l gbar0 h_l^2``."""
    plc = system.plc
    gbar0 = system.scales().gbar0
    n = 1 if size is None else size
    shape = (n, int(plc.relays), int(plc.branches))
    ln_h = LAMBDA * plc.mu_db + LAMBDA * plc.sigma_db * rng.standard_normal(shape)
    snr = gbar0 * np.exp(2.0 * ln_h).sum(axis=2).max(axis=1)
    return float(snr[0]) if size is None else snr


def sample_mimo_snr(system: System, rng: np.random.Generator, size: int | None = None):
    """OSTBC SNR ``rho * ||H||_F^2`` with Nakagami-m entries (Gamma(m, Omega/m) powers)."""
    rf = system.rf
    rho = system.scales().rho
    n = 1 if size is None else size
    gains = rng.gamma(rf.m, rf.omega / rf.m, size=(n, int(rf.n_r) * int(rf.n_d)))
    snr = rho * gains.sum(axis=1)
    return float(snr[0]) if size is None else snr


def sample_e2e_snr(system: System, rng: np.random.Generator, size: int) -> np.ndarray:
    """``min(gamma_R, gamma_D)`` for decode-and-forward."""
    g_r = sample_plc_snr(system, rng, size)
    g_d = sample_mimo_snr(system, rng, size)
    return np.minimum(g_r, g_d)


Sampler = Callable[[np.random.Generator, int], np.ndarray]


def _block_stats(values: np.ndarray) -> tuple[int, float, float]:
    # shifted sums: exact for constant samples, better conditioned otherwise
    shift = float(values[0])
    d = values - shift
    n = d.size
    mean_d = float(d.mean())
    m2 = float(((d - mean_d) ** 2).sum())
    return n, shift + mean_d, m2


def _merge(a, b):
    n_a, mean_a, m2_a = a
    n_b, mean_b, m2_b = b
    n = n_a + n_b
    delta = mean_b - mean_a
    return n, mean_a + delta * (n_b / n), m2_a + m2_b + delta * delta * n_a * n_b / n


def _blocks(trials: int):
    return [(b, min(BLOCK_SIZE, trials - b * BLOCK_SIZE)) for b in range(math.ceil(trials / BLOCK_SIZE))]


def simulate_mean(plan: SimPlan, sampler: Sampler, statistic: Callable[[np.ndarray], np.ndarray]):
    """Block-parallel mean of ``statistic(sampler(rng, n))`` over ``plan.trials`` draws.

    Returns ``(trials, mean, sum of squared deviations)``.
    """

    def run(block):
        index, size = block
        return _block_stats(np.asarray(statistic(sampler(block_rng(plan.seed, index), size)), dtype=float))

    blocks = _blocks(plan.trials)
    if plan.workers == 1:
        parts = [run(b) for b in blocks]
    else:
        with ThreadPoolExecutor(max_workers=plan.workers) as pool:
            parts = list(pool.map(run, blocks))
    acc = parts[0]
    for part in parts[1:]:
        acc = _merge(acc, part)
    return acc


def _z(confidence: float) -> float:
    return float(special.ndtri(0.5 + confidence / 2.0))


def _mean_estimate(plan: SimPlan, acc) -> SimEstimate:
    n, mean, m2 = acc
    se = math.sqrt(m2 / (n - 1) / n)
    return SimEstimate(mean, _z(plan.confidence) * se, n, se)


def _proportion_estimate(plan: SimPlan, acc) -> SimEstimate:
    n, mean, _ = acc
    events = int(round(mean * n))
    se = math.sqrt(max(mean * (1.0 - mean), 0.0) / n)
    half = _z(plan.confidence) * se
    if events < MIN_EVENTS:
        # one-sided Clopper-Pearson upper limit in place of the normal interval
        upper = float(stats.beta.ppf(plan.confidence, events + 1, n - events))
        half = max(half, upper - mean)
    return SimEstimate(mean, half, n, se, events)


def _default_sampler(system: System) -> Sampler:
    return lambda rng, n: sample_e2e_snr(system, rng, n)


def mc_outage(plan: SimPlan, system: System, gamma_th: float, sampler: Sampler | None = None) -> SimEstimate:
    sampler = sampler or _default_sampler(system)
    acc = simulate_mean(plan, sampler, lambda g: (g < gamma_th).astype(float))
    return _proportion_estimate(plan, acc)


def mc_ber(plan: SimPlan, system: System, mod: Modulation, sampler: Sampler | None = None) -> SimEstimate:
    """Mean conditional BER ``Gamma(p, q g) / (2 Gamma(p))`` over simulated SNRs."""
    sampler = sampler or _default_sampler(system)
    return _mean_estimate(plan, simulate_mean(plan, sampler, lambda g: conditional_ber(mod, g)))


def mc_capacity(plan: SimPlan, system: System, sampler: Sampler | None = None) -> SimEstimate:
    sampler = sampler or _default_sampler(system)
    return _mean_estimate(plan, simulate_mean(plan, sampler, np.log1p))


def mc_wireless_only_outage(plan: SimPlan, system: System, gamma_th: float) -> SimEstimate:
    """Outage of the RF hop alone (the system's RF config spans the direct path)."""
    acc = simulate_mean(plan, lambda rng, n: sample_mimo_snr(system, rng, n), lambda g: (g < gamma_th).astype(float))
    return _proportion_estimate(plan, acc)


def mc_bitflip_ber_bpsk(plan: SimPlan, system: System) -> SimEstimate:
    """BPSK bit-error simulation over the same SNR draws (variance check only)."""

    def sampler(rng, n):
        snr = sample_e2e_snr(system, rng, n)
        # +1 sent; error when sqrt(2 snr) + N(0,1) < 0
        return (np.sqrt(2.0 * snr) + rng.standard_normal(n) < 0).astype(float)

    return _proportion_estimate(plan, simulate_mean(plan, sampler, lambda v: v))
