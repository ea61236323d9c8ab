"""Parameter sweeps comparing closed forms with simulation, and CSV output.

A sweep evaluates every (variant, grid value) pair.  Points run on a thread
pool but results are assembled in (variant, grid index) order, and every
Monte-Carlo estimate uses the same plan seed, so the output does not depend on
the worker count.  Using one seed for all points also gives common random
numbers across a curve.
"""

from __future__ import annotations

import csv
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field, replace

import numpy as np

from plcrf.channel import db_to_linear, power_for_tx_snr, plc_noise_variance
from plcrf.errors import InvariantError, SchemaError
from plcrf.lnsum import DEFAULT_FIT_SAMPLES, DEFAULT_FIT_SEED
from plcrf.metrics import (
    DEFAULT_FULL_RANGE_ORDER,
    DEFAULT_HALF_RANGE_ORDER,
    MetricQuery,
    Modulation,
    average_ber,
    average_capacity,
    modulation,
    outage_probability,
    wireless_only_outage,
)
from plcrf.montecarlo import SimPlan, mc_ber, mc_capacity, mc_outage, mc_wireless_only_outage
from plcrf.system import System, rf_hop, system_e2e

SCENARIO_METRIC = {
    "outage_vs_distance": "outage",
    "ber_vs_snr": "ber",
    "capacity_vs_snr": "capacity",
}
METRICS = ("outage", "ber", "capacity")
DEFAULT_SWEEP_VARIABLE = {
    "outage_vs_distance": "plc.dist",
    "ber_vs_snr": "gbar0_db",
    "capacity_vs_snr": "gbar0_db",
}
# variables given in dB may be negative; everything else is a physical magnitude
DB_VARIABLES = ("gbar0_db", "rho_db", "gamma_th_db", "tx_snr_db", "plc.mu_db")

COMPONENT_COLUMNS = {
    "outage": ("gbar0", "rho", "gamma_th", "f_relay", "f_mimo"),
    "ber": ("gbar0", "rho", "pe1", "pe2", "pe3", "pe3_adaptive"),
    "capacity": ("gbar0", "rho", "c1", "c2", "c3", "guarded_nodes"),
}
CSV_HEADER = ("variant", "variable", "analytic", "mc_mean", "mc_halfwidth")


class ExperimentError(RuntimeError):
    """A metric or simulation failed at a specific grid point."""


@dataclass(frozen=True)
class AnalysisOptions:
    gamma_th_db: float = 0.0
    modulation: Modulation = modulation("BPSK")
    half_range_order: int = DEFAULT_HALF_RANGE_ORDER
    full_range_order: int = DEFAULT_FULL_RANGE_ORDER
    fit_seed: int = DEFAULT_FIT_SEED
    fit_samples: int = DEFAULT_FIT_SAMPLES
    capacity_unit: str = "nats"
    check_quadrature: bool = True

    def __post_init__(self):
        if self.capacity_unit not in ("nats", "bits"):
            raise SchemaError("analysis.capacity_unit", f"must be 'nats' or 'bits', got {self.capacity_unit!r}")


@dataclass(frozen=True)
class SweepSpec:
    variable: str
    start: float
    stop: float
    points: int
    spacing: str = "linear"

    def __post_init__(self):
        if not (float(self.points).is_integer() and self.points >= 2):
            raise SchemaError("experiment.sweep.points", f"must be an integer >= 2, got {self.points}")
        if self.spacing not in ("linear", "log"):
            raise SchemaError("experiment.sweep.spacing", f"must be 'linear' or 'log', got {self.spacing!r}")
        for name in ("start", "stop"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise InvariantError(f"experiment.sweep.{name}", f"must be finite, got {v}")
            if self.variable not in DB_VARIABLES and v <= 0:
                raise InvariantError(f"experiment.sweep.{name}",
                                     f"{self.variable} is a physical magnitude and must be > 0, got {v}")
        if self.spacing == "log" and (self.start <= 0 or self.stop <= 0):
            raise InvariantError("experiment.sweep.spacing", "log spacing needs positive bounds")

    def grid(self) -> list[float]:
        if self.spacing == "log":
            values = np.geomspace(self.start, self.stop, int(self.points))
        else:
            values = np.linspace(self.start, self.stop, int(self.points))
        return [float(v) for v in values]


@dataclass(frozen=True)
class VariantSpec:
    """One curve.  ``link`` selects the path-loss exponent of the variant's RF
    link from ``ExperimentSpec.link_exponents``; ``None`` keeps ``rf.n_pl``."""

    label: str
    kind: str = "cascaded"
    branches: int | None = None
    relays: int | None = None
    modulation: Modulation | None = None
    link: str | None = None

    def __post_init__(self):
        if self.kind not in ("cascaded", "wireless_only"):
            raise SchemaError("experiment.variants.kind", f"must be 'cascaded' or 'wireless_only', got {self.kind!r}")


@dataclass(frozen=True)
class ExperimentSpec:
    system: System
    analysis: AnalysisOptions
    scenario: str
    sweep: SweepSpec
    variants: tuple[VariantSpec, ...]
    metric: str | None = None
    link_exponents: dict = field(default_factory=lambda: {"los": 2.8, "nlos": 3.2})
    sim: SimPlan | None = None
    output: str | None = None
    workers: int = 1

    def __post_init__(self):
        if self.scenario not in (*SCENARIO_METRIC, "custom"):
            raise SchemaError("experiment.scenario", f"unknown scenario {self.scenario!r}")
        metric = SCENARIO_METRIC.get(self.scenario, self.metric)
        if metric not in METRICS:
            raise SchemaError("experiment.metric", f"custom scenarios need a metric in {METRICS}, got {metric!r}")
        object.__setattr__(self, "metric", metric)
        if not self.variants:
            raise SchemaError("experiment.variants", "at least one variant is required")
        for v in self.variants:
            if v.kind == "wireless_only" and metric != "outage":
                raise SchemaError("experiment.variants.kind", "wireless_only variants support the outage metric only")
            if v.link is not None and v.link not in self.link_exponents:
                raise SchemaError("experiment.variants.link", f"unknown link {v.link!r}")
        if self.sweep.variable == "plc.dist" and self.system.gbar0 is not None:
            raise SchemaError("scales.gbar0_db", "pins the PLC SNR, so a plc.dist sweep would have no effect")
        if not (float(self.workers).is_integer() and self.workers >= 1):
            raise SchemaError("sim.workers", f"must be an integer >= 1, got {self.workers}")


@dataclass
class MetricCurve:
    label: str
    variable: str
    values: list
    analytic: list
    mc_mean: list
    mc_halfwidth: list
    components: list
    metric: str = ""
    unit: str = ""

    def __post_init__(self):
        n = len(self.values)
        if any(len(a) != n for a in (self.analytic, self.mc_mean, self.mc_halfwidth, self.components)):
            raise ValueError("curve arrays must have equal length")


def apply_sweep(system: System, analysis: AnalysisOptions, variable: str, value: float):
    """Return ``(system, analysis)`` with the sweep variable set to ``value``."""
    if variable == "gbar0_db":
        return replace(system, gbar0=db_to_linear(value)), analysis
    if variable == "rho_db":
        return replace(system, rho=db_to_linear(value)), analysis
    if variable == "gamma_th_db":
        return system, replace(analysis, gamma_th_db=value)
    if variable == "tx_snr_db":
        return system.with_(**{
            "plc.power": power_for_tx_snr(value, plc_noise_variance(system.plc)),
            "rf.power": power_for_tx_snr(value, system.rf.var_noise),
        }), analysis
    if variable.startswith(("plc.", "rf.")):
        return system.with_(**{variable: value}), analysis
    raise SchemaError("experiment.sweep.variable", f"unsupported sweep variable {variable!r}")


def _variant_system(spec: ExperimentSpec, variant: VariantSpec, system: System) -> System:
    changes = {}
    if variant.branches is not None:
        changes["plc.branches"] = variant.branches
    if variant.relays is not None:
        changes["plc.relays"] = variant.relays
    if variant.link is not None:
        changes["rf.n_pl"] = spec.link_exponents[variant.link]
    return system.with_(**changes) if changes else system


def _direct_path(system: System) -> System:
    """RF link spanning the full PLC distance, with a derived (not pinned) rho."""
    if system.plc.dist <= 0:
        raise InvariantError("plc.dist", "wireless-only baseline needs a positive distance")
    return replace(system.with_(**{"rf.dist": system.plc.dist}), rho=None)


def _point(spec: ExperimentSpec, variant: VariantSpec, value: float):
    system, analysis = apply_sweep(spec.system, spec.analysis, spec.sweep.variable, value)
    system = _variant_system(spec, variant, system)
    mod = variant.modulation or analysis.modulation
    gamma_th = db_to_linear(analysis.gamma_th_db)
    plan = spec.sim
    mc = None
    comps = {}

    if variant.kind == "wireless_only":
        direct = _direct_path(system)
        hop = rf_hop(direct)
        analytic = wireless_only_outage(hop, gamma_th)
        comps = {"rho": hop.rho, "gamma_th": gamma_th, "f_mimo": analytic}
        if plan is not None:
            mc = mc_wireless_only_outage(plan, direct, gamma_th)
        return analytic, mc, comps

    e2e = system_e2e(system, fit_seed=analysis.fit_seed, fit_samples=analysis.fit_samples)
    query = MetricQuery(e2e, gamma_th, mod, analysis.half_range_order, analysis.full_range_order)
    base = {"gbar0": e2e.plc.gbar0, "rho": e2e.rf.rho}
    if spec.metric == "outage":
        res = outage_probability(query)
        comps = {**base, "gamma_th": gamma_th, **res.components}
        if plan is not None:
            mc = mc_outage(plan, system, gamma_th)
    elif spec.metric == "ber":
        res = average_ber(query, check=analysis.check_quadrature)
        comps = {**base, **res.components}
        if plan is not None:
            mc = mc_ber(plan, system, mod)
    else:
        res = average_capacity(query)
        comps = {**base, **res.components}
        if plan is not None:
            mc = mc_capacity(plan, system)
    return res.value, mc, comps


def run_experiment(spec: ExperimentSpec) -> list[MetricCurve]:
    """One :class:`MetricCurve` per variant, analytic always, MC when ``spec.sim`` is set."""
    grid = spec.sweep.grid()
    tasks = [(vi, gi) for vi in range(len(spec.variants)) for gi in range(len(grid))]
    # simulation parallelism lives at the grid level; each point runs one stream
    if spec.sim is not None and spec.sim.workers != 1:
        spec = replace(spec, sim=replace(spec.sim, workers=1))

    def run(task):
        vi, gi = task
        variant = spec.variants[vi]
        try:
            return _point(spec, variant, grid[gi])
        except Exception as exc:
            raise ExperimentError(
                f"variant {variant.label!r}, {spec.sweep.variable}={grid[gi]!r}: {exc}") from exc

    if spec.workers == 1:
        results = [run(t) for t in tasks]
    else:
        with ThreadPoolExecutor(max_workers=int(spec.workers)) as pool:
            results = list(pool.map(run, tasks))

    scale = 1.0 / math.log(2.0) if spec.metric == "capacity" and spec.analysis.capacity_unit == "bits" else 1.0
    unit = {"outage": "probability", "ber": "probability"}.get(spec.metric, spec.analysis.capacity_unit + "/s/Hz")
    columns = COMPONENT_COLUMNS[spec.metric]
    curves = []
    for vi, variant in enumerate(spec.variants):
        rows = results[vi * len(grid):(vi + 1) * len(grid)]
        comps = []
        for _, _, c in rows:
            row = {k: c.get(k) for k in columns}
            if scale != 1.0:
                for k in ("c1", "c2", "c3"):
                    if row.get(k) is not None:
                        row[k] = row[k] * scale
            comps.append(row)
        curves.append(MetricCurve(
            label=variant.label,
            variable=spec.sweep.variable,
            values=list(grid),
            analytic=[float(a) * scale for a, _, _ in rows],
            mc_mean=[None if m is None else m.mean * scale for _, m, _ in rows],
            mc_halfwidth=[None if m is None else m.half_width * scale for _, m, _ in rows],
            components=comps,
            metric=spec.metric,
            unit=unit,
        ))
    return curves


def _fmt(v) -> str:
    if v is None:
        return ""
    if isinstance(v, (bool, np.bool_)):
        return str(bool(v))
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return repr(float(v))


def csv_columns(curves: list[MetricCurve]) -> list[str]:
    extra = []
    for c in curves:
        for row in c.components:
            for k in row:
                if k not in extra:
                    extra.append(k)
    return [*CSV_HEADER, *extra]


def emit_csv(curves: list[MetricCurve], path) -> None:
    """Write curves as CSV, one row per (variant, grid point) in curve order.

    ``path`` may be a filesystem path or an open text stream.
    """
    if not curves:
        raise ValueError("no curves to write")
    header = csv_columns(curves)

    def write(fh):
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(header)
        for c in curves:
            for i, x in enumerate(c.values):
                row = [c.label, _fmt(x), _fmt(c.analytic[i]), _fmt(c.mc_mean[i]), _fmt(c.mc_halfwidth[i])]
                row += [_fmt(c.components[i].get(k)) for k in header[len(CSV_HEADER):]]
                w.writerow(row)

    if hasattr(path, "write"):
        write(path)
        return
    try:
        with open(path, "w", newline="") as fh:
            write(fh)
    except OSError as exc:
        raise OSError(f"cannot write CSV to {path}: {exc.strerror or exc}") from exc


def read_csv(path) -> list[dict]:
    """Parse a CSV written by :func:`emit_csv`; numeric fields become floats, empty ones None."""
    out = []
    with open(path, newline="") as fh:
        for rec in csv.DictReader(fh):
            row = {}
            for k, v in rec.items():
                if k == "variant":
                    row[k] = v
                elif v == "":
                    row[k] = None
                else:
                    try:
                        row[k] = float(v)
                    except ValueError:
                        row[k] = v
            out.append(row)
    return out


def gnuplot_hints(curves: list[MetricCurve], csv_path: str) -> str:
    """Suggested gnuplot commands for a CSV written by :func:`emit_csv`."""
    log_y = curves[0].metric in ("outage", "ber")
    lines = [
        "set datafile separator ','",
        f"set xlabel '{curves[0].variable}'",
        f"set ylabel '{curves[0].metric} ({curves[0].unit})'",
    ]
    if log_y:
        lines.append("set logscale y")
    plots = []
    for c in curves:
        sel = f"(strcol(1) eq '{c.label}' ? $3 : 1/0)"
        plots.append(f"'{csv_path}' using 2:{sel} with lines title '{c.label}'")
        if c.mc_mean and c.mc_mean[0] is not None:
            sel_mc = f"(strcol(1) eq '{c.label}' ? $4 : 1/0)"
            plots.append(f"'{csv_path}' using 2:{sel_mc}:5 with yerrorbars notitle")
    lines.append("plot " + ", \\\n     ".join(plots))
    return "\n".join(lines)
