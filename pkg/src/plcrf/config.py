"""YAML configuration files and named presets.

Layout (every section optional except ``schema_version``)::

    schema_version: 1
    plc:   {PlcLinkConfig fields..., tx_snr_db}
    rf:    {RfLinkConfig fields..., tx_snr_db}
    power_budget: {total_w, plc_fraction}
    scales: {gbar0_db, rho_db}
    analysis: {gamma_th_db, modulation, half_range_order, full_range_order,
               fit_seed, fit_samples, capacity_unit, check_quadrature}
    experiment:
      scenario: outage_vs_distance | ber_vs_snr | capacity_vs_snr | custom
      metric: outage | ber | capacity        # custom only
      sweep: {variable, start, stop, points, spacing}
      variants: [{label, kind, branches, relays, modulation, link}, ...]
      link_exponents: {los: 2.8, nlos: 3.2}
    sim: {trials, seed, workers, confidence}  # omit for analytic only
    output: path.csv

``tx_snr_db`` sets a link's power so that power over that link's noise
variance equals the given SNR before attenuation.  ``power_budget`` instead
splits a total power between the hops (``plc_fraction`` to the PLC side).
A preset is applied first and the file is merged over it; CLI flags win last.
"""

from __future__ import annotations

import copy
import math
from dataclasses import dataclass, fields, replace

import yaml

from plcrf.channel import PlcLinkConfig, RfLinkConfig, db_to_linear, plc_noise_variance, power_for_tx_snr
from plcrf.errors import ConfigParseError, InvariantError, SchemaError
from plcrf.experiments import AnalysisOptions, ExperimentSpec, SweepSpec, VariantSpec, DEFAULT_SWEEP_VARIABLE
from plcrf.metrics import modulation
from plcrf.montecarlo import SimPlan
from plcrf.special import full_hermite_rule, half_range_hermite_rule
from plcrf.system import System

SCHEMA_VERSION = 1

_PLC_FIELDS = {f.name: f.type for f in fields(PlcLinkConfig)}
_RF_FIELDS = {f.name: f.type for f in fields(RfLinkConfig)}
_INT_FIELDS = {"plc.branches", "plc.relays", "rf.n_r", "rf.n_d"}

_SCHEMA = {
    "schema_version": int,
    "plc": {**{k: float for k in _PLC_FIELDS}, "tx_snr_db": float},
    "rf": {**{k: float for k in _RF_FIELDS}, "tx_snr_db": float},
    "power_budget": {"total_w": float, "plc_fraction": float},
    "scales": {"gbar0_db": float, "rho_db": float},
    "analysis": {
        "gamma_th_db": float,
        "modulation": str,
        "half_range_order": int,
        "full_range_order": int,
        "fit_seed": int,
        "fit_samples": int,
        "capacity_unit": str,
        "check_quadrature": bool,
    },
    "experiment": {
        "scenario": str,
        "metric": str,
        "sweep": {"variable": str, "start": float, "stop": float, "points": int, "spacing": str},
        "variants": [{"label": str, "kind": str, "branches": int, "relays": int, "modulation": str, "link": str}],
        "link_exponents": {"los": float, "nlos": float},
    },
    "sim": {"trials": int, "seed": int, "workers": int, "confidence": float},
    "output": str,
}
_POSITIVE_INTS = {"plc.branches", "plc.relays", "rf.n_r", "rf.n_d", "experiment.variants.branches",
                  "experiment.variants.relays", "experiment.sweep.points", "sim.trials", "sim.workers",
                  "analysis.half_range_order", "analysis.full_range_order", "analysis.fit_samples",
                  "schema_version"}

_BASELINE = {
    "schema_version": SCHEMA_VERSION,
    "plc": {"sigma_db": 12.0, "mu_db": 0.0, "p_imp": 0.05},
    "rf": {"rate": 0.85, "n_r": 3, "n_d": 2, "m": 3.0, "omega": 1.0, "c": 1.0},
    "scales": {"rho_db": 20.0, "gbar0_db": 20.0},
}

_FIG2A = {
    "schema_version": SCHEMA_VERSION,
    "plc": {"sigma_db": 12.0, "mu_db": 0.0, "p_imp": 0.05, "alpha1": 0.00933, "alpha2": 0.0051, "k": 0.7,
            "freq": 20.0, "dist": 10.0, "tx_snr_db": 25.0},
    "rf": {"rate": 0.85, "n_r": 3, "n_d": 2, "m": 3.0, "omega": 1.0, "c": 1.0, "dist": 2.0, "n_pl": 2.8,
           "tx_snr_db": 25.0},
    "analysis": {"gamma_th_db": -18.0},
    "experiment": {
        "scenario": "outage_vs_distance",
        "sweep": {"variable": "plc.dist", "start": 1.0, "stop": 30.0, "points": 30, "spacing": "linear"},
        "link_exponents": {"los": 2.8, "nlos": 3.2},
        "variants": [
            {"label": "cascaded L=1 M=1", "branches": 1, "relays": 1, "link": "los"},
            {"label": "cascaded L=1 M=2", "branches": 1, "relays": 2, "link": "los"},
            {"label": "cascaded L=2 M=1", "branches": 2, "relays": 1, "link": "los"},
            {"label": "cascaded L=2 M=2", "branches": 2, "relays": 2, "link": "los"},
            {"label": "wireless-only LoS", "kind": "wireless_only", "link": "los"},
            {"label": "wireless-only NLoS", "kind": "wireless_only", "link": "nlos"},
        ],
    },
}

_LM_VARIANTS = [
    {"label": f"L={b} M={r}", "branches": b, "relays": r} for b, r in ((1, 1), (1, 2), (2, 1), (2, 2))
]


def _snr_sweep(scenario: str) -> dict:
    out = copy.deepcopy(_BASELINE)
    out["scales"] = {"rho_db": 20.0}
    out["experiment"] = {
        "scenario": scenario,
        "sweep": {"variable": "gbar0_db", "start": 0.0, "stop": 40.0, "points": 21, "spacing": "linear"},
        "variants": copy.deepcopy(_LM_VARIANTS),
    }
    return out


PRESETS = {
    "paper-iv": _BASELINE,
    "paper-fig2a": _FIG2A,
    "paper-fig3b": _snr_sweep("ber_vs_snr"),
    "paper-fig3c": _snr_sweep("capacity_vs_snr"),
}


@dataclass(frozen=True)
class RunConfig:
    system: System
    analysis: AnalysisOptions
    experiment: ExperimentSpec | None
    sim: SimPlan | None
    output: str | None
    workers: int = 1
    raw: dict | None = None


def preset(name: str) -> dict:
    try:
        return copy.deepcopy(PRESETS[name])
    except KeyError:
        raise SchemaError("preset", f"unknown preset {name!r}; choose from {sorted(PRESETS)}") from None


def _merge(base: dict, over: dict) -> dict:
    out = copy.deepcopy(base)
    for key, value in over.items():
        if isinstance(value, dict) and isinstance(out.get(key), dict):
            sub = dict(out[key])
            # power and tx_snr_db are alternatives; the overlay's choice wins
            if "power" in value:
                sub.pop("tx_snr_db", None)
            if "tx_snr_db" in value:
                sub.pop("power", None)
            out[key] = _merge(sub, value)
        else:
            out[key] = copy.deepcopy(value)
    return out


def _check_type(path: str, value, kind):
    if value is None:
        return
    if kind is bool:
        ok = isinstance(value, bool)
    elif kind is int:
        ok = isinstance(value, int) and not isinstance(value, bool)
        if not ok and isinstance(value, float) and value.is_integer():
            ok = True
    elif kind is float:
        ok = isinstance(value, (int, float)) and not isinstance(value, bool)
    else:
        ok = isinstance(value, kind)
    if not ok:
        raise SchemaError(path, f"expected {kind.__name__}, got {type(value).__name__} ({value!r})")
    if kind is float and not math.isfinite(float(value)):
        raise SchemaError(path, f"must be finite, got {value!r}")
    if path in _POSITIVE_INTS:
        if not float(value).is_integer() or value < 1:
            raise SchemaError(path, f"must be a positive integer, got {value!r}")


def validate_schema(doc, schema=_SCHEMA, path: str = "") -> None:
    """Raise :class:`SchemaError` for unknown keys and wrongly typed values."""
    if not isinstance(doc, dict):
        raise SchemaError(path or "<root>", f"expected a mapping, got {type(doc).__name__}")
    for key, value in doc.items():
        where = f"{path}.{key}" if path else str(key)
        if key not in schema:
            raise SchemaError(where, f"unknown key; expected one of {sorted(schema)}")
        kind = schema[key]
        if isinstance(kind, dict):
            if value is None:
                continue
            validate_schema(value, kind, where)
        elif isinstance(kind, list):
            if not isinstance(value, list):
                raise SchemaError(where, f"expected a list, got {type(value).__name__}")
            for i, item in enumerate(value):
                if not isinstance(item, dict):
                    raise SchemaError(f"{where}[{i}]", "expected a mapping")
                for k, v in item.items():
                    if k not in kind[0]:
                        raise SchemaError(f"{where}[{i}].{k}", f"unknown key; expected one of {sorted(kind[0])}")
                    _check_type(f"{where}.{k}", v, kind[0][k])
        else:
            if where in _INT_FIELDS:
                kind = int
            _check_type(where, value, kind)


def _link(cls, section: dict, name: str, noise_var):
    values = {k: v for k, v in section.items() if k != "tx_snr_db" and v is not None}
    try:
        cfg = cls(**values)
        if section.get("tx_snr_db") is not None:
            if "power" in values:
                raise SchemaError(f"{name}.tx_snr_db", "give either power or tx_snr_db, not both")
            cfg = replace(cfg, power=power_for_tx_snr(section["tx_snr_db"], noise_var(cfg)))
    except InvariantError as exc:
        raise InvariantError(f"{name}.{exc.field}", str(exc).split(": ", 1)[1]) from None
    return cfg


def build(doc: dict, *, overrides: dict | None = None) -> RunConfig:
    """Validate a merged document and build the runtime objects."""
    doc = _merge(doc, overrides or {})
    validate_schema(doc)
    if "schema_version" not in doc:
        raise SchemaError("schema_version", "missing")
    if doc["schema_version"] != SCHEMA_VERSION:
        raise SchemaError("schema_version", f"unsupported version {doc['schema_version']}; expected {SCHEMA_VERSION}")

    plc = _link(PlcLinkConfig, doc.get("plc") or {}, "plc", plc_noise_variance)
    rf = _link(RfLinkConfig, doc.get("rf") or {}, "rf", lambda c: c.var_noise)

    budget = doc.get("power_budget")
    if budget:
        if "total_w" not in budget:
            raise SchemaError("power_budget.total_w", "missing")
        total, frac = budget["total_w"], budget.get("plc_fraction", 0.5)
        if not total > 0:
            raise InvariantError("power_budget.total_w", f"must be > 0, got {total}")
        if not 0 < frac < 1:
            raise InvariantError("power_budget.plc_fraction", f"must lie in (0, 1), got {frac}")
        plc = replace(plc, power=frac * total)
        rf = replace(rf, power=(1.0 - frac) * total)

    scales = doc.get("scales") or {}
    gbar0 = db_to_linear(scales["gbar0_db"]) if scales.get("gbar0_db") is not None else None
    rho = db_to_linear(scales["rho_db"]) if scales.get("rho_db") is not None else None
    system = System(plc, rf, gbar0=gbar0, rho=rho)
    try:
        system.scales()
    except InvariantError as exc:
        raise InvariantError(exc.field if "." in exc.field else f"scales.{exc.field}",
                             str(exc).split(": ", 1)[1]) from None

    a = dict(doc.get("analysis") or {})
    if "modulation" in a:
        try:
            a["modulation"] = modulation(a["modulation"])
        except ValueError as exc:
            raise SchemaError("analysis.modulation", str(exc)) from None
    try:
        analysis = AnalysisOptions(**{k: v for k, v in a.items() if v is not None})
        half_range_hermite_rule(int(analysis.half_range_order))
        full_hermite_rule(int(analysis.full_range_order))
    except (ValueError, TypeError) as exc:
        if isinstance(exc, SchemaError):
            raise
        raise InvariantError("analysis", str(exc)) from None

    sim = None
    if doc.get("sim"):
        try:
            sim = SimPlan(**{k: v for k, v in doc["sim"].items() if v is not None})
        except ValueError as exc:
            raise InvariantError("sim", str(exc)) from None
    workers = sim.workers if sim else int((doc.get("sim") or {}).get("workers") or 1)
    output = doc.get("output")

    experiment = None
    if doc.get("experiment"):
        experiment = _experiment(doc["experiment"], system, analysis, sim, output, workers)
    return RunConfig(system, analysis, experiment, sim, output, workers, doc)


def _experiment(e: dict, system, analysis, sim, output, workers) -> ExperimentSpec:
    scenario = e.get("scenario")
    if scenario is None:
        raise SchemaError("experiment.scenario", "missing")
    sw = dict(e.get("sweep") or {})
    sw.setdefault("variable", DEFAULT_SWEEP_VARIABLE.get(scenario))
    for key in ("variable", "start", "stop", "points"):
        if sw.get(key) is None:
            raise SchemaError(f"experiment.sweep.{key}", "missing")
    sweep = SweepSpec(sw["variable"], float(sw["start"]), float(sw["stop"]), int(sw["points"]),
                      sw.get("spacing", "linear"))
    variants = []
    for i, v in enumerate(e.get("variants") or [{"label": "default"}]):
        v = dict(v)
        if "label" not in v:
            raise SchemaError(f"experiment.variants[{i}].label", "missing")
        if v.get("modulation") is not None:
            try:
                v["modulation"] = modulation(v["modulation"])
            except ValueError as exc:
                raise SchemaError(f"experiment.variants[{i}].modulation", str(exc)) from None
        for k in ("branches", "relays"):
            if v.get(k) is not None:
                v[k] = int(v[k])
        variants.append(VariantSpec(**v))
    links = {"los": 2.8, "nlos": 3.2, **(e.get("link_exponents") or {})}
    for k, n in links.items():
        if n < 0:
            raise InvariantError(f"experiment.link_exponents.{k}", f"must be >= 0, got {n}")
    return ExperimentSpec(system, analysis, scenario, sweep, tuple(variants), e.get("metric"), links,
                          sim, output, workers)


def parse_yaml(text: str, source: str = "<string>") -> dict:
    try:
        doc = yaml.safe_load(text)
    except yaml.YAMLError as exc:
        raise ConfigParseError(f"{source}: {exc}") from None
    if doc is None:
        doc = {}
    if not isinstance(doc, dict):
        raise SchemaError("<root>", f"{source}: expected a mapping at the top level")
    return doc


def load_config(path=None, *, preset_name: str | None = None, overrides: dict | None = None) -> RunConfig:
    """Load ``path`` (YAML) over an optional preset and apply ``overrides``.

    Raises :class:`ConfigParseError`, :class:`SchemaError` or
    :class:`InvariantError`, all subclasses of ``ConfigError``.
    """
    doc = preset(preset_name) if preset_name else {}
    if path is not None:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise ConfigParseError(f"{path}: {exc.strerror or exc}") from None
        user = parse_yaml(text, str(path))
        validate_schema(user)
        doc = _merge(doc, user)
    if not doc:
        raise SchemaError("<root>", "no configuration given (use a file, a preset, or both)")
    return build(doc, overrides=overrides)
