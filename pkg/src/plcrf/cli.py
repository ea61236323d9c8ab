"""Command-line entry point: ``plcrf analyze | quadtable | selftest``.

Exit codes: 0 success, 2 configuration error, 3 numerical-agreement failure
in ``selftest`` (or a table mismatch in ``quadtable verify``).
"""

from __future__ import annotations

import argparse
import math
import sys

from plcrf import __version__
from plcrf.errors import ConfigError

EXIT_OK = 0
EXIT_CONFIG = 2
EXIT_NUMERIC = 3


def _overrides(args) -> dict:
    out = {}
    if args.sim_trials is not None:
        # --sim-trials switches simulation on; --seed/--workers only adjust it
        out["sim"] = {"trials": args.sim_trials}
    if args.out is not None:
        out["output"] = args.out
    if args.bits:
        out["analysis"] = {"capacity_unit": "bits"}
    return out


def _analyze(args) -> int:
    from dataclasses import replace

    from plcrf.config import load_config
    from plcrf.experiments import emit_csv, gnuplot_hints, run_experiment

    if args.workers is not None and args.workers < 1:
        raise ConfigError(f"--workers: must be >= 1, got {args.workers}")
    cfg = load_config(args.config, preset_name=args.preset, overrides=_overrides(args))
    sim = cfg.sim
    if sim is not None and (args.seed is not None or args.workers is not None):
        try:
            sim = replace(sim, seed=sim.seed if args.seed is None else args.seed,
                          workers=sim.workers if args.workers is None else args.workers)
        except ValueError as exc:
            raise ConfigError(f"--seed: {exc}") from None
    if cfg.experiment is None:
        _print_point(replace(cfg, sim=sim))
        return EXIT_OK
    spec = replace(cfg.experiment, sim=sim, workers=args.workers or (sim.workers if sim else cfg.workers))
    curves = run_experiment(spec)
    if spec.output:
        emit_csv(curves, spec.output)
        print(f"wrote {sum(len(c.values) for c in curves)} rows to {spec.output} "
              f"({curves[0].metric}, {curves[0].unit})", file=sys.stderr)
    else:
        emit_csv(curves, sys.stdout)
    if args.gnuplot_hints:
        print(gnuplot_hints(curves, spec.output or "results.csv"), file=sys.stderr)
    return EXIT_OK


def _print_point(cfg) -> None:
    from plcrf.channel import db_to_linear, linear_to_db
    from plcrf.metrics import MetricQuery, average_ber, average_capacity, outage_probability
    from plcrf.montecarlo import mc_ber, mc_capacity, mc_outage
    from plcrf.system import system_e2e

    a = cfg.analysis
    e2e = system_e2e(cfg.system, fit_seed=a.fit_seed, fit_samples=a.fit_samples)
    gamma_th = db_to_linear(a.gamma_th_db)
    q = MetricQuery(e2e, gamma_th, a.modulation, a.half_range_order, a.full_range_order)
    bits = a.capacity_unit == "bits"
    cap_scale = 1.0 / math.log(2.0) if bits else 1.0
    rows = [
        ("outage", outage_probability(q).value, lambda: mc_outage(cfg.sim, cfg.system, gamma_th), 1.0),
        (f"ber_{a.modulation.name.lower()}", average_ber(q, check=a.check_quadrature).value,
         lambda: mc_ber(cfg.sim, cfg.system, a.modulation), 1.0),
        (f"capacity_{a.capacity_unit}", average_capacity(q).value * cap_scale,
         lambda: mc_capacity(cfg.sim, cfg.system), cap_scale),
    ]
    print(f"gbar0_db={linear_to_db(e2e.plc.gbar0)!r} rho_db={linear_to_db(e2e.rf.rho)!r} "
          f"gamma_th_db={a.gamma_th_db!r} L={e2e.plc.fit.branches} M={e2e.plc.relays}")
    print("metric,analytic,mc_mean,mc_halfwidth")
    for name, value, sim, scale in rows:
        if cfg.sim is None:
            print(f"{name},{value!r},,")
        else:
            est = sim()
            print(f"{name},{value!r},{est.mean * scale!r},{est.half_width * scale!r}")


def _quadtable(args) -> int:
    from plcrf import quadgen
    from plcrf.special import MAX_HALF_RANGE_ORDER, half_range_hermite_rule

    if args.action == "verify":
        worst = 0.0
        for n in range(1, MAX_HALF_RANGE_ORDER + 1):
            r = half_range_hermite_rule(n)
            worst = max(worst, quadgen.exactness_error(r.nodes, r.weights))
        print(f"orders 1..{MAX_HALF_RANGE_ORDER}: worst relative exactness error {worst:.3e}")
        return EXIT_OK if worst <= 1e-10 else EXIT_NUMERIC

    order = args.order
    if order < 1:
        print("error: --order must be >= 1", file=sys.stderr)
        return EXIT_CONFIG
    table = quadgen.build_table(order, progress=lambda n: print(f"order {n}", file=sys.stderr)
                                if args.verbose else None)
    worst = max(quadgen.exactness_error(*table[n]) for n in table)
    drift = 0.0
    for n in table:
        if n <= MAX_HALF_RANGE_ORDER:
            r = half_range_hermite_rule(n)
            for new, old in ((table[n][0], r.nodes), (table[n][1], r.weights)):
                drift = max(drift, max(abs(a - b) / abs(b) for a, b in zip(new, old)))
    print(f"generated orders 1..{order}: worst exactness error {worst:.3e}, "
          f"max relative change vs embedded table {drift:.3e}")
    if args.write:
        path = quadgen.write_table(table, args.path or quadgen.TABLE_PATH)
        print(f"wrote {path}")
    return EXIT_OK if worst <= 1e-10 else EXIT_NUMERIC


def run_selftest(quick: bool = False, log=print) -> bool:
    """Cross-check closed forms, quadrature and special functions against oracles."""
    import mpmath as mp
    import numpy as np
    from scipy import special

    from plcrf import oracles, quadgen
    from plcrf.channel import db_to_linear
    from plcrf.metrics import (MetricQuery, average_ber, average_capacity, conditional_ber, modulation,
                               outage_probability)
    from plcrf.montecarlo import SimPlan, mc_ber, mc_capacity, mc_outage
    from plcrf.special import (full_hermite_rule, half_range_hermite_rule, meijer_ber_term, meijer_cap_term,
                               reg_upper_gamma)
    from plcrf.system import System, system_e2e

    results = []

    def check(name, ok, detail):
        results.append(ok)
        log(f"{'PASS' if ok else 'FAIL'} {name}: {detail}")

    worst = max(quadgen.exactness_error(half_range_hermite_rule(n).nodes, half_range_hermite_rule(n).weights)
                for n in (1, 8, 30, 64))
    check("half-range rule exactness", worst <= 1e-10, f"{worst:.2e}")
    r = full_hermite_rule(40)
    worst = max(abs(float(np.dot(r.weights, r.nodes**j))
                    - (math.gamma((j + 1) / 2) if j % 2 == 0 else 0.0)) / math.gamma((j + 1) / 2)
                for j in range(80))
    check("full-range rule exactness", worst <= 1e-10, f"{worst:.2e}")

    worst = 0.0
    for a, z in ((1.0, 0.1), (6.0, 1.0), (18.0, 0.03)):
        ref = float(mp.meijerg([[1 - 0.5], [1]], [[0, a], []], z))
        worst = max(worst, abs(meijer_ber_term(0.5, a, z) - ref) / ref)
        ref = float(mp.meijerg([[-a], [1 - a]], [[0, -a, -a], []], z))
        worst = max(worst, abs(meijer_cap_term(a, z) - ref) / ref)
    check("Meijer-G instances vs mpmath", worst <= 1e-8, f"{worst:.2e}")

    x = np.array([0.0, 0.3, 2.0, 9.0])
    e1 = np.max(np.abs(reg_upper_gamma(1.0, x) - np.exp(-x)))
    e2 = np.max(np.abs(conditional_ber(modulation("BPSK"), x) - special.ndtr(-np.sqrt(2 * x))))
    check("incomplete gamma / BPSK identities", max(e1, e2) <= 1e-12, f"{max(e1, e2):.2e}")

    system = System(gbar0=db_to_linear(10.0), rho=db_to_linear(20.0)).with_(**{"plc.relays": 2})
    e2e = system_e2e(system)
    q = MetricQuery(e2e, db_to_linear(3.0))
    out, ber, cap = outage_probability(q).value, average_ber(q, check=False).value, average_capacity(q).value
    d_out = abs(out - oracles.direct_outage(e2e, q.gamma_th))
    d_ber = abs(ber - oracles.direct_ber(e2e, q.modulation))
    ref_cap = oracles.direct_capacity(e2e)
    d_cap = abs(cap - ref_cap) / ref_cap
    check("outage closed form vs direct integration", d_out <= 1e-6, f"{d_out:.2e}")
    check("BER closed form vs direct integration", d_ber <= 1e-6, f"{d_ber:.2e}")
    check("capacity closed form vs direct integration", d_cap <= 1e-4, f"{d_cap:.2e} relative")

    plan = SimPlan(trials=100_000 if quick else 1_000_000, seed=20240601)
    for name, value, est in (("outage", out, mc_outage(plan, system, q.gamma_th)),
                             ("BER", ber, mc_ber(plan, system, q.modulation)),
                             ("capacity", cap, mc_capacity(plan, system))):
        k = abs(value - est.mean) / est.std_error if est.std_error > 0 else 0.0
        check(f"{name} closed form vs Monte Carlo", k <= 3.0, f"{k:.2f} SE at {plan.trials} trials")
    return all(results)


def _selftest(args) -> int:
    return EXIT_OK if run_selftest(quick=args.quick) else EXIT_NUMERIC


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="plcrf", description="Cascaded PLC/MIMO-RF relaying performance.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    an = sub.add_parser("analyze", help="evaluate a configuration or run its sweep")
    an.add_argument("--config", help="YAML configuration file")
    an.add_argument("--preset", choices=["paper-iv", "paper-fig2a", "paper-fig3b", "paper-fig3c"])
    an.add_argument("--sim-trials", type=int, help="Monte-Carlo trials per point (enables simulation)")
    an.add_argument("--seed", type=int)
    an.add_argument("--workers", type=int)
    an.add_argument("--out", help="CSV output path (stdout when absent)")
    an.add_argument("--bits", action="store_true", help="report capacity in bits/s/Hz instead of nats")
    an.add_argument("--gnuplot-hints", action="store_true", help="print suggested gnuplot commands to stderr")
    an.set_defaults(func=_analyze)

    qt = sub.add_parser("quadtable", help="regenerate or verify the embedded half-range table")
    qt_sub = qt.add_subparsers(dest="action", required=True)
    regen = qt_sub.add_parser("regen")
    regen.add_argument("--order", type=int, required=True, help="highest order to generate")
    regen.add_argument("--write", action="store_true", help="overwrite the embedded table")
    regen.add_argument("--path", help="write somewhere other than the package table")
    regen.add_argument("-v", "--verbose", action="store_true")
    qt_sub.add_parser("verify")
    qt.set_defaults(func=_quadtable)

    st = sub.add_parser("selftest", help="run the oracle cross-checks")
    st.add_argument("--quick", action="store_true", help="fewer Monte-Carlo trials")
    st.set_defaults(func=_selftest)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "analyze" and args.config is None and args.preset is None:
        print("error: analyze needs --config, --preset, or both", file=sys.stderr)
        return EXIT_CONFIG
    try:
        return args.func(args)
    except ConfigError as exc:
        print(f"config error: {exc}", file=sys.stderr)
        return EXIT_CONFIG


if __name__ == "__main__":
    sys.exit(main())
