"""Generation of half-range Gauss-Hermite rules.

The rule for the weight ``exp(-y**2)`` on ``[0, inf)`` has no closed-form
nodes.  Recurrence coefficients are obtained from the moments
``Gamma((k + 1) / 2) / 2`` with the modified Chebyshev algorithm, carried out
in extended precision because the moment map is severely ill-conditioned,
followed by the Golub-Welsch eigenvalue step on the Jacobi matrix.

The embedded table in :mod:`plcrf._halfrange_table` is produced by
:func:`write_table`; ``plcrf quadtable regen`` drives it from the command line.
"""

from __future__ import annotations

import math
from pathlib import Path

import mpmath as mp

MAX_ORDER = 64
TABLE_PATH = Path(__file__).with_name("_halfrange_table.py")


def _recurrence(n: int) -> tuple[list, list]:
    """Monic recurrence coefficients (a_k, b_k), k < n, via modified Chebyshev."""
    size = 2 * n
    moments = [mp.gamma(mp.mpf(k + 1) / 2) / 2 for k in range(size)]
    a = [mp.mpf(0)] * n
    b = [mp.mpf(0)] * n
    a[0] = moments[1] / moments[0]
    b[0] = moments[0]
    sig_prev = [mp.mpf(0)] * size
    sig = moments[:]
    for k in range(1, n):
        new = [mp.mpf(0)] * size
        for l in range(k, size - k):
            new[l] = sig[l + 1] - a[k - 1] * sig[l] - b[k - 1] * sig_prev[l]
        a[k] = new[k + 1] / new[k] - sig[k] / sig[k - 1]
        b[k] = new[k] / sig[k - 1]
        sig_prev, sig = sig, new
    return a, b


def half_range_rule_mp(n: int, dps: int | None = None) -> tuple[list[float], list[float]]:
    """Nodes and weights of the ``n``-point half-range rule, rounded to float."""
    if n < 1:
        raise ValueError(f"order must be >= 1, got {n}")
    dps = dps or max(60, 3 * n + 30)
    with mp.workdps(dps):
        a, b = _recurrence(n)
        jac = mp.matrix(n, n)
        for i in range(n):
            jac[i, i] = a[i]
            if i + 1 < n:
                jac[i, i + 1] = jac[i + 1, i] = mp.sqrt(b[i + 1])
        evals, evecs = mp.eigsy(jac)
        pairs = sorted((evals[i], b[0] * evecs[0, i] ** 2) for i in range(n))
        return [float(x) for x, _ in pairs], [float(w) for _, w in pairs]


def exactness_error(nodes, weights) -> float:
    """Worst relative error on the monomials y**j, j < 2 * len(nodes)."""
    worst = 0.0
    for j in range(2 * len(nodes)):
        exact = math.gamma((j + 1) / 2) / 2
        approx = math.fsum(w * x**j for x, w in zip(nodes, weights))
        worst = max(worst, abs(approx - exact) / exact)
    return worst


def build_table(max_order: int = MAX_ORDER, progress=None) -> dict[int, tuple[list[float], list[float]]]:
    table = {}
    for n in range(1, max_order + 1):
        table[n] = half_range_rule_mp(n)
        if progress is not None:
            progress(n)
    return table


def render_table(table: dict[int, tuple[list[float], list[float]]]) -> str:
    lines = [
        '"""Half-range Gauss-Hermite nodes and weights, generated by plcrf.quadgen.',
        "",
        "Do not edit by hand; run ``plcrf quadtable regen --order N --write``.",
        '"""',
        "",
        "RULES = {",
    ]
    for n in sorted(table):
        nodes, weights = table[n]
        lines.append(f"    {n}: (")
        lines.append("        (" + ", ".join(repr(x) for x in nodes) + ",),")
        lines.append("        (" + ", ".join(repr(w) for w in weights) + ",),")
        lines.append("    ),")
    lines.append("}")
    return "\n".join(lines) + "\n"


def write_table(table, path: Path = TABLE_PATH) -> Path:
    path = Path(path)
    path.write_text(render_table(table))
    return path
