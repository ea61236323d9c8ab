import numpy as np
import pytest

from plcrf import quadgen
from plcrf.special import half_range_hermite_rule


@pytest.mark.parametrize("n", [1, 2, 7, 16])
def test_regeneration_matches_table(n):
    nodes, weights = quadgen.half_range_rule_mp(n)
    r = half_range_hermite_rule(n)
    np.testing.assert_allclose(nodes, r.nodes, rtol=1e-14)
    np.testing.assert_allclose(weights, r.weights, rtol=1e-13)
    assert quadgen.exactness_error(nodes, weights) <= 1e-13


def test_one_point_rule_closed_form():
    # single node at the weight's mean, weight = total mass
    nodes, weights = quadgen.half_range_rule_mp(1)
    assert nodes[0] == pytest.approx(1 / np.sqrt(np.pi), rel=1e-15)
    assert weights[0] == pytest.approx(np.sqrt(np.pi) / 2, rel=1e-15)


def test_render_roundtrip(tmp_path):
    table = quadgen.build_table(4)
    path = quadgen.write_table(table, tmp_path / "t.py")
    ns = {}
    exec(path.read_text(), ns)
    for n in table:
        assert list(ns["RULES"][n][0]) == table[n][0]
        assert list(ns["RULES"][n][1]) == table[n][1]


def test_rejects_order():
    with pytest.raises(ValueError):
        quadgen.half_range_rule_mp(0)
