"""Smoke tests for the python bindings."""

import json
import math

import pytest

icgraph = pytest.importorskip("icgraph")


def test_generate_and_inspect():
    g = icgraph.generate("cycle", lengths=[12.0])
    assert g.genus() == 1
    assert g.vertex_count == 3
    assert abs(g.total_length - 12.0) < 1e-9
    assert "genus 1" in repr(g)


def test_parse_round_trip():
    g = icgraph.generate("theta", lengths=[1.0, 2.0, 3.0])
    back = icgraph.parse(g.to_json())
    assert back.genus() == g.genus()
    assert json.loads(back.to_json()) == json.loads(g.to_json())


def test_predicted_diagram_quarter_lengths():
    wedge = icgraph.generate("wedge", lengths=[3.0, 5.0])
    diagram = icgraph.predicted_diagram(wedge)
    assert len(diagram) == 2
    assert diagram[0] == pytest.approx((0.0, 0.75))
    assert diagram[1] == pytest.approx((0.0, 1.25))
    assert icgraph.shortest_loop_lengths(wedge) == pytest.approx([3.0, 5.0])


def test_computed_diagram_matches_closed_form():
    cycle = icgraph.generate("cycle", lengths=[12.0])
    points = icgraph.computed_diagram(cycle, delta=0.3)
    assert len(points) == 1
    birth, death = points[0]
    assert birth <= 0.3
    assert death == pytest.approx(3.0, rel=0.05)


def test_verify_reports():
    theta = icgraph.generate("theta", lengths=[2.0, 3.0, 4.0])
    report = icgraph.verify(theta, delta=0.15, tol=0.12)
    assert report["pass"] is True
    assert report["scale_valid"] is True
    assert len(report["predicted"]) == 2

    bad = icgraph.verify(icgraph.generate("cycle", lengths=[12.0]), delta=3.0)
    assert bad["pass"] is False
    assert bad["scale_valid"] is False


def test_distances():
    c4 = icgraph.generate("cycle", lengths=[4.0])
    c5 = icgraph.generate("cycle", lengths=[5.0])
    assert icgraph.d_ic(c4, c4) == 0.0
    assert icgraph.d_ic(c4, c5) == pytest.approx(0.25)
    assert icgraph.bottleneck([(0.0, 1.0)], []) == pytest.approx(0.5)
    assert icgraph.bottleneck([(0.0, math.inf)], []) == math.inf


def test_invalid_input_raises():
    with pytest.raises(ValueError):
        icgraph.parse('{"vertices": ["a"], "edges": [["e", "a", "a", 0.0]]}')
    with pytest.raises(ValueError):
        icgraph.generate("cycle", lengths=[])
