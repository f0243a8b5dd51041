"""Tests for embedding validation, edge classes and components."""

from fractions import Fraction

import pytest

from app.cli.graph_file import parse_graph_file
from app.fixtures import list_fixtures
from app.schemas.torus import EdgeGeometry, TorusGraph, TorusKind, TorusPoint
from app.torus.embedding import components, edge_class, validate_embedding
from app.utils.errors import StructuralError


@pytest.mark.parametrize("name", list_fixtures())
def test_every_fixture_is_an_embedding(load, name):
    """Test all shipped fixtures pass validation."""
    report = validate_embedding(load(name))
    assert report.ok, report.violations


def test_crossing_loops_reported():
    """Test a meridian and a longitude through different vertices cross."""
    g = parse_graph_file(
        """
        torus standard
        vertex a 0 1/2
        vertex b 1/2 0
        edge e1 a a : 0 1/2 ; 1 1/2
        edge e2 b b : 1/2 0 ; 1/2 1
        """
    )
    report = validate_embedding(g)

    assert not report.ok
    crossing = [v for v in report.violations if v.kind == "crossing"]
    assert crossing
    assert crossing[0].ids == ("e1", "e2")
    assert crossing[0].point == ("1/2", "1/2")
    assert crossing[0].detail == "segment 0 of e1, segment 0 of e2"


def test_crossing_found_only_after_translation():
    """Test segments that meet only through a Z² translate are caught."""
    g = parse_graph_file(
        """
        torus standard
        vertex a 1/4 1/16
        vertex b 3/4 1/16
        vertex c 1/2 3/4
        vertex d 1/2 1/8
        edge e1 a b : 1/4 1/16 ; 3/4 1/16
        edge e2 c d : 1/2 3/4 ; 1/2 9/8
        """
    )
    report = validate_embedding(g)

    assert not report.ok
    assert any(
        v.kind == "crossing" and v.ids == ("e1", "e2") and v.translate == (0, -1)
        for v in report.violations
    )


def test_vertex_on_edge_reported():
    """Test an edge passing through a foreign vertex is a violation."""
    g = parse_graph_file(
        """
        torus standard
        vertex a 0 1/2
        vertex c 1/2 1/2
        edge e1 a a : 0 1/2 ; 1 1/2
        """
    )
    report = validate_embedding(g)

    assert [(v.kind, v.ids) for v in report.violations] == [("vertex_on_edge", ("e1", "c"))]
    assert report.violations[0].detail == "segment 0 of e1"


def test_overlapping_parallel_edges_reported():
    """Test two edges sharing a segment are reported as an overlap."""
    g = parse_graph_file(
        """
        torus standard
        vertex a 1/4 1/2
        vertex b 3/4 1/2
        edge e1 a b : 1/4 1/2 ; 3/4 1/2
        edge e2 a b : 1/4 1/2 ; 3/4 1/2
        """
    )
    report = validate_embedding(g)

    assert any(v.kind == "overlap" for v in report.violations)


def test_vertex_collision_reported():
    """Test two vertices at the same point are reported."""
    g = TorusGraph(
        torus=TorusKind.STANDARD,
        vertices={"a": TorusPoint(Fraction(1, 2), Fraction(0)), "b": TorusPoint(Fraction(1, 2), Fraction(0))},
    )
    report = validate_embedding(g)

    assert [v.kind for v in report.violations] == ["vertex_collision"]


def test_violations_are_deterministic():
    """Test two runs over the same input give identical reports."""
    g = parse_graph_file(
        """
        torus standard
        vertex a 0 1/2
        vertex b 1/2 0
        edge e1 a a : 0 1/2 ; 1 1/2
        edge e2 b b : 1/2 0 ; 1/2 1
        """
    )
    assert validate_embedding(g) == validate_embedding(g)


def test_polyline_not_ending_at_translate_is_structural():
    """Test an edge ending off every translate of its head raises StructuralError."""
    half = Fraction(1, 2)
    g = TorusGraph(
        torus=TorusKind.STANDARD,
        vertices={"a": TorusPoint(Fraction(0), half), "b": TorusPoint(half, half)},
        edges={"e1": EdgeGeometry(u="a", v="b", polyline=((Fraction(0), half), (Fraction(1, 3), half)))},
    )
    with pytest.raises(StructuralError):
        validate_embedding(g)


def test_unknown_vertex_is_structural():
    """Test an edge naming a missing vertex is rejected on construction."""
    with pytest.raises(StructuralError):
        TorusGraph(
            torus=TorusKind.STANDARD,
            vertices={"a": TorusPoint(Fraction(0), Fraction(0))},
            edges={"e1": EdgeGeometry(u="a", v="zz", polyline=((Fraction(0), Fraction(0)), (Fraction(1), Fraction(0))))},
        )


def test_vertex_outside_domain_is_structural():
    """Test vertex coordinates must lie in [0,1)."""
    with pytest.raises(StructuralError):
        TorusPoint(Fraction(1), Fraction(0))


def test_edge_class(load):
    """Test the lift translation of each edge."""
    hopf = load("hopf-pair")
    assert edge_class(hopf, "e1") == (1, 1)

    trefoil = load("trefoil-c3")
    assert [edge_class(trefoil, e) for e in trefoil.edge_ids()] == [(0, 1), (1, 1), (1, 1)]


def test_reversed_edge_negates_class(load):
    """Test traversing an edge backwards negates its class."""
    g = load("trefoil-c3")
    flipped = TorusGraph(
        torus=g.torus,
        vertices=dict(g.vertices),
        edges={**g.edges, "e2": g.reversed_edge("e2")},
    )
    assert edge_class(flipped, "e2") == (-1, -1)
    assert validate_embedding(flipped).ok


def test_components_ordered_by_lowest_vertex(load):
    """Test components split disjoint pieces and keep id order."""
    parts = components(load("hopf-pair"))
    assert [p.vertex_ids() for p in parts] == [["a"], ["b"]]
    assert [p.edge_ids() for p in parts] == [["e1"], ["e2"]]

    assert len(components(load("hopf-joined"))) == 1
