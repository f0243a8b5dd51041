"""Tests for grid embeddings, isotopy moves and the reduction oracle."""

import pytest

from app.enumerate.generator import connected_multigraphs, enumerate_grid_embeddings
from app.enumerate.grid import grid_violations, is_valid_grid_embedding
from app.enumerate.moves import apply_move, candidate_moves
from app.enumerate.oracle import reduction_oracle, search_reduction, terminal_rule
from app.fixtures import get_abstract_fixture
from app.homology.classes import sign_normalize
from app.homology.cycles import cycle_class, enumerate_simple_cycles
from app.schemas.grid import GridEmbedding, GridPath, Move, MoveKind, OracleOutcome
from app.schemas.homology import HomologyClass
from app.schemas.torus import AbstractGraph, TorusKind
from app.tests.helpers import bouquet_grid, crossing_bouquet_grid, parallel_bouquet_grid, trefoil_grid
from app.torus.embedding import validate_embedding
from app.utils.errors import EnumerationTruncated, InapplicableMove, StructuralError

LOOP = AbstractGraph(vertices=("w",), edges=(("e1", "w", "w"),))
ARC = AbstractGraph(vertices=("a", "b"), edges=(("e1", "a", "b"),))


def classes(e: GridEmbedding):
    g = e.to_torus_graph()
    return sorted(cycle_class(g, c).as_tuple() for c in enumerate_simple_cycles(g))


def test_fixture_grids_are_valid():
    """Test the hand-built grid embeddings are valid."""
    assert is_valid_grid_embedding(bouquet_grid())
    assert is_valid_grid_embedding(trefoil_grid())
    assert classes(trefoil_grid()) == [(2, 3)]


def test_grid_violations_report_shared_points():
    """Test two paths through the same lattice point are invalid."""
    e = GridEmbedding(
        n=3,
        torus=TorusKind.STANDARD,
        positions={"a": (0, 0), "b": (2, 2)},
        paths={
            "e1": GridPath(u="a", v="a", points=((0, 0), (0, 1), (0, 2), (0, 3))),
            "e2": GridPath(u="b", v="b", points=((2, 2), (2, 1), (1, 1), (0, 1), (-1, 1))),
        },
    )
    problems, _ = grid_violations(e)
    assert problems


def test_enumerated_loops_are_valid_and_distinct():
    """Test every loop embedding on the 3x3 grid is valid, pinned and unique."""
    found = list(enumerate_grid_embeddings(LOOP, 3, limit=100_000))
    assert found
    assert all(e.positions["w"] == (0, 0) for e in found)
    assert all(is_valid_grid_embedding(e) for e in found)
    assert len({e.key() for e in found}) == len(found)
    for e in found[:25]:
        assert validate_embedding(e.to_torus_graph()).ok


def test_enumeration_is_deterministic():
    """Test two runs give the same sequence."""
    first = [e.key() for e in enumerate_grid_embeddings(ARC, 2, limit=100_000)]
    second = [e.key() for e in enumerate_grid_embeddings(ARC, 2, limit=100_000)]
    assert first == second
    assert all(e[0][0] == ("a", (0, 0)) for e in first)


def test_enumeration_truncates_at_limit():
    """Test the per-graph limit raises after yielding that many."""
    seen = []
    with pytest.raises(EnumerationTruncated):
        for e in enumerate_grid_embeddings(get_abstract_fixture("theta3"), 3, limit=5):
            seen.append(e)
    assert len(seen) == 5


def test_enumeration_rejects_tiny_grid():
    """Test a 1x1 grid is structural."""
    with pytest.raises(StructuralError):
        list(enumerate_grid_embeddings(LOOP, 1))


def test_single_loop_on_two_by_two_grid_realises_basic_classes():
    """Test the 2x2 loops include a contractible loop, a meridian and a longitude."""
    found = list(enumerate_grid_embeddings(LOOP, 2))
    realised = {sign_normalize(HomologyClass(*cls)) for e in found for cls in classes(e)}
    assert {HomologyClass(0, 0), HomologyClass(0, 1), HomologyClass(1, 0)} <= realised


def test_edgeless_vertex_has_one_embedding():
    """Test a lone vertex is placed once, at the pinned origin."""
    lone = AbstractGraph(vertices=("v0",), edges=())
    found = list(enumerate_grid_embeddings(lone, 3))
    assert len(found) == 1
    assert found[0].positions == {"v0": (0, 0)}
    assert found[0].paths == {}


def test_k5_does_not_fit_on_two_by_two_grid():
    """Test five vertices cannot be placed on four lattice points."""
    assert list(enumerate_grid_embeddings(get_abstract_fixture("K5"), 2)) == []


def test_connected_multigraphs_small_counts():
    """Test one graph per isomorphism class: two with one edge, four with two."""
    graphs = list(connected_multigraphs(2))
    assert [len(g.edges) for g in graphs] == [1, 1, 2, 2, 2, 2]
    assert all(g.max_degree() <= 4 for g in graphs)


def test_connected_multigraphs_respect_degree_bound():
    """Test no generated graph exceeds the degree bound."""
    assert all(g.max_degree() <= 3 for g in connected_multigraphs(4, max_degree=3))


def test_cell_slide_moves_a_segment_across_a_cell():
    """Test a single-step run is replaced by the other three sides of the cell."""
    e = bouquet_grid()
    moved = apply_move(e, Move(kind=MoveKind.CELL_SLIDE, edge="e2", start=1, length=1, cell=(1, 0)))
    assert moved.paths["e2"].points == ((0, 0), (1, 0), (1, 1), (2, 1), (2, 0), (3, 0))
    assert classes(moved) == classes(e)


def test_cell_slide_into_occupied_segment_is_inapplicable():
    """Test a slide that reuses another path's segment is refused."""
    with pytest.raises(InapplicableMove):
        apply_move(bouquet_grid(), Move(kind=MoveKind.CELL_SLIDE, edge="e2", start=0, length=1, cell=(0, 0)))


def test_cell_slide_off_the_cell_is_inapplicable():
    """Test a run that does not follow the cell boundary is refused."""
    with pytest.raises(InapplicableMove):
        apply_move(bouquet_grid(), Move(kind=MoveKind.CELL_SLIDE, edge="e2", start=1, length=1, cell=(2, 2)))


def test_vertex_slide_drags_incident_paths():
    """Test moving the bouquet vertex right keeps both loop classes."""
    e = bouquet_grid()
    moved = apply_move(e, Move(kind=MoveKind.VERTEX_SLIDE, vertex="w", direction=(1, 0)))
    assert moved.positions["w"] == (1, 0)
    assert moved.paths["e2"].points == ((1, 0), (2, 0), (3, 0), (4, 0))
    assert classes(moved) == classes(e) == [(0, 1), (1, 0)]


def test_vertex_slide_wraps_around_the_domain():
    """Test sliding across the domain boundary keeps classes."""
    e = bouquet_grid()
    moved = apply_move(e, Move(kind=MoveKind.VERTEX_SLIDE, vertex="w", direction=(-1, 0)))
    assert moved.positions["w"] == (2, 0)
    assert moved.paths["e2"].points == ((2, 0), (3, 0), (4, 0), (5, 0))
    assert classes(moved) == classes(e)


def test_every_applicable_move_preserves_classes():
    """Test homology is invariant under all moves from the trefoil grid."""
    e = trefoil_grid()
    applied = 0
    for move in candidate_moves(e):
        try:
            moved = apply_move(e, move)
        except InapplicableMove:
            continue
        applied += 1
        assert is_valid_grid_embedding(moved)
        assert classes(moved) == [(2, 3)]
    assert applied > 0


def test_candidate_moves_are_deterministic():
    """Test the move order is reproducible."""
    assert list(candidate_moves(trefoil_grid())) == list(candidate_moves(trefoil_grid()))


def test_oracle_reduces_meridian_longitude_bouquet():
    """Test the bouquet reduces at once through a single crossing."""
    result = search_reduction(bouquet_grid(), budget=10)
    assert result.outcome == OracleOutcome.REDUCED
    assert result.states_explored == 1
    assert "single crossing" in result.rule


def test_oracle_reduces_arc_in_a_disc():
    """Test an arc missing a meridian circle is reduced."""
    e = GridEmbedding(
        n=3,
        torus=TorusKind.STANDARD,
        positions={"a": (0, 0), "b": (1, 0)},
        paths={"e1": GridPath(u="a", v="b", points=((0, 0), (1, 0)))},
    )
    assert terminal_rule(e).startswith("meridian")
    assert reduction_oracle(e, budget=10) == OracleOutcome.REDUCED


def test_oracle_exhausts_on_trefoil():
    """Test the knotted loop never reaches a terminal state."""
    assert terminal_rule(trefoil_grid()) is None
    result = search_reduction(trefoil_grid(), budget=40)
    assert result.outcome == OracleOutcome.EXHAUSTED
    assert result.states_explored == 40


def test_knotted_torus_uses_meridian_rule_only():
    """Test the longitude rule does not apply on a knotted torus."""
    longitude = GridEmbedding(
        n=3,
        torus=TorusKind.NONSTANDARD_KNOTTED,
        positions={"w": (0, 0)},
        paths={"e1": GridPath(u="w", v="w", points=((0, 0), (1, 0), (2, 0), (3, 0)))},
    )
    meridian = GridEmbedding(
        n=3,
        torus=TorusKind.NONSTANDARD_KNOTTED,
        positions={"w": (0, 0)},
        paths={"e1": GridPath(u="w", v="w", points=((0, 0), (0, 1), (0, 2), (0, 3)))},
    )
    assert terminal_rule(longitude) is None
    assert terminal_rule(meridian).startswith("meridian")


def test_oracle_drops_a_parallel_loop():
    """Test two parallel (1,1) loops reduce by dropping one across their thin strip."""
    e = parallel_bouquet_grid()
    assert is_valid_grid_embedding(e)
    assert classes(e) == [(1, 1), (1, 1)]
    assert terminal_rule(e) == "thin face: dropped e2; meridian: single crossing of e1 at column 0"
    result = search_reduction(e, budget=10)
    assert result.outcome == OracleOutcome.REDUCED
    assert result.states_explored == 1


def test_oracle_reduces_crossing_loops_with_disk_faces():
    """Test a (1,1) and a (1,2) loop through one vertex reduce through the disk-face rule."""
    e = crossing_bouquet_grid()
    assert is_valid_grid_embedding(e)
    assert classes(e) == [(1, 1), (1, 2)]
    assert terminal_rule(e).startswith("cellular: 1 disk faces")
    assert reduction_oracle(e, budget=10) == OracleOutcome.REDUCED


def test_disk_face_rule_needs_standard_torus():
    """Test the disk-face rule stays off on a knotted torus."""
    e = crossing_bouquet_grid()
    knotted = GridEmbedding(n=e.n, torus=TorusKind.NONSTANDARD_KNOTTED, positions=e.positions, paths=e.paths)
    assert terminal_rule(knotted) is None


def test_isolated_vertex_is_dropped_first():
    """Test an isolated vertex is removed before the remaining graph is judged."""
    e = crossing_bouquet_grid()
    with_point = GridEmbedding(n=e.n, torus=e.torus, positions={**e.positions, "z": (3, 0)}, paths=e.paths)
    assert terminal_rule(with_point).startswith("pendant: dropped vertex z; cellular")


def test_dropping_a_point_keeps_knots():
    """Test a knotted loop beside an isolated vertex still never reduces."""
    e = trefoil_grid()
    with_point = GridEmbedding(n=e.n, torus=e.torus, positions={**e.positions, "z": (2, 1)}, paths=e.paths)
    assert is_valid_grid_embedding(with_point)
    assert terminal_rule(with_point) is None
