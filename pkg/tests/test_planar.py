"""
Tests for triangulation validation, rotation recovery and contraction towards a1
"""

import logging

import pytest
from hypothesis import given, settings, strategies as st

from trikit.core.errors import ContractionError, RotationRecoveryError, TriangulationError
from trikit.core.schema import RotationSystem, SimpleGraph, Triangulation, TriangulationFailure, ValidationReport
from trikit.oracle.corpus import OUTER, four_cycle, icosahedron, k33, k33_plus_edges, k4, k5, k5_minus_edge, octahedron
from trikit.oracle.generator import random_stacked_triangulation
from trikit.planar.contraction import contract, fan_chords, select_contractible
from trikit.planar.rotation import neighborhood_cycles, orient_to_outer, recover_rotation, rotation_from_faces
from trikit.planar.triangulation import (
    faces,
    neighbor_cycle,
    require_triangulation,
    trace_faces,
    validate_triangulation,
)


OCTAHEDRON_ROTATION = RotationSystem.from_lists({
    "a1": ["x3", "x2", "a3", "a2"],
    "a2": ["a1", "a3", "x1", "x3"],
    "a3": ["x2", "x1", "a2", "a1"],
    "x1": ["a2", "a3", "x2", "x3"],
    "x2": ["x3", "x1", "a3", "a1"],
    "x3": ["a1", "a2", "x1", "x2"],
})


def _k3():
    graph = SimpleGraph.from_edges(OUTER, [("a1", "a2"), ("a2", "a3"), ("a1", "a3")])
    return require_triangulation(graph, recover_rotation(graph, OUTER), OUTER)


# === VALIDATION === #

def test_k4_is_a_triangulation():
    tri = k4()

    print("=== K4 ===")
    for v in tri.graph.vertices:
        print(f"  {v}: {' '.join(tri.rotation.cycles[v])}")

    assert tri.n == 4 and tri.edge_count == 6
    assert (tri.a1, tri.a2, tri.a3) == OUTER
    assert tri.rotation.succ("a2", "a1") == "a3"
    walks = trace_faces(tri.rotation)
    assert len(walks) == 4
    assert all(len(walk) == 3 for walk in walks)


def test_k3_has_two_faces_on_one_vertex_set():
    tri = _k3()
    face_set = faces(tri)

    assert len(face_set) == 2
    assert face_set.bounded == (("a1", "a3", "a2"),)
    assert len(face_set.as_triple_set()) == 0


def _kind(result):
    assert isinstance(result, ValidationReport)
    return result.kind


def test_validate_triangulation_reports_each_failure():
    tri = k4()
    cycles = dict(tri.rotation.cycles)

    tiny = SimpleGraph.from_edges(["a1", "a2"], [("a1", "a2")])
    tiny_rotation = RotationSystem.from_lists({"a1": ["a2"], "a2": ["a1"]})
    assert _kind(validate_triangulation(tiny, tiny_rotation, OUTER)) == TriangulationFailure.TOO_SMALL

    assert _kind(validate_triangulation(tri.graph, tri.rotation, ("a1", "a2", "x"))) == TriangulationFailure.OUTER_NOT_TRIANGLE

    partial = RotationSystem.from_lists({v: ns for v, ns in cycles.items() if v != "v4"})
    assert _kind(validate_triangulation(tri.graph, partial, OUTER)) == TriangulationFailure.ROTATION_MISMATCH

    isolated = SimpleGraph.from_edges(["a1", "a2", "a3", "v4"], [("a1", "a2"), ("a2", "a3"), ("a1", "a3")])
    isolated_rotation = RotationSystem.from_lists({"a1": ["a3", "a2"], "a2": ["a1", "a3"], "a3": ["a2", "a1"], "v4": []})
    assert _kind(validate_triangulation(isolated, isolated_rotation, OUTER)) == TriangulationFailure.DISCONNECTED

    sparse = SimpleGraph.from_edges(
        ["a1", "a2", "a3", "v4"],
        [("a1", "a2"), ("a2", "a3"), ("a1", "a3"), ("a1", "v4"), ("a2", "v4")],
    )
    sparse_rotation = RotationSystem.from_lists({
        "a1": ["a2", "v4", "a3"], "a2": ["a1", "a3", "v4"], "a3": ["a2", "a1"], "v4": ["a1", "a2"],
    })
    report = validate_triangulation(sparse, sparse_rotation, OUTER)
    assert _kind(report) == TriangulationFailure.EDGE_COUNT
    assert report.witness == (5, 6)

    twisted = dict(cycles)
    twisted["v4"] = tuple(reversed(cycles["v4"]))
    twisted_report = validate_triangulation(tri.graph, RotationSystem.from_lists(twisted), OUTER)
    assert _kind(twisted_report) == TriangulationFailure.NON_TRIANGULAR_FACE

    mirrored = validate_triangulation(tri.graph, tri.rotation.reflected(), OUTER)
    assert _kind(mirrored) == TriangulationFailure.OUTER_FACE


def test_require_triangulation_raises_with_report():
    tri = k4()
    with pytest.raises(TriangulationError) as info:
        require_triangulation(tri.graph, tri.rotation.reflected(), OUTER)
    assert info.value.report.kind == TriangulationFailure.OUTER_FACE
    assert info.value.witness == OUTER


def test_neighbor_cycle_is_clockwise():
    tri = k4()

    assert neighbor_cycle(tri, "a1") == ["a3", "v4", "a2"]
    assert neighbor_cycle(tri, "v4") == ["a1", "a3", "a2"]
    assert neighbor_cycle(octahedron(), "a1") == ["a3", "x2", "x3", "a2"]


def test_faces_exclude_outer():
    face_set = faces(k4())

    assert len(face_set) == 4
    assert face_set.outer == OUTER
    assert face_set.as_triple_set().sorted() == [("a1", "a2", "v4"), ("a1", "a3", "v4"), ("a2", "a3", "v4")]


# === ROTATION RECOVERY === #

def test_recover_octahedron_rotation():
    tri = octahedron()

    assert tri.rotation.equivalent(OCTAHEDRON_ROTATION, allow_reflection=False)
    assert len(faces(tri)) == 8


def test_recover_icosahedron():
    tri = icosahedron()

    print(f"Icosahedron: {tri.n} vertices, {tri.edge_count} edges, {len(faces(tri))} faces")
    assert tri.n == 12
    assert tri.edge_count == 30
    assert len(faces(tri)) == 20
    assert tri.rotation.succ("u0", "t") == "u1"


def test_neighborhood_cycles():
    assert neighborhood_cycles(octahedron().graph, "a1") == [["a2", "a3", "x2", "x3"]]
    # K4 neighbourhood: three cycles, search stops at the limit
    assert len(neighborhood_cycles(k5(), "a1")) == 2
    assert len(neighborhood_cycles(k5(), "a1", limit=5)) == 3


@pytest.mark.parametrize("graph_factory, kind, witness", [
    (k5, TriangulationFailure.ROTATION_MISMATCH, ("a1",)),
    (k33, TriangulationFailure.OUTER_NOT_TRIANGLE, OUTER),
    (k33_plus_edges, TriangulationFailure.ROTATION_MISMATCH, ("a1",)),
    (four_cycle, TriangulationFailure.OUTER_NOT_TRIANGLE, OUTER),
])
def test_recover_rotation_rejects_non_triangulations(graph_factory, kind, witness):
    with pytest.raises(RotationRecoveryError) as info:
        recover_rotation(graph_factory(), OUTER)
    assert info.value.report.kind == kind
    assert info.value.witness == witness


def test_recover_rotation_rejects_non_face_outer():
    """a1 v4 a2 is a triangle of K5 - e but v5 sits inside it"""
    tri = k5_minus_edge()
    with pytest.raises(RotationRecoveryError) as info:
        recover_rotation(tri.graph, ("a1", "v4", "a2"))
    assert info.value.report.kind == TriangulationFailure.OUTER_FACE


def test_rotation_from_faces_matches_recovery():
    for tri in (k4(), octahedron(), k5_minus_edge()):
        bounded = faces(tri).bounded
        rebuilt = rotation_from_faces(tri.graph, bounded, tri.outer)
        assert rebuilt.equivalent(tri.rotation, allow_reflection=False)

        # listed orientation does not matter
        flipped = rotation_from_faces(tri.graph, [face[::-1] for face in bounded], tri.outer)
        assert flipped.equivalent(tri.rotation, allow_reflection=False)


def test_rotation_from_faces_rejects_bad_faces():
    tri = k4()
    with pytest.raises(RotationRecoveryError) as info:
        rotation_from_faces(tri.graph, [("a1", "a2", "x")], OUTER)
    assert info.value.report.kind == TriangulationFailure.NON_TRIANGULAR_FACE

    with pytest.raises(RotationRecoveryError):
        rotation_from_faces(tri.graph, faces(tri).bounded[:1], OUTER)


def test_orient_to_outer(caplog):
    tri = k4()

    assert orient_to_outer(tri.rotation, OUTER) is tri.rotation
    with caplog.at_level(logging.WARNING):
        fixed = orient_to_outer(tri.rotation.reflected(), OUTER)
    assert fixed.equivalent(tri.rotation, allow_reflection=False)
    assert "reflecting" in caplog.text


# === CONTRACTION === #

def test_select_contractible_octahedron():
    tri = octahedron()

    assert fan_chords(tri) == []
    assert select_contractible(tri) == "x2"

    smaller = contract(tri, "x2", check=True)
    print(f"After contracting x2: {smaller.n} vertices, {smaller.edge_count} edges")
    assert smaller.n == 5
    assert smaller.edge_count == 9
    assert len(faces(smaller)) == 6
    assert neighbor_cycle(smaller, "a1") == ["a3", "x1", "x3", "a2"]
    assert fan_chords(smaller) == [(1, 3)]
    assert select_contractible(smaller) == "x3"


def test_contract_stacked_vertex_gives_k4():
    tri = k5_minus_edge()

    assert neighbor_cycle(tri, "a1") == ["a3", "v4", "v5", "a2"]
    assert fan_chords(tri) == [(1, 3)]
    assert select_contractible(tri) == "v5"

    smaller = contract(tri, "v5", check=True)
    assert smaller.graph == k4().graph
    assert smaller.rotation.equivalent(k4().rotation, allow_reflection=False)


def test_contract_rejects_bad_vertices():
    with pytest.raises(ContractionError):
        contract(octahedron(), "a2")
    with pytest.raises(ContractionError):
        contract(octahedron(), "x1")
    with pytest.raises(ContractionError, match="parallel"):
        contract(k5_minus_edge(), "v4")
    with pytest.raises(TriangulationError):
        select_contractible(k4())


def test_select_contractible_reports_separating_triangle():
    """An extra a1-x1 edge makes a1 x2 x1 a separating triangle"""
    tri = octahedron()
    graph = SimpleGraph.from_edges(tri.graph.vertices, tri.graph.edges() + [("a1", "x1")])
    broken = Triangulation(graph, tri.rotation, tri.outer)

    with pytest.raises(TriangulationError) as excinfo:
        select_contractible(broken)
    print(f"Separating triangle: {excinfo.value}")
    assert excinfo.value.report.kind == TriangulationFailure.SEPARATING_TRIANGLE
    assert excinfo.value.witness == ("a1", "x2", "x1")


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=5, max_value=30), st.integers(min_value=0, max_value=2**16))
def test_stacked_triangulations_recover_and_contract(n, seed):
    """Recovery reproduces the generated embedding; contraction reaches K4"""
    tri = random_stacked_triangulation(n, seed=seed)

    recovered = recover_rotation(tri.graph, tri.outer)
    assert recovered.equivalent(tri.rotation, allow_reflection=False)

    current = tri
    while current.n > 4:
        w = select_contractible(current)
        current = contract(current, w, check=True)
        assert len(faces(current)) == 2 * current.n - 4
    assert current.edge_count == 6
    assert set(current.outer) <= set(current.graph.vertices)


def run_planar_tests():
    """Run the fixture-free planar tests"""
    test_k4_is_a_triangulation()
    test_recover_icosahedron()
    test_select_contractible_octahedron()
    print("Planar tests completed")


if __name__ == "__main__":
    run_planar_tests()
