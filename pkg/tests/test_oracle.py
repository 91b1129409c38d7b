"""
Tests for the brute-force search and the stacked triangulation generator
"""

import pytest

from trikit.construct.embedder import embed
from trikit.construct.realizer import base_representation, realize
from trikit.core.errors import GraphError, SearchCapExceeded
from trikit.core.schema import SimpleGraph
from trikit.oracle.corpus import (
    OUTER,
    four_cycle,
    icosahedron,
    k33_plus_edges,
    k4,
    k5,
    k5_minus_edge,
    octahedron,
    small_graphs,
)
from trikit.oracle.generator import generate_corpus, make_rng, random_stacked_triangulation
from trikit.oracle.search import is_planar_triangulation, search_representation, standard_candidates
from trikit.planar.rotation import recover_rotation
from trikit.planar.triangulation import faces, require_triangulation
from trikit.representation.fans import fan_of_apex
from trikit.representation.orders import validate
from trikit.representation.sigma import sigma2, sigma3


K3_GRAPH = SimpleGraph.from_edges(OUTER, [("a1", "a2"), ("a2", "a3"), ("a1", "a3")])


# === INDEPENDENT PLANARITY CHECK === #

def test_is_planar_triangulation():
    assert is_planar_triangulation(K3_GRAPH, OUTER)
    for tri in (k4(), octahedron(), k5_minus_edge(), icosahedron()):
        assert is_planar_triangulation(tri.graph, tri.outer)

    assert not is_planar_triangulation(k5(), OUTER)
    assert not is_planar_triangulation(k33_plus_edges(), OUTER)
    assert not is_planar_triangulation(four_cycle(), OUTER)
    assert not is_planar_triangulation(k5_minus_edge().graph, ("a1", "v4", "a2"))


# === SEARCH === #

def test_standard_candidates_order():
    candidates = standard_candidates(["a1", "a2", "a3", "v4"], "a1", ("a3", "a2"))
    assert candidates == [("a2", "a3", "v4", "a1"), ("a3", "a2", "v4", "a1")]


def test_search_pins_base_tables():
    """The first representation found for K3 and K4 is the realizer's base table"""
    k3_tri = require_triangulation(K3_GRAPH, recover_rotation(K3_GRAPH, OUTER), OUTER)

    print("=== SEARCH ===")
    for tri in (k3_tri, k4()):
        found = search_representation(tri.graph, tri.outer)
        print(f"n={tri.n}: {found.as_lists()}")
        assert found == base_representation(tri)


@pytest.mark.parametrize("graph_factory", [k5, four_cycle, k33_plus_edges])
def test_search_finds_nothing_for_non_triangulations(graph_factory):
    assert search_representation(graph_factory(), OUTER) is None


def test_search_octahedron_matches_definitions():
    tri = octahedron()
    found = search_representation(tri.graph, tri.outer)

    assert found is not None
    assert sigma2(found) == tri.graph
    assert sigma3(found) == faces(tri).as_triple_set()
    assert fan_of_apex(found, tri.graph).all_hold


@pytest.mark.parametrize("n", [3, 4, 5])
def test_search_agrees_with_planarity_on_all_small_graphs(n):
    """Both directions of the correspondence, exhaustively"""
    graphs = small_graphs(n)
    hits = 0
    for graph in graphs:
        planar = is_planar_triangulation(graph, OUTER)
        found = search_representation(graph, OUTER)
        assert (found is not None) == planar, graph.edges()
        if found is None:
            continue
        hits += 1
        assert validate(found.orders) == found
        assert found.apexes == OUTER
        assert sigma2(found) == graph
        assert fan_of_apex(found, graph).all_hold

        tri = require_triangulation(graph, recover_rotation(graph, OUTER), OUTER)
        assert sigma2(realize(tri)) == graph
        assert embed(found).rotation.equivalent(tri.rotation, allow_reflection=False)
    print(f"n={n}: {hits} of {len(graphs)} graphs are triangulations")
    assert hits > 0


def test_search_cap_and_arguments():
    tri = octahedron()
    with pytest.raises(SearchCapExceeded):
        search_representation(tri.graph, tri.outer, cap=5)
    with pytest.raises(GraphError):
        search_representation(tri.graph, ("a1", "a2", "q"))
    with pytest.raises(GraphError):
        search_representation(tri.graph, ("a1", "a1", "a2"))


def test_search_is_independent_of_workers():
    tri = k5_minus_edge()
    serial = search_representation(tri.graph, tri.outer, workers=1)
    parallel = search_representation(tri.graph, tri.outer, workers=2)

    assert serial is not None
    assert parallel == serial


# === GENERATOR === #

def test_generator_small_cases():
    tri = random_stacked_triangulation(4, seed=3)
    assert tri.graph == k4().graph
    assert tri.outer == OUTER

    with pytest.raises(GraphError):
        random_stacked_triangulation(3)


def test_generator_counts():
    tri = random_stacked_triangulation(10, seed=7)

    print(f"Stacked n=10 seed=7: {tri.edge_count} edges")
    assert tri.n == 10
    assert tri.edge_count == 24
    assert len(faces(tri)) == 16
    assert is_planar_triangulation(tri.graph, tri.outer)


def test_generator_is_deterministic():
    first = random_stacked_triangulation(25, seed=11)
    second = random_stacked_triangulation(25, seed=11)
    assert first == second

    rng = make_rng(11, 25)
    assert random_stacked_triangulation(25, rng=rng) == first

    corpus = generate_corpus([6, 9, 12], seed=5)
    assert [tri.n for tri in corpus] == [6, 9, 12]
    assert generate_corpus([6, 9, 12], seed=5) == corpus


def run_oracle_tests():
    """Run the quick oracle tests"""
    test_is_planar_triangulation()
    test_search_pins_base_tables()
    test_generator_counts()
    print("Oracle tests completed")


if __name__ == "__main__":
    run_oracle_tests()
