"""
Hand-coded graphs for tests and the oracle

Triangulations are given as edge lists with an outer triangle and embedded by
rotation recovery. The non-triangulations (K5, K3,3 and friends) are plain
graphs meant to be rejected.
"""

from itertools import combinations, product
from typing import List

from trikit.core.schema import SimpleGraph, Triangulation, Triple, VertexId
from trikit.planar.rotation import recover_rotation
from trikit.planar.triangulation import require_triangulation


OUTER: Triple = ("a1", "a2", "a3")


def _triangulation(vertices: List[VertexId], edges, outer: Triple = OUTER) -> Triangulation:
    graph = SimpleGraph.from_edges(vertices, edges)
    return require_triangulation(graph, recover_rotation(graph, outer), outer)


def _complete(vertices: List[VertexId]):
    return list(combinations(vertices, 2))


def small_labels(n: int) -> List[VertexId]:
    """a1, a2, a3, v4, ..., vn"""
    return list(OUTER[:n]) + [f"v{k}" for k in range(4, n + 1)]


def k4() -> Triangulation:
    vertices = small_labels(4)
    return _triangulation(vertices, _complete(vertices))


def octahedron() -> Triangulation:
    """x_i is antipodal to a_i."""
    vertices = ["a1", "a2", "a3", "x1", "x2", "x3"]
    antipodal = {frozenset(("a1", "x1")), frozenset(("a2", "x2")), frozenset(("a3", "x3"))}
    edges = [e for e in _complete(vertices) if frozenset(e) not in antipodal]
    return _triangulation(vertices, edges)


def icosahedron() -> Triangulation:
    """Top t, upper ring u0-u4, lower ring l0-l4, bottom b; outer face (t, u0, u1)."""
    vertices = ["t"] + [f"u{i}" for i in range(5)] + [f"l{i}" for i in range(5)] + ["b"]
    edges = []
    for i in range(5):
        j = (i + 1) % 5
        edges += [
            ("t", f"u{i}"),
            (f"u{i}", f"u{j}"),
            (f"u{i}", f"l{i}"),
            (f"u{i}", f"l{j}"),
            (f"l{i}", f"l{j}"),
            (f"l{i}", "b"),
        ]
    return _triangulation(vertices, edges, outer=("t", "u0", "u1"))


def k5_minus_edge() -> Triangulation:
    """K5 without a3-v5: v5 is stacked in the face a1 v4 a2."""
    vertices = small_labels(5)
    edges = [e for e in _complete(vertices) if set(e) != {"a3", "v5"}]
    return _triangulation(vertices, edges)


def small_graphs(n: int) -> List[SimpleGraph]:
    """Every graph on small_labels(n) containing the triangle a1 a2 a3, 3 <= n <= 5."""
    if not 3 <= n <= 5:
        raise ValueError(f"small_graphs covers 3 to 5 vertices, got {n}")
    vertices = small_labels(n)
    fixed = _complete(list(OUTER))
    optional = [e for e in _complete(vertices) if e not in fixed]
    graphs = []
    for mask in product((False, True), repeat=len(optional)):
        chosen = [e for e, keep in zip(optional, mask) if keep]
        graphs.append(SimpleGraph.from_edges(vertices, fixed + chosen))
    return graphs


# === NON-TRIANGULATIONS === #

def k5() -> SimpleGraph:
    vertices = small_labels(5)
    return SimpleGraph.from_edges(vertices, _complete(vertices))


def k33() -> SimpleGraph:
    """Sides {a1, a2, a3} and {v4, v5, v6}; the outer triple is not a triangle."""
    vertices = small_labels(6)
    return SimpleGraph.from_edges(vertices, list(product(OUTER, vertices[3:])))


def k33_plus_edges() -> SimpleGraph:
    """K3,3 plus the triangle a1 a2 a3: 3n - 6 edges, but not planar."""
    vertices = small_labels(6)
    return SimpleGraph.from_edges(vertices, list(product(OUTER, vertices[3:])) + _complete(list(OUTER)))


def four_cycle() -> SimpleGraph:
    vertices = small_labels(4)
    return SimpleGraph.from_edges(vertices, [("a1", "a2"), ("a2", "a3"), ("a3", "v4"), ("v4", "a1")])
