"""
Planar triangulations as rotation systems

Face tracing, validation with per-condition failure reports, the neighbour
cycle of a vertex and face extraction. Rotations are counterclockwise; the dart
after u->v is v->succ_v(u), so bounded faces trace counterclockwise and the
outer face of a valid triangulation traces as (a1, a2, a3).
"""

import logging
from typing import List, Sequence, Tuple, Union

from trikit.core.errors import TriangulationError
from trikit.core.schema import (
    FaceSet,
    RotationSystem,
    SimpleGraph,
    Triangulation,
    TriangulationFailure,
    Triple,
    ValidationReport,
    VertexId,
    sort_vertices,
)


logger = logging.getLogger(__name__)


def trace_faces(rotation: RotationSystem) -> List[Tuple[VertexId, ...]]:
    """
    Partition the darts of a rotation system into face walks.

    Each face is the sequence of tail vertices of its darts, starting at the
    first dart met when scanning vertices in natural order.
    """
    seen = set()
    walks = []
    for dart in rotation.darts():
        if dart in seen:
            continue
        walk = []
        u, v = dart
        while (u, v) not in seen:
            seen.add((u, v))
            walk.append(u)
            u, v = v, rotation.succ(v, u)
        walks.append(tuple(walk))
    return walks


def _report(kind: TriangulationFailure, message: str, witness: tuple = ()) -> ValidationReport:
    return ValidationReport(kind, message, witness)


def validate_triangulation(
    graph: SimpleGraph,
    rotation: RotationSystem,
    outer: Sequence[VertexId]
) -> Union[Triangulation, ValidationReport]:
    """
    Check that (graph, rotation, outer) is a planar triangulation with outer face (a1, a2, a3).

    Conditions are checked in a fixed sequence and the first failure is
    reported: size, outer triangle, rotation against adjacency, connectivity,
    edge count, face lengths, Euler's formula, outer face orientation.
    """
    outer = tuple(outer)
    n = graph.n
    if n < 3:
        return _report(TriangulationFailure.TOO_SMALL, f"a triangulation needs at least 3 vertices, got {n}", (n,))

    if len(outer) != 3 or not graph.is_triangle(outer):
        return _report(TriangulationFailure.OUTER_NOT_TRIANGLE, f"outer {outer} is not a triangle of the graph", outer)

    if set(rotation.cycles) != set(graph.adj):
        odd = sort_vertices(set(rotation.cycles) ^ set(graph.adj))[0]
        return _report(TriangulationFailure.ROTATION_MISMATCH, f"rotation and graph disagree on vertex {odd}", (odd,))
    for v in graph.vertices:
        ring = rotation.cycles[v]
        if len(ring) != len(set(ring)) or set(ring) != graph.adj[v]:
            return _report(
                TriangulationFailure.ROTATION_MISMATCH,
                f"rotation of {v} does not list its neighbours exactly once",
                (v,),
            )

    if not graph.is_connected():
        return _report(TriangulationFailure.DISCONNECTED, "graph is disconnected")

    e = graph.edge_count
    if e != 3 * n - 6:
        return _report(TriangulationFailure.EDGE_COUNT, f"|E| = {e}, expected 3n-6 = {3 * n - 6}", (e, 3 * n - 6))

    walks = trace_faces(rotation)
    for walk in walks:
        if len(walk) != 3:
            return _report(
                TriangulationFailure.NON_TRIANGULAR_FACE,
                f"face walk {' '.join(walk)} has length {len(walk)}",
                walk,
            )

    f = len(walks)
    if n - e + f != 2:
        return _report(TriangulationFailure.EULER, f"V - E + F = {n} - {e} + {f} != 2", (n, e, f))

    a1, a2, a3 = outer
    if rotation.succ(a2, a1) != a3:
        return _report(
            TriangulationFailure.OUTER_FACE,
            f"({a1}, {a2}, {a3}) is not traced as a face in this orientation",
            outer,
        )

    return Triangulation(graph=graph, rotation=rotation, outer=outer)


def require_triangulation(
    graph: SimpleGraph,
    rotation: RotationSystem,
    outer: Sequence[VertexId]
) -> Triangulation:
    """Validate, raising TriangulationError with the report on failure."""
    result = validate_triangulation(graph, rotation, outer)
    if isinstance(result, ValidationReport):
        raise TriangulationError(f"not a triangulation: {result.message}", result)
    return result


def neighbor_cycle(tri: Triangulation, v: VertexId) -> List[VertexId]:
    """
    Clockwise neighbour order of v.

    For a1 the cycle starts at a3 and ends at a2 (the fan w_0 ... w_{m+1});
    for any other vertex it starts at the naturally smallest neighbour.
    """
    if v == tri.a1:
        start = tri.a3
    else:
        start = sort_vertices(tri.rotation.cycles[v])[0]
    ring = tri.rotation.rotated_to(v, start)
    return [ring[0]] + ring[:0:-1]


def faces(tri: Triangulation) -> FaceSet:
    """Traced faces; the outer face is split off and the rest kept in trace order."""
    bounded: List[Triple] = []
    outer_found = False
    for walk in trace_faces(tri.rotation):
        # K3 has two faces on the outer vertex set; only the a1 -> a2 -> a3 walk is outer
        if not outer_found and _is_outer_walk(walk, tri.outer):
            outer_found = True
            continue
        bounded.append(walk)
    return FaceSet(bounded=tuple(bounded), outer=tri.outer)


def _is_outer_walk(walk: Tuple[VertexId, ...], outer: Triple) -> bool:
    if len(walk) != 3 or outer[0] not in walk:
        return False
    k = walk.index(outer[0])
    return walk[k:] + walk[:k] == tuple(outer)
