"""
Recovering a rotation system for an abstract triangulation

In a planar triangulation the neighbourhood of every vertex induces a graph
with exactly one Hamiltonian cycle, and that cycle is the vertex's rotation up
to direction. recover_rotation finds these cycles by backtracking, then fixes
the directions so that neighbouring rotations agree and the outer face traces
as (a1, a2, a3). rotation_from_faces does the same from a face list.
"""

import logging
from collections import deque
from typing import Dict, FrozenSet, Iterable, List, Optional, Sequence, Set

from trikit.core.errors import RotationRecoveryError
from trikit.core.schema import (
    RotationSystem,
    SimpleGraph,
    TriangulationFailure,
    ValidationReport,
    VertexId,
    sort_vertices,
)
from trikit.planar.triangulation import validate_triangulation


logger = logging.getLogger(__name__)


def _fail(kind: TriangulationFailure, message: str, witness: tuple = ()) -> RotationRecoveryError:
    return RotationRecoveryError(f"not a triangulation: {message}", ValidationReport(kind, message, witness))


# === HAMILTONIAN CYCLES === #

def neighborhood_cycles(graph: SimpleGraph, v: VertexId, limit: int = 2) -> List[List[VertexId]]:
    """
    Hamiltonian cycles of the subgraph induced by the neighbours of v.

    Each cycle is reported once (up to rotation and reflection), starting at
    the naturally smallest neighbour. The search stops after `limit` cycles.
    """
    members = graph.neighbors(v)
    if len(members) < 3:
        # two neighbours have a single trivial cycle when adjacent
        ring = sort_vertices(members)
        if len(ring) == 2 and graph.has_edge(ring[0], ring[1]):
            return [ring]
        return []

    link = {u: graph.neighbors(u) & members for u in members}
    order = {u: k for k, u in enumerate(sort_vertices(members))}
    start = sort_vertices(members)[0]
    found: List[List[VertexId]] = []

    path = [start]
    unvisited = set(members) - {start}

    def viable() -> bool:
        # every unvisited vertex needs two usable neighbours, and the
        # unvisited part must stay reachable from the path end
        end = path[-1]
        for u in unvisited:
            usable = sum(1 for x in link[u] if x in unvisited or x == end or x == start)
            if usable < 2:
                return False
        if not unvisited:
            return True
        if not (link[start] & unvisited):
            return False
        reached = set()
        queue = deque(x for x in link[end] if x in unvisited)
        reached.update(queue)
        while queue:
            x = queue.popleft()
            for y in link[x]:
                if y in unvisited and y not in reached:
                    reached.add(y)
                    queue.append(y)
        return len(reached) == len(unvisited)

    def extend() -> None:
        if len(found) >= limit:
            return
        end = path[-1]
        if not unvisited:
            # each undirected cycle is met in both directions; keep one
            if start in link[end] and order[path[1]] < order[end]:
                found.append(list(path))
            return
        for nxt in sort_vertices(link[end] & unvisited):
            path.append(nxt)
            unvisited.discard(nxt)
            if viable():
                extend()
            unvisited.add(nxt)
            path.pop()
            if len(found) >= limit:
                return

    extend()
    return found


# === ORIENTATION === #

def _orient(
    graph: SimpleGraph,
    cycles: Dict[VertexId, List[VertexId]],
    outer: Sequence[VertexId]
) -> RotationSystem:
    """
    Direct the undirected cycles consistently.

    a1 is oriented so that succ_{a1}(a3) = a2; then, breadth first, a
    neighbour v of an oriented vertex u must satisfy succ_v(u) = pred_u(v).
    """
    a1, a2, a3 = outer
    ring = cycles[a1]
    k = ring.index(a3)
    if ring[(k + 1) % len(ring)] != a2:
        if ring[(k - 1) % len(ring)] != a2:
            raise _fail(
                TriangulationFailure.OUTER_FACE,
                f"{a3} and {a2} are not consecutive around {a1}, so ({a1}, {a2}, {a3}) is not a face",
                tuple(outer),
            )
        ring = ring[::-1]

    oriented: Dict[VertexId, List[VertexId]] = {a1: ring}
    positions = {a1: {x: i for i, x in enumerate(ring)}}

    def succ(v: VertexId, x: VertexId) -> VertexId:
        r = oriented[v]
        return r[(positions[v][x] + 1) % len(r)]

    def pred(v: VertexId, x: VertexId) -> VertexId:
        r = oriented[v]
        return r[(positions[v][x] - 1) % len(r)]

    queue = deque([a1])
    while queue:
        u = queue.popleft()
        for v in oriented[u]:
            target = pred(u, v)
            if v in oriented:
                if succ(v, u) != target:
                    raise _fail(
                        TriangulationFailure.ROTATION_MISMATCH,
                        f"orientation conflict between {u} and {v}",
                        (u, v),
                    )
                continue
            candidate = cycles[v]
            pos = {x: i for i, x in enumerate(candidate)}
            if candidate[(pos[u] + 1) % len(candidate)] != target:
                candidate = candidate[::-1]
                pos = {x: i for i, x in enumerate(candidate)}
                if candidate[(pos[u] + 1) % len(candidate)] != target:
                    raise _fail(
                        TriangulationFailure.ROTATION_MISMATCH,
                        f"no orientation of {v} agrees with {u}",
                        (u, v),
                    )
            oriented[v] = candidate
            positions[v] = pos
            queue.append(v)

    if len(oriented) != graph.n:
        missing = sort_vertices(set(graph.adj) - set(oriented))[0]
        raise _fail(TriangulationFailure.DISCONNECTED, f"vertex {missing} is unreachable from {a1}", (missing,))

    return RotationSystem.from_lists(oriented)


def _finish(graph: SimpleGraph, rotation: RotationSystem, outer: Sequence[VertexId]) -> RotationSystem:
    result = validate_triangulation(graph, rotation, outer)
    if isinstance(result, ValidationReport):
        raise RotationRecoveryError(f"not a triangulation: {result.message}", result)
    return rotation


def _check_outer(graph: SimpleGraph, outer: Sequence[VertexId]) -> tuple:
    outer = tuple(outer)
    if graph.n < 3:
        raise _fail(TriangulationFailure.TOO_SMALL, f"a triangulation needs at least 3 vertices, got {graph.n}",
                    (graph.n,))
    if len(outer) != 3 or not graph.is_triangle(outer):
        raise _fail(TriangulationFailure.OUTER_NOT_TRIANGLE, f"outer {outer} is not a triangle of the graph", outer)
    return outer


def recover_rotation(graph: SimpleGraph, outer: Sequence[VertexId]) -> RotationSystem:
    """
    Reconstruct the rotation system of an abstract planar triangulation.

    Args:
        graph: A maximal planar graph
        outer: (a1, a2, a3), a triangle that must be a face

    Returns:
        RotationSystem in which the outer face traces as (a1, a2, a3)

    Raises:
        RotationRecoveryError: If some neighbourhood has no Hamiltonian cycle
            or more than one, if the cycles cannot be oriented consistently,
            or if the result fails validation.
    """
    outer = _check_outer(graph, outer)

    cycles: Dict[VertexId, List[VertexId]] = {}
    for v in graph.vertices:
        found = neighborhood_cycles(graph, v, limit=2)
        if len(found) != 1:
            what = "no Hamiltonian cycle" if not found else "several Hamiltonian cycles"
            raise _fail(
                TriangulationFailure.ROTATION_MISMATCH,
                f"neighbourhood of {v} has {what}",
                (v,),
            )
        cycles[v] = found[0]

    rotation = _orient(graph, cycles, outer)
    logger.debug(f"Recovered rotation for {graph.n} vertices")
    return _finish(graph, rotation, outer)


def rotation_from_faces(
    graph: SimpleGraph,
    face_list: Iterable[Iterable[VertexId]],
    outer: Sequence[VertexId]
) -> RotationSystem:
    """
    Build a rotation system from a list of triangular faces.

    The outer triple is added when missing; the orientation of the listed
    faces is ignored and fixed as in recover_rotation.

    Raises:
        RotationRecoveryError: If the faces around some vertex do not close
            into a single cycle through all its neighbours.
    """
    outer = _check_outer(graph, outer)
    triples: Set[FrozenSet[VertexId]] = {frozenset(outer)}
    for face in face_list:
        members = frozenset(face)
        if len(members) != 3 or not graph.is_triangle(members):
            raise _fail(TriangulationFailure.NON_TRIANGULAR_FACE, f"face {tuple(face)} is not a triangle",
                        tuple(face))
        triples.add(members)

    link: Dict[VertexId, Dict[VertexId, Set[VertexId]]] = {v: {} for v in graph.adj}
    for members in triples:
        for v in members:
            x, y = tuple(members - {v})
            link[v].setdefault(x, set()).add(y)
            link[v].setdefault(y, set()).add(x)

    cycles: Dict[VertexId, List[VertexId]] = {}
    for v in graph.vertices:
        ring = _walk_link(link[v], graph.adj[v])
        if ring is None:
            raise _fail(
                TriangulationFailure.ROTATION_MISMATCH,
                f"faces around {v} do not form one cycle through its neighbours",
                (v,),
            )
        cycles[v] = ring

    rotation = _orient(graph, cycles, outer)
    return _finish(graph, rotation, outer)


def _walk_link(link: Dict[VertexId, Set[VertexId]], neighbors: FrozenSet[VertexId]) -> Optional[List[VertexId]]:
    if set(link) != set(neighbors):
        return None
    if len(neighbors) == 2:
        return sort_vertices(neighbors)
    if any(len(ns) != 2 for ns in link.values()):
        return None

    start = sort_vertices(neighbors)[0]
    ring = [start]
    prev, cur = start, sort_vertices(link[start])[0]
    while cur != start:
        ring.append(cur)
        prev, cur = cur, next(x for x in link[cur] if x != prev)
    return ring if len(ring) == len(neighbors) else None


def orient_to_outer(rotation: RotationSystem, outer: Sequence[VertexId]) -> RotationSystem:
    """
    Reflect a supplied rotation whose outer face traces as (a1, a3, a2).

    Rotations that mention neither orientation are returned unchanged and
    left to validation.
    """
    a1, a2, a3 = tuple(outer)
    if not (rotation.has_dart(a2, a1) and rotation.has_dart(a2, a3)):
        return rotation
    if rotation.succ(a2, a1) == a3:
        return rotation
    if rotation.pred(a2, a1) == a3:
        logger.warning(f"Rotation traces the outer face as ({a1}, {a3}, {a2}); reflecting it")
        return rotation.reflected()
    return rotation
