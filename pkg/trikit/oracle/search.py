"""
Exhaustive search for standard representations of small graphs

Independent of the constructive code: its own sigma2 definition, its own
planarity check (networkx). Used to pin the base tables and to test both
directions of the correspondence on every small graph.
"""

import logging
from functools import partial
from itertools import permutations
from multiprocessing import Pool
from typing import Dict, FrozenSet, Iterator, List, Optional, Sequence, Set, Tuple

import networkx as nx

from trikit.core.constants import DEFAULT_SEARCH_CAP
from trikit.core.errors import GraphError, SearchCapExceeded
from trikit.core.schema import LinearOrder, SimpleGraph, StandardRepresentation, VertexId, sort_vertices


logger = logging.getLogger(__name__)

Sequence3 = Tuple[Tuple[VertexId, ...], Tuple[VertexId, ...], Tuple[VertexId, ...]]


# === INDEPENDENT CHECKS === #

def is_planar_triangulation(graph: SimpleGraph, outer: Sequence[VertexId]) -> bool:
    """
    Whether graph is a planar triangulation in which `outer` is a face.

    Uses networkx planarity only: a maximal planar graph has 3n - 6 edges,
    and one of its triangles is a face exactly when removing it leaves the
    rest connected.
    """
    outer = tuple(outer)
    n = graph.n
    if n < 3 or len(outer) != 3 or not graph.is_triangle(outer):
        return False
    if graph.edge_count != 3 * n - 6:
        return False

    g = graph.to_networkx()
    planar, _ = nx.check_planarity(g)
    if not planar:
        return False
    if n == 3:
        return True
    rest = g.subgraph(v for v in g.nodes if v not in outer)
    return nx.is_connected(rest)


def _edge_set(seqs: Sequence3) -> Set[FrozenSet[VertexId]]:
    """sigma2 by its definition, in plain Python."""
    ranks = [{v: k for k, v in enumerate(s)} for s in seqs]
    labels = seqs[0]
    edges = set()
    for x in labels:
        for y in labels:
            if x >= y:
                continue
            if all(any(r[z] > r[x] and r[z] > r[y] for r in ranks) for z in labels if z != x and z != y):
                edges.add(frozenset((x, y)))
    return edges


def _represents(seqs: Sequence3) -> bool:
    ranks = [{v: k for k, v in enumerate(s)} for s in seqs]
    labels = seqs[0]
    return not any(
        all(r[x] < r[y] for r in ranks)
        for x in labels for y in labels if x != y
    )


# === ENUMERATION === #

def standard_candidates(labels: Sequence[VertexId], apex: VertexId, bottom: Tuple[VertexId, VertexId]) -> List[Tuple[VertexId, ...]]:
    """
    Orders with `apex` on top and the two other apexes at the bottom.

    Listed in lexicographic order of the labels' natural ranks.
    """
    key = {v: k for k, v in enumerate(labels)}
    low = tuple(sorted(bottom, key=key.get))
    middle = [v for v in labels if v != apex and v not in bottom]
    result = []
    for pair in (low, low[::-1]):
        for mid in permutations(middle):
            result.append(pair + mid + (apex,))
    return result


def _third_orders(
    labels: Sequence[VertexId],
    edges: Set[FrozenSet[VertexId]],
    outer: Tuple[VertexId, VertexId, VertexId],
    o1: Tuple[VertexId, ...],
    o2: Tuple[VertexId, ...]
) -> Iterator[Tuple[VertexId, ...]]:
    """
    Standard third orders compatible with (o1, o2), in lexicographic order.

    before[v] holds the vertices that must precede v: y precedes x when x is
    below y in both o1 and o2, and for an edge xy every z that is not above
    both in o1 or o2 must be above both in order 3.
    """
    a1, a2, a3 = outer
    r1 = {v: k for k, v in enumerate(o1)}
    r2 = {v: k for k, v in enumerate(o2)}
    before: Dict[VertexId, Set[VertexId]] = {v: set() for v in labels}

    for x in labels:
        for y in labels:
            if x != y and r1[x] < r1[y] and r2[x] < r2[y]:
                before[x].add(y)
    for edge in edges:
        x, y = tuple(edge)
        for z in labels:
            if z in edge:
                continue
            if not (r1[z] > max(r1[x], r1[y]) or r2[z] > max(r2[x], r2[y])):
                before[z].update((x, y))

    n = len(labels)
    placed: List[VertexId] = []
    used: Set[VertexId] = set()

    def allowed(v: VertexId) -> bool:
        k = len(placed)
        if k < 2:
            return v in (a1, a2)
        if k == n - 1:
            return v == a3
        return v not in (a1, a2, a3)

    def extend() -> Iterator[Tuple[VertexId, ...]]:
        if len(placed) == n:
            yield tuple(placed)
            return
        for v in labels:
            if v in used or not allowed(v) or not before[v] <= used:
                continue
            placed.append(v)
            used.add(v)
            yield from extend()
            used.discard(v)
            placed.pop()

    yield from extend()


def _search_first_order(
    o1: Tuple[VertexId, ...],
    labels: Tuple[VertexId, ...],
    edges: FrozenSet[FrozenSet[VertexId]],
    outer: Tuple[VertexId, VertexId, VertexId],
    second: Tuple[Tuple[VertexId, ...], ...]
) -> Optional[Sequence3]:
    """First (o1, o2, o3) with sigma2 equal to `edges`, for a fixed o1."""
    target = set(edges)
    for o2 in second:
        for o3 in _third_orders(labels, target, outer, o1, o2):
            seqs = (o1, o2, o3)
            if _represents(seqs) and _edge_set(seqs) == target:
                return seqs
    return None


def search_representation(
    graph: SimpleGraph,
    outer: Sequence[VertexId],
    cap: int = DEFAULT_SEARCH_CAP,
    workers: int = 1
) -> Optional[StandardRepresentation]:
    """
    Find the first standard representation R with apexes `outer` and sigma2(R) = graph.

    Candidates are enumerated order 1 first, each order in lexicographic
    order of naturally sorted labels, so the answer does not depend on
    `workers`.

    Args:
        graph: The graph to represent
        outer: (a1, a2, a3)
        cap: Largest vertex count searched
        workers: Processes splitting the order 1 candidates

    Returns:
        The representation, or None when none exists.

    Raises:
        SearchCapExceeded: If the graph has more than `cap` vertices.
        GraphError: If an outer vertex is not in the graph.
    """
    n = graph.n
    if n > cap:
        raise SearchCapExceeded(f"search is capped at {cap} vertices, graph has {n}")
    outer = tuple(outer)
    if len(outer) != 3 or len(set(outer)) != 3:
        raise GraphError(f"outer {outer} needs three distinct vertices")
    for v in outer:
        if v not in graph:
            raise GraphError(f"outer vertex {v!r} is not in the graph")
    if n < 3:
        return None

    a1, a2, a3 = outer
    labels = tuple(sort_vertices(graph.adj))
    edges = frozenset(frozenset(e) for e in graph.edges())
    first = standard_candidates(labels, a1, (a2, a3))
    second = tuple(standard_candidates(labels, a2, (a1, a3)))
    task = partial(_search_first_order, labels=labels, edges=edges, outer=outer, second=second)

    logger.debug(f"search: {len(first)} x {len(second)} order pairs on {n} vertices, {workers} worker(s)")
    found: Optional[Sequence3] = None
    if workers > 1:
        with Pool(processes=workers) as pool:
            # imap keeps candidate order, so the first hit is the global minimum
            for result in pool.imap(task, first):
                if result is not None:
                    found = result
                    break
    else:
        for o1 in first:
            found = task(o1)
            if found is not None:
                break

    if found is None:
        logger.debug("search: no representation")
        return None
    orders = tuple(LinearOrder.from_sequence(s) for s in found)
    return StandardRepresentation(orders=orders)
