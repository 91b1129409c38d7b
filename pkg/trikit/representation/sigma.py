"""
The graph and triple system of a standard representation

sigma2(R): xy is an edge iff every other vertex z lies strictly above both x
and y in some order. sigma3(R): xyw is a triple iff every vertex z (x, y, w
included) lies weakly above all three in some order.

Both are evaluated by their literal definitions; numpy only vectorizes the
quantifier over z.
"""

import logging
from typing import FrozenSet, Iterable, Optional, Set

import numpy as np

from trikit.core.errors import GraphError
from trikit.core.schema import SimpleGraph, StandardRepresentation, TripleSet, VertexId


logger = logging.getLogger(__name__)


def sigma2(rep: StandardRepresentation) -> SimpleGraph:
    """
    Build the graph of a representation by its definition (cubic in n).

    A pair p, q is blocked when some third vertex z sits below max(p, q) in
    all three orders; the edges are the unblocked pairs.
    """
    ranks = rep.rank_matrix.astype(np.int32)
    n = rep.n
    pair_max = np.maximum(ranks[:, :, None], ranks[:, None, :])   # (3, n, n)

    blocked = np.zeros((n, n), dtype=bool)
    for z in range(n):
        below = np.all(ranks[:, z, None, None] < pair_max, axis=0)
        below[z, :] = False
        below[:, z] = False
        blocked |= below

    np.fill_diagonal(blocked, True)
    labels = rep.labels
    adj = {labels[p]: frozenset(labels[q] for q in np.flatnonzero(~blocked[p])) for p in range(n)}
    graph = SimpleGraph(adj=adj)
    logger.debug(f"sigma2: {n} vertices, {graph.edge_count} edges")
    return graph


def sigma2_neighbors(rep: StandardRepresentation, vertex: VertexId) -> FrozenSet[VertexId]:
    """Neighbourhood of one vertex in sigma2(R), in quadratic time."""
    ranks = rep.rank_matrix
    p = rep.index[vertex]
    pair_max = np.maximum(ranks[:, p, None], ranks)               # (3, n) over q

    # below[z, q]: z is below max(p, q) in every order
    below = np.all(ranks[:, :, None] < pair_max[:, None, :], axis=0)
    below[p, :] = False
    np.fill_diagonal(below, False)
    blocked = below.any(axis=0)
    blocked[p] = True
    return frozenset(rep.labels[q] for q in np.flatnonzero(~blocked))


def is_sigma2_edge(rep: StandardRepresentation, x: VertexId, y: VertexId) -> bool:
    """Single-pair definitional check."""
    if x == y:
        return False
    for z in rep.universe:
        if z == x or z == y:
            continue
        if not any(o.rank[z] > o.rank[x] and o.rank[z] > o.rank[y] for o in rep.orders):
            return False
    return True


def sigma3_predicate(rep: StandardRepresentation, x: VertexId, y: VertexId, w: VertexId) -> bool:
    """
    Raw triple-system membership: every z in V is weakly above x, y and w in some order.

    z ranges over all of V, x, y and w included.
    """
    if len({x, y, w}) != 3:
        raise GraphError(f"Triple ({x}, {y}, {w}) needs three distinct vertices")
    for z in rep.universe:
        if not any(o.rank[z] >= max(o.rank[x], o.rank[y], o.rank[w]) for o in rep.orders):
            return False
    return True


def sigma3(rep: StandardRepresentation, graph: Optional[SimpleGraph] = None) -> TripleSet:
    """
    The triple system of R, outer triple excluded.

    Every member spans a triangle of sigma2(R) (taking z = w in the predicate
    puts w above x and y in some order, so xy is an edge, and symmetrically),
    so only those triangles are scanned. The outer triple is dropped after the
    scan; the predicate itself accepts it only when n = 3.

    Args:
        rep: The representation
        graph: sigma2(rep) when already computed
    """
    if graph is None:
        graph = sigma2(rep)

    ranks = rep.rank_matrix
    index = rep.index
    triples = []
    for x, y, w in _triangles(graph):
        cols = [index[x], index[y], index[w]]
        top = ranks[:, cols].max(axis=1)                          # (3,)
        if np.all(np.any(ranks >= top[:, None], axis=0)):
            triples.append((x, y, w))

    result = TripleSet.of(triples).without(rep.apexes)
    logger.debug(f"sigma3: {len(result)} triples")
    return result


def _triangles(graph: SimpleGraph) -> Iterable[tuple]:
    """Each triangle once, as vertices in natural order."""
    order = {v: k for k, v in enumerate(graph.vertices)}
    for u in graph.vertices:
        for v in graph.neighbors(u):
            if order[v] <= order[u]:
                continue
            for w in graph.neighbors(u) & graph.neighbors(v):
                if order[w] > order[v]:
                    yield (u, v, w)


def contract_vertex(graph: SimpleGraph, keep: VertexId, remove: VertexId) -> SimpleGraph:
    """
    Contract the edge keep-remove, the merged vertex keeping the label `keep`.

    Parallel edges merge, so the result is simple on V minus `remove`.

    Raises:
        GraphError: If keep-remove is not an edge.
    """
    if not graph.has_edge(keep, remove):
        raise GraphError(f"Cannot contract non-edge ({keep}, {remove})")

    removed_neighbors: Set[VertexId] = set(graph.adj[remove])
    adj = {}
    for v, ns in graph.adj.items():
        if v == remove:
            continue
        if v == keep:
            adj[v] = frozenset((ns | removed_neighbors) - {keep, remove})
        elif v in removed_neighbors:
            adj[v] = frozenset((ns - {remove}) | {keep})
        else:
            adj[v] = ns
    return SimpleGraph(adj=adj)
