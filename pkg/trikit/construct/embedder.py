"""
Planar embeddings of standard representations

embed builds the rotation system of sigma2(R) by re-adding vertices in order 1.
Suppressing b = second maximum of order 1 repeatedly removes the vertices of
order 1 from the top down, so the insertion sequence is order 1 read bottom up
from its third element, and the intermediate representations never need to be
built: comparisons in R agree with comparisons in every restriction.

Inserting b: the fan of a1, sorted by order 2, is w_0 ... w_{i-1} z_1 ... z_d
w_{i+1} ... w_{m+1}. w_{i-1} is the last fan vertex below b in order 2 and
w_{i+1} the first later fan vertex below b in order 3. b goes between them
around a1 and takes over the edges a1 z_j.
"""

import logging
from typing import Dict, List

from trikit.core.errors import InvariantViolation
from trikit.core.schema import (
    RotationSystem,
    SimpleGraph,
    StandardRepresentation,
    Triangulation,
    ValidationReport,
    VertexId,
)
from trikit.planar.triangulation import faces, validate_triangulation
from trikit.representation.sigma import sigma2


logger = logging.getLogger(__name__)

__all__ = ["embed", "faces"]


def _base_rotation(rep: StandardRepresentation) -> Dict[VertexId, List[VertexId]]:
    a1, a2, a3 = rep.apexes
    if rep.n == 3:
        return {a1: [a3, a2], a2: [a1, a3], a3: [a2, a1]}
    v = rep.order(1).sequence[2]
    return {
        a1: [a3, a2, v],
        a2: [a1, a3, v],
        a3: [a2, a1, v],
        v: [a1, a2, a3],
    }


def _clockwise_fan(ring: List[VertexId], a3: VertexId) -> List[VertexId]:
    k = ring.index(a3)
    ccw = ring[k:] + ring[:k]
    return [ccw[0]] + ccw[:0:-1]


def embed(rep: StandardRepresentation, verify: bool = False) -> Triangulation:
    """
    Embed sigma2(R) with outer face (a1, a2, a3).

    Args:
        rep: A validated standard representation
        verify: Also compare the embedded graph with sigma2(R)

    Raises:
        InvariantViolation: If the fan of a1 disagrees with order 2, the
            result fails validation, or (verify) the graph is not sigma2(R).
    """
    a1, a2, a3 = rep.apexes
    seq1 = rep.order(1).sequence
    rank2 = rep.order(2).rank
    rank3 = rep.order(3).rank
    cycles = _base_rotation(rep)

    for b in seq1[3:-1]:
        fan = _clockwise_fan(cycles[a1], a3)
        if fan != sorted(fan, key=lambda v: rank2[v]):
            raise InvariantViolation(f"fan of {a1} is not sorted by order 2 before inserting {b}")

        p = max(k for k, v in enumerate(fan) if rank2[v] < rank2[b])
        q = next((k for k in range(p + 1, len(fan)) if rank3[fan[k]] < rank3[b]), None)
        if q is None:
            raise InvariantViolation(f"no fan vertex after {fan[p]} lies below {b} in order 3")
        w_prev, w_next = fan[p], fan[q]
        inner = fan[p + 1:q]

        new_fan = fan[:p + 1] + [b] + fan[q:]
        cycles[a1] = [new_fan[0]] + new_fan[:0:-1]
        cycles[b] = [a1, w_next] + inner[::-1] + [w_prev]
        for z in inner:
            cycles[z] = [b if x == a1 else x for x in cycles[z]]
        ring = cycles[w_prev]
        ring.insert(ring.index(a1) + 1, b)
        ring = cycles[w_next]
        ring.insert(ring.index(a1), b)
        logger.debug(f"embed: {b} between {w_prev} and {w_next}, {len(inner)} fan vertices moved")

    graph = SimpleGraph(adj={v: frozenset(ring) for v, ring in cycles.items()})
    rotation = RotationSystem.from_lists(cycles)
    result = validate_triangulation(graph, rotation, rep.apexes)
    if isinstance(result, ValidationReport):
        raise InvariantViolation(f"embedding is not a triangulation: {result.message}")

    if verify:
        expected = sigma2(rep)
        if expected != graph:
            missing, extra = expected.difference(graph)
            raise InvariantViolation(f"embedded graph differs from sigma2: missing {missing[:1]}, extra {extra[:1]}")
    logger.info(f"Embedded representation on {rep.n} vertices, {graph.edge_count} edges")
    return result
