"""
Contractible neighbours of a1 and edge contraction

select_contractible picks a fan vertex w_i of a1 whose only common neighbours
with a1 are w_{i-1} and w_{i+1}: w_1 when the fan cycle is chordless,
otherwise the vertex just after the start of a shortest chord. contract merges
w_i into a1 and splices its rotation into a1's.
"""

import logging
from typing import List, Tuple

from trikit.core.errors import ContractionError, TriangulationError
from trikit.core.schema import (
    RotationSystem,
    Triangulation,
    TriangulationFailure,
    ValidationReport,
    VertexId,
    sort_vertices,
)
from trikit.planar.triangulation import neighbor_cycle, validate_triangulation
from trikit.representation.sigma import contract_vertex


logger = logging.getLogger(__name__)


def fan_chords(tri: Triangulation) -> List[Tuple[int, int]]:
    """Chords (p, q), p < q, of the fan cycle w_0 ... w_{m+1} of a1, by fan index."""
    fan = neighbor_cycle(tri, tri.a1)
    last = len(fan) - 1
    chords = []
    for p in range(len(fan)):
        for q in range(p + 2, len(fan)):
            if (p, q) == (0, last):
                continue
            if tri.graph.has_edge(fan[p], fan[q]):
                chords.append((p, q))
    return chords


def select_contractible(tri: Triangulation) -> VertexId:
    """
    Pick the neighbour of a1 to contract.

    Chord length is the index gap q - p along the fan; ties go to the
    smallest p.

    Raises:
        TriangulationError: If |V| < 5, or if the chosen vertex has more
            than two common neighbours with a1 (the input was not a triangulation).
    """
    if tri.n < 5:
        raise TriangulationError(
            f"select_contractible needs at least 5 vertices, got {tri.n}",
            ValidationReport(TriangulationFailure.TOO_SMALL, f"{tri.n} vertices", (tri.n,)),
        )

    fan = neighbor_cycle(tri, tri.a1)
    chords = fan_chords(tri)
    if chords:
        p, q = min(chords, key=lambda c: (c[1] - c[0], c[0]))
        i = p + 1
    else:
        i = 1
    w = fan[i]

    common = tri.graph.neighbors(tri.a1) & tri.graph.neighbors(w)
    if common != {fan[i - 1], fan[i + 1]}:
        extra = sort_vertices(common - {fan[i - 1], fan[i + 1]})
        if extra:
            report = ValidationReport(
                TriangulationFailure.SEPARATING_TRIANGLE,
                f"{tri.a1} {w} {extra[0]} is a separating triangle",
                (tri.a1, w, extra[0]),
            )
        else:
            report = ValidationReport(
                TriangulationFailure.NON_TRIANGULAR_FACE,
                f"{tri.a1} and {w} share only {len(common)} fan neighbours",
                (tri.a1, w),
            )
        raise TriangulationError(f"input not a triangulation: {report.message}", report)
    logger.debug(f"select_contractible: w_{i} = {w} ({len(chords)} chords)")
    return w


def contract(tri: Triangulation, w: VertexId, check: bool = False) -> Triangulation:
    """
    Contract the edge a1-w, the merged vertex keeping the label a1.

    w's neighbours z_1 ... z_d strictly between w_{i-1} and w_{i+1} take w's
    place in a1's rotation; the two common neighbours simply lose w.

    Args:
        tri: The triangulation
        w: A neighbour of a1, not a2 or a3, with exactly two common neighbours with a1
        check: Re-validate the result

    Raises:
        ContractionError: If w violates the precondition (contracting would
            create parallel edges), or the checked result is invalid.
    """
    a1 = tri.a1
    if w == a1 or w in (tri.a2, tri.a3) or not tri.graph.has_edge(a1, w):
        raise ContractionError(f"{w!r} is not an inner neighbour of {a1}")
    common = tri.graph.neighbors(a1) & tri.graph.neighbors(w)
    if len(common) != 2:
        raise ContractionError(
            f"contracting {a1}-{w} would create parallel edges: {len(common)} common neighbours"
        )

    rot = tri.rotation
    # around w, counterclockwise from a1: a1, w_{i+1}, z_d, ..., z_1, w_{i-1}
    around_w = rot.rotated_to(w, a1)
    w_next, w_prev = around_w[1], around_w[-1]
    if {w_next, w_prev} != common:
        raise ContractionError(f"common neighbours of {a1} and {w} do not flank it in the rotation")
    inner = around_w[2:-1]

    cycles = {v: list(ns) for v, ns in rot.cycles.items() if v != w}
    ring = cycles[a1]
    k = ring.index(w)
    cycles[a1] = ring[:k] + inner + ring[k + 1:]
    for z in inner:
        cycles[z] = [a1 if x == w else x for x in cycles[z]]
    cycles[w_prev].remove(w)
    cycles[w_next].remove(w)

    graph = contract_vertex(tri.graph, a1, w)
    rotation = RotationSystem.from_lists(cycles)
    logger.debug(f"Contracted {a1}-{w}: {len(inner)} vertices moved to {a1}")

    if check:
        result = validate_triangulation(graph, rotation, tri.outer)
        if isinstance(result, ValidationReport):
            raise ContractionError(f"contraction of {a1}-{w} is invalid: {result.message}", result)
        return result
    return Triangulation(graph=graph, rotation=rotation, outer=tri.outer)
