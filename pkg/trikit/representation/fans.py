"""
Executable checks of the neighbourhood facts about apex a1

fan_of_apex sorts the sigma2-neighbours of a1 by order 2 (the fan
w_0 < w_1 < ... < w_{m+1}) and checks six facts about it:

  1. the fan is reverse-sorted in order 3
  2. w_0 = a3 and w_{m+1} = a2
  3. every gap set S_i = {z : w_i <2 z <2 w_{i+1} and w_{i+1} <3 z <3 w_i} is empty
  4. consecutive fan vertices are adjacent
  5. b = second maximum of order 1 is in the fan, and for n >= 4 its only
     common neighbours with a1 are its two fan neighbours
  6. for n >= 4 every other neighbour z of b = w_i satisfies
     w_i <2 z <2 w_{i+1} and w_i <3 z <3 w_{i-1}

contraction_commutes checks that suppressing b commutes with contracting a1b.
"""

import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

from trikit.core.errors import GraphError
from trikit.core.schema import Edge, SimpleGraph, StandardRepresentation, VertexId, sort_vertices
from trikit.representation.orders import second_max, suppress
from trikit.representation.sigma import contract_vertex, sigma2


logger = logging.getLogger(__name__)


PART_TITLES: Dict[int, str] = {
    1: "fan reverse-sorted in order 3",
    2: "fan runs from a3 to a2",
    3: "gap sets empty",
    4: "consecutive fan vertices adjacent",
    5: "b in fan, exactly two common neighbours with a1",
    6: "other neighbours of b inside the gap",
}


@dataclass(frozen=True)
class PartResult:
    """Outcome of one neighbourhood fact; vacuous parts hold trivially."""
    holds: bool
    witness: tuple = ()
    vacuous: bool = False


@dataclass(frozen=True)
class FanReport:
    """Fan of a1 sorted by order 2, the vertex b, and the verdict for parts 1-6."""
    fan: Tuple[VertexId, ...]
    b: VertexId
    parts: Dict[int, PartResult] = field(default_factory=dict)

    @property
    def all_hold(self) -> bool:
        return all(part.holds for part in self.parts.values())

    def failed_parts(self) -> List[int]:
        return [k for k in sorted(self.parts) if not self.parts[k].holds]


@dataclass(frozen=True)
class CommutationReport:
    """Comparison of sigma2(suppress(R, b)) with sigma2(R) contracted along a1b."""
    b: VertexId
    missing: Tuple[Edge, ...]      # in the contracted graph, not in sigma2 of the suppression
    extra: Tuple[Edge, ...]        # in sigma2 of the suppression, not in the contracted graph

    @property
    def equal(self) -> bool:
        return not self.missing and not self.extra


def fan_of_apex(
    rep: StandardRepresentation,
    graph: SimpleGraph,
    check_graph: bool = True
) -> FanReport:
    """
    Evaluate the six neighbourhood facts about a1 on a representation.

    Args:
        rep: The representation
        graph: sigma2(rep)
        check_graph: Recompute sigma2(rep) and require equality with `graph`

    Raises:
        GraphError: If `graph` is not sigma2(rep).
    """
    if check_graph:
        expected = sigma2(rep)
        if expected != graph:
            missing, extra = expected.difference(graph)
            witness = (missing or extra)[0]
            raise GraphError(f"Graph is not sigma2 of the representation, witness edge {witness}")

    a1, a2, a3 = rep.apexes
    r2 = rep.order(2).rank
    r3 = rep.order(3).rank
    fan = tuple(sorted(graph.neighbors(a1), key=lambda v: r2[v]))
    b = second_max(rep.order(1))

    ends_ok = fan[0] == a3 and fan[-1] == a2
    parts = {
        1: _reverse_sorted(fan, r3),
        2: PartResult(holds=True) if ends_ok else PartResult(holds=False, witness=(fan[0], fan[-1])),
        3: _gaps_empty(rep, fan),
        4: _consecutive_adjacent(graph, fan),
    }
    parts[5], position = _b_in_fan(rep, graph, fan, b)
    parts[6] = _b_neighbors_in_gap(rep, graph, fan, b, position)

    report = FanReport(fan=fan, b=b, parts=parts)
    if not report.all_hold:
        logger.debug(f"fan_of_apex: parts {report.failed_parts()} fail")
    return report


def _reverse_sorted(fan: Tuple[VertexId, ...], r3: Dict[VertexId, int]) -> PartResult:
    for left, right in zip(fan, fan[1:]):
        if not r3[right] < r3[left]:
            return PartResult(holds=False, witness=(left, right))
    return PartResult(holds=True)


def _gaps_empty(rep: StandardRepresentation, fan: Tuple[VertexId, ...]) -> PartResult:
    order2 = rep.order(2)
    r3 = rep.order(3).rank
    for left, right in zip(fan, fan[1:]):
        between = order2.sequence[order2.rank[left] + 1:order2.rank[right]]
        for z in between:
            if r3[right] < r3[z] < r3[left]:
                return PartResult(holds=False, witness=(left, right, z))
    return PartResult(holds=True)


def _consecutive_adjacent(graph: SimpleGraph, fan: Tuple[VertexId, ...]) -> PartResult:
    for left, right in zip(fan, fan[1:]):
        if not graph.has_edge(left, right):
            return PartResult(holds=False, witness=(left, right))
    return PartResult(holds=True)


def _b_in_fan(
    rep: StandardRepresentation,
    graph: SimpleGraph,
    fan: Tuple[VertexId, ...],
    b: VertexId
) -> Tuple[PartResult, Optional[int]]:
    """Part 5, plus the fan position of b when it is an interior fan vertex."""
    if b not in fan:
        return PartResult(holds=False, witness=(b,)), None
    if rep.n < 4:
        return PartResult(holds=True, vacuous=True), None

    i = fan.index(b)
    if i == 0 or i == len(fan) - 1:
        return PartResult(holds=False, witness=(b,)), None

    a1 = rep.apexes[0]
    common = graph.neighbors(a1) & graph.neighbors(b)
    expected = {fan[i - 1], fan[i + 1]}
    if common != expected:
        odd = sort_vertices(common ^ expected)[0]
        return PartResult(holds=False, witness=(b, odd)), i
    return PartResult(holds=True), i


def _b_neighbors_in_gap(
    rep: StandardRepresentation,
    graph: SimpleGraph,
    fan: Tuple[VertexId, ...],
    b: VertexId,
    i: Optional[int]
) -> PartResult:
    if rep.n < 4:
        return PartResult(holds=True, vacuous=True)
    if i is None:
        return PartResult(holds=False, witness=(b,))

    r2 = rep.order(2).rank
    r3 = rep.order(3).rank
    w_prev, w_next = fan[i - 1], fan[i + 1]
    others = graph.neighbors(b) - {rep.apexes[0], w_prev, w_next}
    for z in sort_vertices(others):
        if not (r2[b] < r2[z] < r2[w_next] and r3[b] < r3[z] < r3[w_prev]):
            return PartResult(holds=False, witness=(b, z))
    return PartResult(holds=True)


def contraction_commutes(rep: StandardRepresentation, graph: Optional[SimpleGraph] = None) -> CommutationReport:
    """
    Compare sigma2(suppress(R, b)) with sigma2(R) after contracting a1b.

    Args:
        rep: Representation with at least four vertices
        graph: sigma2(rep) when already computed
    """
    if graph is None:
        graph = sigma2(rep)
    a1 = rep.apexes[0]
    b = second_max(rep.order(1))

    suppressed = sigma2(suppress(rep, b))
    contracted = contract_vertex(graph, a1, b)
    missing, extra = contracted.difference(suppressed)
    return CommutationReport(b=b, missing=tuple(missing), extra=tuple(extra))
