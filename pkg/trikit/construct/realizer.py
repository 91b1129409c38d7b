"""
Standard representations of planar triangulations

realize contracts a1 with a selected fan vertex until four vertices remain,
starts from a fixed representation of K4 (or K3), and re-inserts the
contracted vertices in reverse: w_i just below a1 in order 1, just above
w_{i-1} in order 2 and just above w_{i+1} in order 3.

The induction runs on an explicit stack, so deep inputs need no recursion.
"""

import logging
from dataclasses import dataclass
from typing import List, Tuple

from trikit.core.errors import InsertionError, InvariantViolation, TriangulationError
from trikit.core.schema import LinearOrder, StandardRepresentation, Triangulation, VertexId
from trikit.planar.contraction import contract, select_contractible
from trikit.planar.triangulation import neighbor_cycle
from trikit.representation.orders import insert_for_contraction
from trikit.representation.sigma import sigma2, sigma2_neighbors


logger = logging.getLogger(__name__)


# === BASE TABLES === #

# Positions refer to (a1, a2, a3, v); a1 sits at the bottom of orders 2 and 3
# so later insertions above a3 or a2 never lift it past rank 1.
BASE_TABLE_3: Tuple[Tuple[int, ...], ...] = (
    (1, 2, 0),        # <1: a2 a3 a1
    (0, 2, 1),        # <2: a1 a3 a2
    (0, 1, 2),        # <3: a1 a2 a3
)

BASE_TABLE_4: Tuple[Tuple[int, ...], ...] = (
    (1, 2, 3, 0),     # <1: a2 a3 v a1
    (0, 2, 3, 1),     # <2: a1 a3 v a2
    (0, 1, 3, 2),     # <3: a1 a2 v a3
)


def base_representation(tri: Triangulation) -> StandardRepresentation:
    """
    The fixed representation of K3 or K4 with apexes tri.outer.

    Raises:
        TriangulationError: If tri does not have 3 or 4 vertices.
    """
    if tri.n == 3:
        labels = tuple(tri.outer)
        table = BASE_TABLE_3
    elif tri.n == 4:
        inner = next(v for v in tri.graph.vertices if v not in tri.outer)
        labels = tuple(tri.outer) + (inner,)
        table = BASE_TABLE_4
    else:
        raise TriangulationError(f"base representation needs 3 or 4 vertices, got {tri.n}")

    orders = tuple(LinearOrder.from_sequence(labels[k] for k in row) for row in table)
    return StandardRepresentation(orders=orders)


# === INDUCTION === #

@dataclass(frozen=True)
class ContractionRecord:
    """One contraction step: w = w_i and its fan neighbours w_{i-1}, w_{i+1}."""
    w: VertexId
    w_prev: VertexId
    w_next: VertexId
    fan_after: Tuple[VertexId, ...] = ()      # fan of a1 after contraction, kept in verify mode


def realize(tri: Triangulation, verify: bool = False) -> StandardRepresentation:
    """
    Build a standard representation R with sigma2(R) = tri.graph and apexes tri.outer.

    Args:
        tri: A validated triangulation
        verify: Validate every intermediate representation, check the fan
            order of a1 at each insertion and compare sigma2(R) with the input

    Raises:
        InvariantViolation: If a verify-mode check fails.
    """
    a1 = tri.a1
    stack: List[ContractionRecord] = []
    current = tri
    while current.n > 4:
        w = select_contractible(current)
        fan = neighbor_cycle(current, a1)
        i = fan.index(w)
        current = contract(current, w, check=verify)
        fan_after = tuple(neighbor_cycle(current, a1)) if verify else ()
        stack.append(ContractionRecord(w=w, w_prev=fan[i - 1], w_next=fan[i + 1], fan_after=fan_after))
        logger.debug(f"realize: contracted {w} (between {fan[i - 1]} and {fan[i + 1]}), {current.n} left")

    rep = base_representation(current)
    while stack:
        record = stack.pop()
        if verify:
            _check_fan_claim(rep, record)
        try:
            rep = insert_for_contraction(rep, record.w, a1, record.w_prev, record.w_next, check=verify)
        except InsertionError as e:
            raise InvariantViolation(f"re-inserting {record.w} broke the representation: {e}")

    if verify:
        result = sigma2(rep)
        if result != tri.graph:
            missing, extra = tri.graph.difference(result)
            raise InvariantViolation(f"sigma2 of the realized representation differs: missing {missing[:1]}, "
                                     f"extra {extra[:1]}")
    logger.info(f"Realized triangulation on {tri.n} vertices")
    return rep


def _check_fan_claim(rep: StandardRepresentation, record: ContractionRecord) -> None:
    """The sigma2-fan of a1 sorted by order 2 must be the fan cycle of the contracted triangulation."""
    a1 = rep.apexes[0]
    rank2 = rep.order(2).rank
    fan = tuple(sorted(sigma2_neighbors(rep, a1), key=lambda v: rank2[v]))
    if fan != record.fan_after:
        raise InvariantViolation(
            f"fan of {a1} before inserting {record.w} is {' '.join(fan)}, "
            f"expected {' '.join(record.fan_after)}"
        )
