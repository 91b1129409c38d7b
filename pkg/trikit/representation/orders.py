"""
Linear orders and standard representations

Construction and validation of three-order representations, suppression of a
vertex, and the placement rule that re-inserts a contracted vertex.
"""

import logging
from typing import Iterable, Optional, Sequence, Tuple, Union

import numpy as np

from trikit.core.errors import InsertionError, OrderError, RepresentationError, SuppressionError
from trikit.core.schema import (
    LinearOrder,
    RepresentationFailure,
    StandardRepresentation,
    ValidationReport,
    VertexId,
    sort_vertices,
)


logger = logging.getLogger(__name__)


def make_order(seq: Iterable[VertexId], universe: Optional[Iterable[VertexId]] = None) -> LinearOrder:
    """
    Build a linear order from a smallest-to-largest sequence.

    Args:
        seq: Vertices from smallest to largest
        universe: When given, the sequence must cover exactly these vertices

    Raises:
        OrderError: On a duplicate, a missing vertex, or a vertex outside the universe.
    """
    order = LinearOrder.from_sequence(seq)
    if universe is not None:
        expected = frozenset(universe)
        missing = sort_vertices(expected - order.universe)
        if missing:
            raise OrderError(f"Order misses vertex {missing[0]!r}")
        extra = sort_vertices(order.universe - expected)
        if extra:
            raise OrderError(f"Vertex {extra[0]!r} is outside the universe")
    return order


def less(order: LinearOrder, x: VertexId, y: VertexId) -> bool:
    """x <_i y in the given order; raises OrderError for unknown vertices."""
    return order.position(x) < order.position(y)


def validate(orders: Sequence[LinearOrder]) -> Union[StandardRepresentation, ValidationReport]:
    """
    Check that three orders form a standard representation.

    Checks run in a fixed sequence (order count, common universe, size,
    represents, standard) and the first failure is reported. Dominated pairs
    are scanned in lexicographic rank order of order 1, apexes in order
    number, so reports are reproducible.

    Returns:
        The StandardRepresentation, or a ValidationReport naming the first
        violated condition with its witness.
    """
    orders = tuple(orders)
    if len(orders) != 3:
        return ValidationReport(
            RepresentationFailure.WRONG_ORDER_COUNT,
            f"expected three orders, got {len(orders)}",
            (len(orders),),
        )

    universe = orders[0].universe
    for j, order in enumerate(orders[1:], start=2):
        if order.universe != universe:
            odd = sort_vertices(universe ^ order.universe)[0]
            return ValidationReport(
                RepresentationFailure.UNIVERSE_MISMATCH,
                f"order {j} is over a different vertex set, witness ({odd}, {j})",
                (odd, j),
            )

    if len(universe) < 3:
        return ValidationReport(
            RepresentationFailure.TOO_SMALL,
            f"a standard representation needs at least 3 vertices, got {len(universe)}",
            (len(universe),),
        )

    dominated = _first_dominated_pair(orders)
    if dominated is not None:
        x, y = dominated
        return ValidationReport(
            RepresentationFailure.NOT_A_REPRESENTATION,
            f"not a representation, witness ({x}, {y})",
            (x, y),
        )

    for i in range(3):
        apex = orders[i].maximum
        for j in range(3):
            if j != i and orders[j].rank[apex] >= 2:
                return ValidationReport(
                    RepresentationFailure.NOT_STANDARD,
                    f"not standard, witness ({apex}, {j + 1})",
                    (apex, j + 1),
                )

    return StandardRepresentation(orders=orders)


def _first_dominated_pair(orders: Tuple[LinearOrder, ...]) -> Optional[Tuple[VertexId, VertexId]]:
    """First pair (x, y) with x below y in all three orders, scanning order 1 lexicographically."""
    seq = orders[0].sequence
    r2 = np.fromiter((orders[1].rank[v] for v in seq), dtype=np.int64, count=len(seq))
    r3 = np.fromiter((orders[2].rank[v] for v in seq), dtype=np.int64, count=len(seq))

    # position p precedes q in order 1 whenever p < q
    below = (r2[:, None] < r2[None, :]) & (r3[:, None] < r3[None, :])
    hits = np.argwhere(np.triu(below, k=1))
    if len(hits) == 0:
        return None
    p, q = hits[0]
    return seq[p], seq[q]


def require_representation(orders: Sequence[LinearOrder]) -> StandardRepresentation:
    """Validate, raising RepresentationError with the report on failure."""
    result = validate(orders)
    if isinstance(result, ValidationReport):
        raise RepresentationError(result.message, result)
    return result


def representation_from_lists(sequences: Sequence[Sequence[VertexId]]) -> StandardRepresentation:
    """Build and validate a representation from three vertex sequences."""
    return require_representation([make_order(seq) for seq in sequences])


def suppress(rep: StandardRepresentation, b: VertexId) -> StandardRepresentation:
    """
    Restrict all three orders to V minus b.

    The result is again standard with the same apexes, so it is returned
    without re-validation.

    Raises:
        SuppressionError: If b is an apex, unknown, or the universe has only 3 vertices.
    """
    if b not in rep.universe:
        raise SuppressionError(f"Cannot suppress unknown vertex {b!r}")
    if b in rep.apexes:
        raise SuppressionError(f"Cannot suppress apex {b!r}")
    if rep.n <= 3:
        raise SuppressionError("Cannot suppress below three vertices")

    restricted = tuple(LinearOrder.from_sequence(v for v in o.sequence if v != b) for o in rep.orders)
    return StandardRepresentation(orders=restricted)


def second_max(order: LinearOrder) -> VertexId:
    """The element of rank n-2 (b = max of order 1 without a1, when applied to order 1)."""
    if len(order) < 2:
        raise OrderError("A singleton order has no second maximum")
    return order.sequence[-2]


def insert_for_contraction(
    rep: StandardRepresentation,
    w: VertexId,
    below_in_1: VertexId,
    above_in_2: VertexId,
    above_in_3: VertexId,
    check: bool = True
) -> StandardRepresentation:
    """
    Re-insert a contracted vertex w into a representation of V minus w.

    w goes just below a1 in order 1, just above `above_in_2` (w_{i-1}) in
    order 2 and just above `above_in_3` (w_{i+1}) in order 3.

    Args:
        rep: Representation of the contracted vertex set
        w: The vertex being re-inserted
        below_in_1: Must be a1, the maximum of order 1
        above_in_2: Fan predecessor w_{i-1}
        above_in_3: Fan successor w_{i+1}
        check: Validate the result (quadratic); callers trusting the
            construction pass False

    Raises:
        InsertionError: If w is already present, an anchor is unknown, or the
            result fails validation (the input upstream was not a triangulation).
    """
    if w in rep.universe:
        raise InsertionError(f"Vertex {w!r} is already in the representation")

    a1 = rep.apexes[0]
    if below_in_1 != a1:
        raise InsertionError(f"Order 1 insertion must go below a1={a1!r}, got {below_in_1!r}")
    for anchor in (above_in_2, above_in_3):
        if anchor not in rep.universe:
            raise InsertionError(f"Anchor vertex {anchor!r} is not in the representation")

    seq1 = list(rep.orders[0].sequence)
    seq1.insert(rep.orders[0].rank[a1], w)
    seq2 = list(rep.orders[1].sequence)
    seq2.insert(rep.orders[1].rank[above_in_2] + 1, w)
    seq3 = list(rep.orders[2].sequence)
    seq3.insert(rep.orders[2].rank[above_in_3] + 1, w)

    orders = (LinearOrder.from_sequence(seq1), LinearOrder.from_sequence(seq2), LinearOrder.from_sequence(seq3))
    if not check:
        return StandardRepresentation(orders=orders)

    result = validate(orders)
    if isinstance(result, ValidationReport):
        raise InsertionError(f"Inserting {w!r} does not give a standard representation: {result}", result)
    logger.debug(f"Inserted {w} below {a1} / above {above_in_2} / above {above_in_3}")
    return result
