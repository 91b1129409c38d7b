"""
trikit Pipeline

Orchestrates the steps behind each command: loading a triangulation from a
parsed graph file (explicit rotation, face list, or recovery), checking a
representation together with its neighbourhood facts, and the
realize -> sigma2 -> compare round trip.
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional, Sequence

from trikit.core.errors import FormatError
from trikit.core.schema import (
    Edge,
    LinearOrder,
    StandardRepresentation,
    Triangulation,
    ValidationReport,
)
from trikit.construct.realizer import realize
from trikit.formats.text import GraphFile
from trikit.planar.rotation import orient_to_outer, recover_rotation, rotation_from_faces
from trikit.planar.triangulation import require_triangulation
from trikit.representation.fans import CommutationReport, FanReport, contraction_commutes, fan_of_apex
from trikit.representation.orders import validate
from trikit.representation.sigma import sigma2


logger = logging.getLogger(__name__)


@dataclass
class RepresentationCheck:
    """Validation of three orders followed, when valid, by the fan and commutation checks."""
    rep: Optional[StandardRepresentation] = None
    report: Optional[ValidationReport] = None
    fan: Optional[FanReport] = None
    commutation: Optional[CommutationReport] = None

    @property
    def holds(self) -> bool:
        if self.report is not None or self.fan is None:
            return False
        return self.fan.all_hold and (self.commutation is None or self.commutation.equal)


@dataclass
class RoundtripResult:
    rep: StandardRepresentation
    edges: int
    missing: List[Edge] = field(default_factory=list)
    extra: List[Edge] = field(default_factory=list)

    @property
    def equal(self) -> bool:
        return not self.missing and not self.extra

    def summary(self) -> str:
        if self.equal:
            return f"graphs equal, {self.edges} edges"
        return f"graphs differ: {len(self.missing)} missing, {len(self.extra)} extra"


def load_triangulation(graph_file: GraphFile) -> Triangulation:
    """
    Turn a parsed graph file into a validated triangulation.

    An explicit rotation wins over a face list; with neither, the rotation
    is recovered from the graph.

    Raises:
        FormatError: If the file has no outer line.
        TriangulationError: If the input is not a triangulation with that outer face.
    """
    if graph_file.outer is None:
        raise FormatError("graph file has no outer line")
    graph, outer = graph_file.graph, graph_file.outer

    if graph_file.rotation is not None:
        rotation = orient_to_outer(graph_file.rotation, outer)
        source = "rotation lines"
    elif graph_file.faces is not None:
        rotation = rotation_from_faces(graph, graph_file.faces, outer)
        source = "faces block"
    else:
        rotation = recover_rotation(graph, outer)
        source = "recovery"

    tri = require_triangulation(graph, rotation, outer)
    logger.info(f"Loaded triangulation: {tri.n} vertices, {tri.edge_count} edges (embedding from {source})")
    return tri


def check_representation(orders: Sequence[LinearOrder]) -> RepresentationCheck:
    """Validate orders, then evaluate the fan facts and, for n >= 4, the commutation check."""
    result = validate(orders)
    if isinstance(result, ValidationReport):
        logger.info(f"Representation rejected: {result.message}")
        return RepresentationCheck(report=result)

    graph = sigma2(result)
    fan = fan_of_apex(result, graph, check_graph=False)
    commutation = contraction_commutes(result, graph) if result.n >= 4 else None
    return RepresentationCheck(rep=result, fan=fan, commutation=commutation)


def roundtrip(tri: Triangulation, verify: bool = False) -> RoundtripResult:
    """Realize a triangulation and compare sigma2 of the result with its graph."""
    rep = realize(tri, verify=verify)
    missing, extra = tri.graph.difference(sigma2(rep))
    result = RoundtripResult(rep=rep, edges=tri.edge_count, missing=missing, extra=extra)
    logger.info(f"Round trip: {result.summary()}")
    return result
