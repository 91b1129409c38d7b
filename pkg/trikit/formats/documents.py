"""
JSON documents for trikit inputs and outputs

Each document is a pydantic model with `from_*` constructors for the domain
values and, for inputs, `to_*` converters back. The text parsers hand any
input whose first non-blank character is `{` to these models, so JSON output
can be fed straight back in.
"""

from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, Field

from trikit.core.schema import (
    FaceSet,
    LinearOrder,
    RotationSystem,
    SimpleGraph,
    StandardRepresentation,
    Triangulation,
    TripleSet,
    sort_vertices,
)


class OrdersDocument(BaseModel):
    """Three linear orders, each smallest to largest."""
    orders: List[List[str]] = Field(description="Vertex sequences of <1, <2, <3")

    @classmethod
    def from_representation(cls, rep: StandardRepresentation) -> 'OrdersDocument':
        return cls(orders=rep.as_lists())

    def to_orders(self) -> List[LinearOrder]:
        return [LinearOrder.from_sequence(seq) for seq in self.orders]


class GraphDocument(BaseModel):
    """Graph with optional outer triangle, rotation system and bounded faces."""
    vertices: List[str]
    edges: List[Tuple[str, str]]
    outer: Optional[Tuple[str, str, str]] = None
    rotation: Optional[Dict[str, List[str]]] = Field(default=None, description="Counterclockwise neighbour cycles")
    faces: Optional[List[Tuple[str, str, str]]] = Field(default=None, description="Bounded faces in trace order")

    @classmethod
    def from_graph(cls, graph: SimpleGraph, outer: Optional[Tuple[str, str, str]] = None) -> 'GraphDocument':
        return cls(vertices=graph.vertices, edges=graph.edges(), outer=outer)

    @classmethod
    def from_triangulation(cls, tri: Triangulation, face_set: Optional[FaceSet] = None) -> 'GraphDocument':
        rotation = {v: list(tri.rotation.cycles[v]) for v in tri.graph.vertices}
        return cls(
            vertices=tri.graph.vertices,
            edges=tri.graph.edges(),
            outer=tri.outer,
            rotation=rotation,
            faces=list(face_set.bounded) if face_set is not None else None,
        )

    def to_graph(self) -> SimpleGraph:
        return SimpleGraph.from_edges(self.vertices, self.edges)

    def to_rotation(self) -> Optional[RotationSystem]:
        return RotationSystem.from_lists(self.rotation) if self.rotation is not None else None


class TriplesDocument(BaseModel):
    """Unordered triples (the triple system or a face set), naturally sorted."""
    triples: List[Tuple[str, str, str]]
    outer: Optional[Tuple[str, str, str]] = None

    @classmethod
    def from_triples(cls, triples: TripleSet, outer: Optional[Tuple[str, str, str]] = None) -> 'TriplesDocument':
        return cls(triples=triples.sorted(), outer=tuple(sort_vertices(outer)) if outer else None)

    def to_triples(self) -> TripleSet:
        return TripleSet.of(self.triples)


class PartDocument(BaseModel):
    title: str
    holds: bool
    vacuous: bool = False
    witness: List[str] = Field(default_factory=list)


class FanReportDocument(BaseModel):
    """Neighbourhood facts about a1 and the suppression/contraction comparison."""
    valid: bool
    message: Optional[str] = None
    witness: List[str] = Field(default_factory=list)
    fan: List[str] = Field(default_factory=list)
    b: Optional[str] = None
    parts: Dict[int, PartDocument] = Field(default_factory=dict)
    commutes: Optional[bool] = None


class RoundtripDocument(BaseModel):
    """Outcome of realize -> sigma2 -> compare."""
    equal: bool
    edges: int
    missing: List[Tuple[str, str]] = Field(default_factory=list)
    extra: List[Tuple[str, str]] = Field(default_factory=list)
    orders: Optional[List[List[str]]] = None
