"""
trikit Data Models

Value types shared by every trikit sub-package: vertex labels, linear orders,
standard representations, simple graphs, triple systems, rotation systems and
triangulations, plus the validation report returned by the check operations.

All types are immutable after construction and safe to share between threads.
Vertices are string labels; dense integer indices are derived on demand
(StandardRepresentation.index) for the vectorized definitions.
"""

import re
from enum import Enum
from functools import cached_property
from dataclasses import dataclass, field
from typing import Dict, FrozenSet, Iterable, Iterator, List, Mapping, Tuple, Union

import numpy as np

from trikit.core.errors import GraphError, OrderError


VertexId = str
Edge = Tuple[VertexId, VertexId]
Triple = Tuple[VertexId, VertexId, VertexId]

_DIGIT_RUN = re.compile(r'(\d+)')


def vertex_sort_key(label: VertexId) -> tuple:
    """
    Natural sort key for vertex labels, so that "v9" sorts before "v10".

    The label itself is appended as tie-breaker ("01" and "1" stay distinct).
    """
    parts = []
    for chunk in _DIGIT_RUN.split(label):
        if chunk.isdigit():
            parts.append((1, int(chunk), ""))
        elif chunk:
            parts.append((0, 0, chunk))
    return (tuple(parts), label)


def sort_vertices(vertices: Iterable[VertexId]) -> List[VertexId]:
    return sorted(vertices, key=vertex_sort_key)


def sort_edge(u: VertexId, v: VertexId) -> Edge:
    return (u, v) if vertex_sort_key(u) <= vertex_sort_key(v) else (v, u)


# === VALIDATION REPORTS === #

class RepresentationFailure(Enum):
    """Conditions checked when validating three linear orders."""
    WRONG_ORDER_COUNT = "wrong_order_count"      # not exactly three orders
    UNIVERSE_MISMATCH = "universe_mismatch"      # orders over different vertex sets
    TOO_SMALL = "too_small"                      # fewer than three vertices
    NOT_A_REPRESENTATION = "not_a_representation"  # some pair is below in all three
    NOT_STANDARD = "not_standard"                # apex of rank >= 2 in another order


class TriangulationFailure(Enum):
    """Conditions checked when validating a planar triangulation."""
    TOO_SMALL = "too_small"
    OUTER_NOT_TRIANGLE = "outer_not_triangle"
    ROTATION_MISMATCH = "rotation_mismatch"      # rotation disagrees with adjacency
    DISCONNECTED = "disconnected"
    EDGE_COUNT = "edge_count"                    # |E| != 3n - 6
    NON_TRIANGULAR_FACE = "non_triangular_face"
    EULER = "euler"                              # V - E + F != 2
    OUTER_FACE = "outer_face"                    # outer triple is not a traced face
    SEPARATING_TRIANGLE = "separating_triangle"  # a1, w and a third common neighbour


@dataclass(frozen=True)
class ValidationReport:
    """
    First violated condition found by a validation, with the smallest witness.

    The witness is a tuple of vertices (or a vertex and an order number) that
    demonstrates the violation, so it can be echoed verbatim by the CLI.
    """
    kind: Union[RepresentationFailure, TriangulationFailure]
    message: str
    witness: tuple = ()

    def __str__(self) -> str:
        return self.message


# === LINEAR ORDERS === #

@dataclass(frozen=True)
class LinearOrder:
    """
    Total order on a vertex universe, stored smallest to largest.

    The rank table is the inverse permutation of the sequence, so comparisons
    are O(1).
    """
    sequence: Tuple[VertexId, ...]
    rank: Mapping[VertexId, int] = field(compare=False, repr=False)

    @classmethod
    def from_sequence(cls, sequence: Iterable[VertexId]) -> 'LinearOrder':
        """Build an order, rejecting duplicates and empty sequences."""
        seq = tuple(sequence)
        if not seq:
            raise OrderError("An order needs at least one vertex")
        rank: Dict[VertexId, int] = {}
        for position, vertex in enumerate(seq):
            if vertex in rank:
                raise OrderError(f"Duplicate vertex {vertex!r} in order")
            rank[vertex] = position
        return cls(sequence=seq, rank=rank)

    def __len__(self) -> int:
        return len(self.sequence)

    def __iter__(self) -> Iterator[VertexId]:
        return iter(self.sequence)

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.rank

    @property
    def universe(self) -> FrozenSet[VertexId]:
        return frozenset(self.sequence)

    @property
    def maximum(self) -> VertexId:
        return self.sequence[-1]

    def position(self, vertex: VertexId) -> int:
        """Rank of a vertex; raises OrderError for vertices outside the universe."""
        try:
            return self.rank[vertex]
        except KeyError:
            raise OrderError(f"Unknown vertex {vertex!r}")


@dataclass(frozen=True)
class StandardRepresentation:
    """
    Three linear orders R = (<1, <2, <3) over one universe.

    Instances are only produced by validation (or by operations that preserve
    validity), so holding one means both the represents and the standard
    conditions hold. The apexes are the maxima of the three orders.
    """
    orders: Tuple[LinearOrder, LinearOrder, LinearOrder]

    @property
    def apexes(self) -> Triple:
        return (self.orders[0].maximum, self.orders[1].maximum, self.orders[2].maximum)

    @property
    def universe(self) -> FrozenSet[VertexId]:
        return self.orders[0].universe

    @property
    def n(self) -> int:
        return len(self.orders[0])

    def order(self, i: int) -> LinearOrder:
        """Order by its 1-based number."""
        return self.orders[i - 1]

    def rank(self, i: int, vertex: VertexId) -> int:
        return self.orders[i - 1].position(vertex)

    def as_lists(self) -> List[List[VertexId]]:
        return [list(o.sequence) for o in self.orders]

    @cached_property
    def labels(self) -> Tuple[VertexId, ...]:
        """Dense interning of the universe; index k is the k-th label in natural order."""
        return tuple(sort_vertices(self.orders[0].sequence))

    @cached_property
    def index(self) -> Dict[VertexId, int]:
        return {label: k for k, label in enumerate(self.labels)}

    @cached_property
    def rank_matrix(self) -> np.ndarray:
        """Array of shape (3, n): rank_matrix[i, k] is the rank of labels[k] in order i+1."""
        ranks = np.empty((3, self.n), dtype=np.int64)
        for i, order in enumerate(self.orders):
            for k, label in enumerate(self.labels):
                ranks[i, k] = order.rank[label]
        return ranks


# === GRAPHS === #

@dataclass(frozen=True)
class SimpleGraph:
    """
    Undirected simple graph as symmetric adjacency sets.

    Equality is exact labelled equality: same vertex set, same edge set.
    """
    adj: Mapping[VertexId, FrozenSet[VertexId]]

    @classmethod
    def from_edges(cls, vertices: Iterable[VertexId], edges: Iterable[Edge]) -> 'SimpleGraph':
        """
        Build a graph from a vertex list and an edge list.

        Vertices mentioned only by edges are added. Repeated edges collapse.

        Raises:
            GraphError: On a loop.
        """
        adj: Dict[VertexId, set] = {v: set() for v in vertices}
        for u, v in edges:
            if u == v:
                raise GraphError(f"Loop at vertex {u!r}")
            adj.setdefault(u, set()).add(v)
            adj.setdefault(v, set()).add(u)
        return cls(adj={v: frozenset(ns) for v, ns in adj.items()})

    @property
    def n(self) -> int:
        return len(self.adj)

    @property
    def vertices(self) -> List[VertexId]:
        return sort_vertices(self.adj)

    @property
    def edge_count(self) -> int:
        return sum(len(ns) for ns in self.adj.values()) // 2

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.adj

    def neighbors(self, vertex: VertexId) -> FrozenSet[VertexId]:
        try:
            return self.adj[vertex]
        except KeyError:
            raise GraphError(f"Unknown vertex {vertex!r}")

    def has_edge(self, u: VertexId, v: VertexId) -> bool:
        return v in self.adj.get(u, ())

    def edges(self) -> List[Edge]:
        """All edges, each as a naturally sorted pair, in natural order."""
        pairs = {sort_edge(u, v) for u, ns in self.adj.items() for v in ns}
        return sorted(pairs, key=lambda e: (vertex_sort_key(e[0]), vertex_sort_key(e[1])))

    def is_connected(self) -> bool:
        if not self.adj:
            return True
        start = next(iter(self.adj))
        seen = {start}
        stack = [start]
        while stack:
            for w in self.adj[stack.pop()]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.adj)

    def is_triangle(self, triple: Iterable[VertexId]) -> bool:
        a, b, c = tuple(triple)
        return len({a, b, c}) == 3 and self.has_edge(a, b) and self.has_edge(b, c) and self.has_edge(a, c)

    def difference(self, other: 'SimpleGraph') -> Tuple[List[Edge], List[Edge]]:
        """Edges of self missing from other, and edges of other absent from self."""
        mine = set(self.edges())
        theirs = set(other.edges())
        key = lambda e: (vertex_sort_key(e[0]), vertex_sort_key(e[1]))
        return sorted(mine - theirs, key=key), sorted(theirs - mine, key=key)

    def to_networkx(self):
        """Export as a networkx.Graph (used by the oracle's planarity cross-check)."""
        import networkx as nx

        graph = nx.Graph()
        graph.add_nodes_from(self.vertices)
        graph.add_edges_from(self.edges())
        return graph


@dataclass(frozen=True)
class TripleSet:
    """Set of unordered vertex triples (the faces of an embedding, or the triple system)."""
    triples: FrozenSet[FrozenSet[VertexId]]

    @classmethod
    def of(cls, triples: Iterable[Iterable[VertexId]]) -> 'TripleSet':
        result = set()
        for triple in triples:
            members = frozenset(triple)
            if len(members) != 3:
                raise GraphError(f"Triple {tuple(triple)!r} needs three distinct vertices")
            result.add(members)
        return cls(triples=frozenset(result))

    def __len__(self) -> int:
        return len(self.triples)

    def __contains__(self, triple: object) -> bool:
        try:
            return frozenset(triple) in self.triples
        except TypeError:
            return False

    def __iter__(self) -> Iterator[Triple]:
        return iter(self.sorted())

    def sorted(self) -> List[Triple]:
        """Triples as naturally sorted tuples, in natural order."""
        rows = [tuple(sort_vertices(t)) for t in self.triples]
        return sorted(rows, key=lambda t: tuple(vertex_sort_key(v) for v in t))

    def without(self, triple: Iterable[VertexId]) -> 'TripleSet':
        return TripleSet(triples=self.triples - {frozenset(triple)})


# === EMBEDDINGS === #

@dataclass(frozen=True)
class RotationSystem:
    """
    Cyclic counterclockwise neighbour order around each vertex.

    Faces are recovered by tracing: the dart after u->v is v->succ_v(u).
    With counterclockwise rotations bounded faces trace counterclockwise and
    the outer face traces clockwise.
    """
    cycles: Mapping[VertexId, Tuple[VertexId, ...]]

    @classmethod
    def from_lists(cls, cycles: Mapping[VertexId, Iterable[VertexId]]) -> 'RotationSystem':
        return cls(cycles={v: tuple(ns) for v, ns in cycles.items()})

    @cached_property
    def _positions(self) -> Dict[VertexId, Dict[VertexId, int]]:
        return {v: {u: k for k, u in enumerate(ns)} for v, ns in self.cycles.items()}

    def __contains__(self, vertex: object) -> bool:
        return vertex in self.cycles

    def degree(self, vertex: VertexId) -> int:
        return len(self.cycles[vertex])

    def succ(self, vertex: VertexId, neighbor: VertexId) -> VertexId:
        """Neighbour following `neighbor` counterclockwise around `vertex`."""
        ring = self.cycles[vertex]
        return ring[(self._positions[vertex][neighbor] + 1) % len(ring)]

    def pred(self, vertex: VertexId, neighbor: VertexId) -> VertexId:
        ring = self.cycles[vertex]
        return ring[(self._positions[vertex][neighbor] - 1) % len(ring)]

    def has_dart(self, u: VertexId, v: VertexId) -> bool:
        return v in self._positions.get(u, {})

    def darts(self) -> Iterator[Edge]:
        """All directed edges, vertices in natural order, neighbours in rotation order."""
        for v in sort_vertices(self.cycles):
            for u in self.cycles[v]:
                yield (v, u)

    def rotated_to(self, vertex: VertexId, start: VertexId) -> List[VertexId]:
        """Rotation of `vertex` as a list starting at `start`."""
        ring = self.cycles[vertex]
        k = self._positions[vertex][start]
        return list(ring[k:] + ring[:k])

    def reflected(self) -> 'RotationSystem':
        """The mirror-image embedding (every cycle reversed)."""
        return RotationSystem(cycles={v: tuple(reversed(ns)) for v, ns in self.cycles.items()})

    def normalized(self) -> Dict[VertexId, Tuple[VertexId, ...]]:
        """Each cycle rotated to start at its naturally smallest neighbour."""
        result = {}
        for v, ns in self.cycles.items():
            if not ns:
                result[v] = ()
                continue
            start = min(ns, key=vertex_sort_key)
            result[v] = tuple(self.rotated_to(v, start))
        return result

    def equivalent(self, other: 'RotationSystem', allow_reflection: bool = True) -> bool:
        """Same cyclic orders everywhere, optionally up to one global reflection."""
        mine = self.normalized()
        if mine == other.normalized():
            return True
        return allow_reflection and mine == other.reflected().normalized()


@dataclass(frozen=True)
class Triangulation:
    """
    Planar triangulation: graph, rotation system and outer triangle (a1, a2, a3).

    Values are produced by validation (planar.triangulation.validate_triangulation)
    or by operations that preserve validity.
    """
    graph: SimpleGraph
    rotation: RotationSystem
    outer: Triple

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def edge_count(self) -> int:
        return self.graph.edge_count

    @property
    def a1(self) -> VertexId:
        return self.outer[0]

    @property
    def a2(self) -> VertexId:
        return self.outer[1]

    @property
    def a3(self) -> VertexId:
        return self.outer[2]


@dataclass(frozen=True)
class FaceSet:
    """Traced faces of a triangulation: bounded faces in trace order and the outer face."""
    bounded: Tuple[Triple, ...]
    outer: Triple

    def __len__(self) -> int:
        return len(self.bounded) + 1

    def all_faces(self) -> List[Triple]:
        return [self.outer] + list(self.bounded)

    def as_triple_set(self, include_outer: bool = False) -> TripleSet:
        """
        Faces as unordered triples.

        For K3 the single bounded face has the outer vertex set, so excluding the
        outer triple leaves the empty set.
        """
        triples = TripleSet.of(self.all_faces())
        return triples if include_outer else triples.without(self.outer)

