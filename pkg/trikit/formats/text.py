"""
Orders and graph text formats

Orders file: three non-comment lines, each a whitespace-separated vertex
sequence from smallest to largest.

Graph file:

    # comment
    outer a1 a2 a3
    a1 a2                      one edge per line
    rotation a1: a3 a2 v4      counterclockwise neighbour cycle
    faces
    a1 v4 a2                   bounded faces, after the faces header

Triples file: one unordered triple per line.

The orders, graph and triples parsers accept the matching JSON document
instead; fan reports and round-trip results are read back from JSON only.
"""

import json
import logging
from dataclasses import dataclass
from typing import Iterator, List, Optional, Tuple, Union

from pydantic import ValidationError

from trikit.core.constants import FileKeywords
from trikit.core.errors import FormatError, GraphError, OrderError
from trikit.core.schema import (
    FaceSet,
    LinearOrder,
    RotationSystem,
    SimpleGraph,
    StandardRepresentation,
    Triangulation,
    Triple,
    TripleSet,
    VertexId,
)
from trikit.formats.documents import FanReportDocument, GraphDocument, OrdersDocument, RoundtripDocument, TriplesDocument


logger = logging.getLogger(__name__)


@dataclass
class GraphFile:
    """Parsed graph file; rotation and faces are present only when the file gives them."""
    graph: SimpleGraph
    outer: Optional[Triple] = None
    rotation: Optional[RotationSystem] = None
    faces: Optional[List[Triple]] = None


def _is_json(text: str) -> bool:
    return text.lstrip().startswith("{")


def _load_json(text: str, model):
    try:
        return model.model_validate(json.loads(text))
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e.msg}", e.lineno)
    except ValidationError as e:
        raise FormatError(f"invalid {model.__name__}: {e.errors()[0]['msg']}")


def _content_lines(text: str) -> Iterator[Tuple[int, List[str]]]:
    """Line number and tokens of each non-blank line, comments stripped."""
    for number, line in enumerate(text.splitlines(), start=1):
        body = line.split(FileKeywords.COMMENT, 1)[0]
        tokens = body.split()
        if tokens:
            yield number, tokens


# === ORDERS === #

def parse_orders(text: str) -> List[LinearOrder]:
    """
    Parse an orders file into its linear orders (not yet validated as a representation).

    Raises:
        FormatError: On anything but three orders, a duplicate vertex within a
            line, or malformed JSON.
    """
    if _is_json(text):
        doc = _load_json(text, OrdersDocument)
        _require_three(len(doc.orders))
        try:
            return doc.to_orders()
        except OrderError as e:
            raise FormatError(str(e))

    orders = []
    numbers = []
    for number, tokens in _content_lines(text):
        try:
            orders.append(LinearOrder.from_sequence(tokens))
        except OrderError as e:
            raise FormatError(str(e), number)
        numbers.append(number)
    # the fourth order, or the last line read when there are too few
    _require_three(len(orders), numbers[3] if len(numbers) > 3 else (numbers[-1] if numbers else None))
    return orders


def _require_three(count: int, line: Optional[int] = None) -> None:
    if count != 3:
        raise FormatError(f"orders file needs exactly three orders, got {count}", line)


def emit_orders(rep: StandardRepresentation) -> str:
    lines = [f"# apexes {' '.join(rep.apexes)}"]
    lines += [" ".join(order.sequence) for order in rep.orders]
    return "\n".join(lines) + "\n"


# === GRAPHS === #

def parse_graph(text: str) -> GraphFile:
    """
    Parse a graph file.

    Raises:
        FormatError: On an unknown line shape, a keyword used as a vertex,
            a loop, or malformed JSON.
    """
    if _is_json(text):
        doc = _load_json(text, GraphDocument)
        try:
            graph = doc.to_graph()
        except GraphError as e:
            raise FormatError(str(e))
        return GraphFile(
            graph=graph,
            outer=tuple(doc.outer) if doc.outer else None,
            rotation=doc.to_rotation(),
            faces=[tuple(f) for f in doc.faces] if doc.faces is not None else None,
        )

    outer: Optional[Triple] = None
    edges: List[Tuple[VertexId, VertexId]] = []
    rotation = {}
    face_list: Optional[List[Triple]] = None
    keywords = set(FileKeywords.get_all_keywords())

    for number, tokens in _content_lines(text):
        head = tokens[0]
        clash = [t for t in tokens[1:] if t.rstrip(":") in keywords]
        if clash:
            raise FormatError(f"keyword {clash[0].rstrip(':')!r} cannot name a vertex", number)
        if head == FileKeywords.OUTER:
            if len(tokens) != 4:
                raise FormatError("outer needs exactly three vertices", number)
            if outer is not None:
                raise FormatError("outer given twice", number)
            outer = (tokens[1], tokens[2], tokens[3])
        elif head == FileKeywords.ROTATION:
            line = " ".join(tokens[1:])
            vertex, sep, rest = line.partition(":")
            if not sep or not vertex.strip() or len(vertex.split()) != 1:
                raise FormatError("rotation line must read 'rotation v: n1 n2 ...'", number)
            rotation[vertex.strip()] = tuple(rest.split())
        elif head == FileKeywords.FACES:
            if len(tokens) != 1:
                raise FormatError("faces header takes no arguments", number)
            face_list = []
        elif len(tokens) == 2:
            if tokens[0] == tokens[1]:
                raise FormatError(f"loop at vertex {tokens[0]!r}", number)
            edges.append((tokens[0], tokens[1]))
        elif len(tokens) == 3 and face_list is not None:
            face_list.append((tokens[0], tokens[1], tokens[2]))
        else:
            raise FormatError(f"cannot read line with {len(tokens)} tokens", number)

    if not edges and rotation:
        edges = [(v, u) for v, ring in rotation.items() for u in ring if v != u]
    vertices = list(rotation) + list(outer or ())
    graph = SimpleGraph.from_edges(vertices, edges)
    return GraphFile(
        graph=graph,
        outer=outer,
        rotation=RotationSystem.from_lists(rotation) if rotation else None,
        faces=face_list,
    )


def emit_graph(graph: SimpleGraph, outer: Optional[Triple] = None) -> str:
    lines = []
    if outer is not None:
        lines.append(f"{FileKeywords.OUTER} {' '.join(outer)}")
    lines += [f"{u} {v}" for u, v in graph.edges()]
    return "\n".join(lines) + "\n"


def emit_triangulation(tri: Triangulation, face_set: Optional[FaceSet] = None) -> str:
    """Graph file with rotation lines and, when given, the faces block."""
    lines = [emit_graph(tri.graph, tri.outer).rstrip("\n")]
    for v in tri.graph.vertices:
        lines.append(f"{FileKeywords.ROTATION} {v}: {' '.join(tri.rotation.cycles[v])}")
    if face_set is not None:
        lines.append(FileKeywords.FACES)
        lines += [" ".join(face) for face in face_set.bounded]
    return "\n".join(lines) + "\n"


def emit_triples(triples: TripleSet) -> str:
    return "".join(" ".join(t) + "\n" for t in triples.sorted())


def parse_triples(text: str) -> TripleSet:
    """
    Parse a triples file, as written by `trikit sigma3`.

    Raises:
        FormatError: On a line without exactly three distinct vertices, or malformed JSON.
    """
    if _is_json(text):
        doc = _load_json(text, TriplesDocument)
        try:
            return doc.to_triples()
        except GraphError as e:
            raise FormatError(str(e))

    rows = []
    for number, tokens in _content_lines(text):
        if len(tokens) != 3 or len(set(tokens)) != 3:
            raise FormatError("a triple needs three distinct vertices", number)
        rows.append(tokens)
    return TripleSet.of(rows)


def parse_report(text: str) -> Union[FanReportDocument, RoundtripDocument]:
    """Read back the JSON written by `check-rep` or `roundtrip` with --format json."""
    if not _is_json(text):
        raise FormatError("reports are read back from their JSON form only")
    try:
        payload = json.loads(text)
    except json.JSONDecodeError as e:
        raise FormatError(f"invalid JSON: {e.msg}", e.lineno)
    model = RoundtripDocument if isinstance(payload, dict) and "equal" in payload else FanReportDocument
    return _load_json(text, model)
