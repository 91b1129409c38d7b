"""
Tests for the orders, graph and triples parsers and the JSON documents
"""

import json

import pytest

from trikit.cli import main
from trikit.construct.realizer import realize
from trikit.core.constants import ExitCode, FileKeywords
from trikit.core.errors import FormatError
from trikit.formats.documents import FanReportDocument, OrdersDocument, RoundtripDocument, TriplesDocument
from trikit.formats.text import emit_orders, emit_triples, parse_graph, parse_orders, parse_report, parse_triples
from trikit.oracle.corpus import octahedron
from trikit.representation.sigma import sigma3


K4_TEXT = "a2 a3 v4 a1\na1 a3 v4 a2\na1 a2 v4 a3\n"


# === ORDERS === #

def test_parse_orders_reads_three_orders():
    orders = parse_orders("# K4\n" + K4_TEXT)

    assert [list(o.sequence) for o in orders] == [
        ["a2", "a3", "v4", "a1"], ["a1", "a3", "v4", "a2"], ["a1", "a2", "v4", "a3"],
    ]


@pytest.mark.parametrize("text,message", [
    ("", "got 0"),
    ("a2 a3 a1\n", "line 1: orders file needs exactly three orders, got 1"),
    ("a2 a3 a1\n\n# gap\na1 a3 a2\n", "line 4: orders file needs exactly three orders, got 2"),
    (K4_TEXT + "a1 a2 v4 a3\na3 a2 v4 a1\n", "line 4: orders file needs exactly three orders, got 5"),
])
def test_parse_orders_requires_three_orders(text, message):
    with pytest.raises(FormatError) as excinfo:
        parse_orders(text)
    print(f"Rejected: {excinfo.value}")
    assert message in str(excinfo.value)


def test_parse_orders_json_requires_three_orders():
    rep = realize(octahedron())
    assert parse_orders(OrdersDocument.from_representation(rep).model_dump_json()) == list(rep.orders)

    four = json.dumps({"orders": rep.as_lists() + [rep.as_lists()[0]]})
    with pytest.raises(FormatError, match="got 4"):
        parse_orders(four)


def test_emitted_orders_parse_back():
    rep = realize(octahedron())
    assert parse_orders(emit_orders(rep)) == list(rep.orders)


# === GRAPHS === #

def test_keywords_cannot_name_vertices():
    for keyword in FileKeywords.get_all_keywords():
        with pytest.raises(FormatError, match=f"line 2: keyword '{keyword}' cannot name a vertex"):
            parse_graph(f"outer a1 a2 a3\na1 {keyword}\n")

    with pytest.raises(FormatError, match="keyword 'faces'"):
        parse_graph("outer a1 a2 a3\nrotation faces: a1 a2\n")


def test_graph_keywords_still_parse():
    parsed = parse_graph("outer a1 a2 a3\na1 a2\na2 a3\na1 a3\nrotation a1: a3 a2\nfaces\n")

    assert parsed.outer == ("a1", "a2", "a3")
    assert parsed.graph.edge_count == 3
    assert parsed.rotation.cycles["a1"] == ("a3", "a2")
    assert parsed.faces == []


# === TRIPLES AND REPORTS === #

def test_triples_parse_back_from_text_and_json():
    triples = sigma3(realize(octahedron()))

    assert parse_triples(emit_triples(triples)) == triples
    assert parse_triples(TriplesDocument.from_triples(triples).model_dump_json()) == triples

    with pytest.raises(FormatError, match="line 2"):
        parse_triples("a1 a2 x3\na1 a1 x2\n")


def test_reports_parse_back_from_json(tmp_path, capsys, monkeypatch):
    monkeypatch.chdir(tmp_path)
    orders = tmp_path / "k4.txt"
    orders.write_text(K4_TEXT)
    assert main(["--format", "json", "check-rep", str(orders)]) == ExitCode.OK
    fan_report = parse_report(capsys.readouterr().out)

    assert isinstance(fan_report, FanReportDocument)
    assert fan_report.fan == ["a3", "v4", "a2"]
    assert sorted(fan_report.parts) == [1, 2, 3, 4, 5, 6]

    graph = tmp_path / "k4_graph.txt"
    graph.write_text("outer a1 a2 a3\na1 a2\na1 a3\na1 v4\na2 a3\na2 v4\na3 v4\n")
    assert main(["--format", "json", "roundtrip", str(graph)]) == ExitCode.OK
    result = parse_report(capsys.readouterr().out)

    assert isinstance(result, RoundtripDocument)
    assert result.equal is True
    assert result.edges == 6

    with pytest.raises(FormatError, match="JSON form only"):
        parse_report("graphs equal, 6 edges\n")


def run_formats_tests():
    """Run the fixture-free format tests"""
    test_parse_orders_reads_three_orders()
    test_emitted_orders_parse_back()
    test_keywords_cannot_name_vertices()
    test_triples_parse_back_from_text_and_json()
    print("Format tests completed")


if __name__ == "__main__":
    run_formats_tests()
