"""
End-to-end tests of the trikit command line using the sample files
"""

import json
from pathlib import Path

import numpy as np
import pytest

from trikit.cli import main
from trikit.construct.realizer import realize
from trikit.core.constants import CONFIG_FILE_NAME, ExitCode
from trikit.oracle.corpus import icosahedron, k4, octahedron
from trikit.oracle.generator import generate_corpus
from trikit.representation.sigma import sigma2

from consistency import check_consistency


SAMPLE = Path(__file__).parent / "sample"


def sample(name: str) -> str:
    return str(SAMPLE / name)


@pytest.fixture(autouse=True)
def isolated_cwd(tmp_path, monkeypatch):
    """Keep a stray trikit.config.json in the working directory out of the tests"""
    monkeypatch.chdir(tmp_path)


# === REPRESENTATION COMMANDS === #

def test_check_rep_on_k4_table(capsys):
    code = main(["check-rep", sample("k4_orders.txt")])
    out = capsys.readouterr().out

    print("=== CHECK-REP ===")
    print(out)
    assert code == ExitCode.OK
    assert "standard representation, apexes a1 a2 a3" in out
    assert "fan of a1: a3 v4 a2" in out
    assert "b = v4" in out
    assert "FAILS" not in out


def test_check_rep_reports_dominated_pair(capsys):
    code = main(["check-rep", sample("dominated_orders.txt")])
    captured = capsys.readouterr()

    assert code == ExitCode.FAILURE
    assert "not a representation, witness (a, v)" in captured.err
    assert captured.out == ""


def test_check_rep_json(capsys):
    code = main(["--format", "json", "check-rep", sample("k4_orders.txt")])
    doc = json.loads(capsys.readouterr().out)

    assert code == ExitCode.OK
    assert doc["valid"] is True
    assert doc["fan"] == ["a3", "v4", "a2"]
    assert doc["commutes"] is True
    assert all(part["holds"] for part in doc["parts"].values())


def test_malformed_orders_are_usage_errors(capsys):
    code = main(["sigma2", sample("malformed_orders.txt")])
    err = capsys.readouterr().err

    assert code == ExitCode.USAGE
    assert "line 2" in err


def test_wrong_order_count_is_usage_error(tmp_path, capsys):
    assert main(["sigma2", sample("two_orders.txt")]) == ExitCode.USAGE
    assert "line 3: orders file needs exactly three orders, got 2" in capsys.readouterr().err

    assert main(["check-rep", sample("four_orders.txt")]) == ExitCode.USAGE
    assert "line 5: orders file needs exactly three orders, got 4" in capsys.readouterr().err

    path = tmp_path / "two.json"
    path.write_text(json.dumps({"orders": [["a2", "a3", "a1"], ["a1", "a3", "a2"]]}))
    assert main(["sigma3", str(path)]) == ExitCode.USAGE
    assert "got 2" in capsys.readouterr().err


def test_missing_file_is_usage_error(capsys):
    assert main(["sigma2", "no_such_file.txt"]) == ExitCode.USAGE
    assert "cannot read" in capsys.readouterr().err


def test_sigma2_and_sigma3_outputs(capsys):
    assert main(["sigma2", sample("k4_orders.txt")]) == ExitCode.OK
    graph_text = capsys.readouterr().out
    assert graph_text.splitlines()[0] == "outer a1 a2 a3"
    assert len(graph_text.splitlines()) == 7

    assert main(["sigma3", sample("k4_orders.txt")]) == ExitCode.OK
    assert capsys.readouterr().out == "a1 a2 v4\na1 a3 v4\na2 a3 v4\n"

    assert main(["--format", "dot", "sigma2", sample("k4_orders.txt")]) == ExitCode.OK
    dot = capsys.readouterr().out
    assert dot.startswith("graph trikit {")
    assert '"a1" -- "a2" [style=bold];' in dot

    assert main(["--format", "dot", "sigma3", sample("k4_orders.txt")]) == ExitCode.USAGE


# === TRIANGULATION COMMANDS === #

def test_roundtrip_octahedron(capsys):
    code = main(["roundtrip", "--verify", sample("octahedron.txt")])
    out = capsys.readouterr().out

    assert code == ExitCode.OK
    assert out == "graphs equal, 12 edges\n"


def test_roundtrip_rejects_non_triangulation(capsys):
    code = main(["roundtrip", sample("k4_minus_edge.txt")])
    err = capsys.readouterr().err

    assert code == ExitCode.FAILURE
    assert "not a triangulation" in err
    assert "witness: (a1)" in err


def test_realize_from_faces_block(capsys):
    code = main(["realize", sample("k4_faces.txt")])
    out = capsys.readouterr().out

    assert code == ExitCode.OK
    assert out == "# apexes a1 a2 a3\na2 a3 v4 a1\na1 a3 v4 a2\na1 a2 v4 a3\n"


def test_embed_output_feeds_roundtrip(tmp_path, capsys):
    assert main(["embed", "--verify", sample("k4_orders.txt")]) == ExitCode.OK
    embedded = capsys.readouterr().out
    assert "rotation a1:" in embedded
    assert "faces" in embedded

    path = tmp_path / "k4_embedded.txt"
    path.write_text(embedded)
    assert main(["roundtrip", str(path)]) == ExitCode.OK
    assert capsys.readouterr().out == "graphs equal, 6 edges\n"


def test_json_pipeline(tmp_path, capsys):
    """realize -> embed -> roundtrip, all through JSON documents"""
    assert main(["--format", "json", "realize", sample("octahedron.txt")]) == ExitCode.OK
    orders_path = tmp_path / "orders.json"
    orders_path.write_text(capsys.readouterr().out)

    assert main(["--format", "json", "embed", str(orders_path)]) == ExitCode.OK
    graph_doc = json.loads(capsys.readouterr().out)
    assert graph_doc["outer"] == ["a1", "a2", "a3"]
    assert len(graph_doc["edges"]) == 12
    assert len(graph_doc["faces"]) == 7

    graph_path = tmp_path / "graph.json"
    graph_path.write_text(json.dumps(graph_doc))
    assert main(["--format", "json", "roundtrip", str(graph_path)]) == ExitCode.OK
    result = json.loads(capsys.readouterr().out)
    assert result["equal"] is True
    assert result["edges"] == 12


def test_bad_json_is_usage_error(tmp_path, capsys):
    path = tmp_path / "bad.json"
    path.write_text('{"orders": 3}')
    assert main(["check-rep", str(path)]) == ExitCode.USAGE


# === ORACLE COMMANDS === #

def test_oracle_search(capsys):
    assert main(["oracle", "search", sample("k4_faces.txt")]) == ExitCode.OK
    assert capsys.readouterr().out == "# apexes a1 a2 a3\na2 a3 v4 a1\na1 a3 v4 a2\na1 a2 v4 a3\n"

    assert main(["oracle", "search", "--cap", "3", sample("k4_faces.txt")]) == ExitCode.FAILURE
    assert main(["oracle", "search", sample("k4_minus_edge.txt")]) == ExitCode.FAILURE


def test_oracle_gen_writes_reproducible_files(tmp_path, capsys):
    first, second = tmp_path / "first", tmp_path / "second"
    for out_dir in (first, second):
        code = main(["oracle", "gen", "--n", "10", "--seed", "7", "--count", "3", "--out", str(out_dir)])
        assert code == ExitCode.OK

    names = sorted(p.name for p in first.iterdir())
    assert names == ["stacked_n10_s7_000.txt", "stacked_n10_s7_001.txt", "stacked_n10_s7_002.txt"]
    for name in names:
        assert (first / name).read_text() == (second / name).read_text()
        assert main(["roundtrip", str(first / name)]) == ExitCode.OK
        assert capsys.readouterr().out == "graphs equal, 24 edges\n"


def test_oracle_gen_first_file_ignores_count(tmp_path, capsys):
    single, batch = tmp_path / "single", tmp_path / "batch"
    assert main(["oracle", "gen", "--n", "12", "--seed", "3", "--out", str(single)]) == ExitCode.OK
    assert main(["oracle", "gen", "--n", "12", "--seed", "3", "--count", "4", "--out", str(batch)]) == ExitCode.OK

    name = "stacked_n12_s3_000.txt"
    assert (single / name).read_text() == (batch / name).read_text()


def test_oracle_gen_rejects_small_n(capsys):
    assert main(["oracle", "gen", "--n", "3"]) == ExitCode.USAGE
    assert "--n must be at least 4, got 3" in capsys.readouterr().err


# === CONFIGURATION === #

def test_config_file_and_flags(tmp_path, capsys):
    (tmp_path / CONFIG_FILE_NAME).write_text(json.dumps({"output": {"format": "json"}}))

    assert main(["sigma3", sample("k4_orders.txt")]) == ExitCode.OK
    assert json.loads(capsys.readouterr().out)["triples"][0] == ["a1", "a2", "v4"]

    # the flag wins over the file
    assert main(["--format", "text", "sigma3", sample("k4_orders.txt")]) == ExitCode.OK
    assert capsys.readouterr().out.startswith("a1 a2 v4")


def test_invalid_config_is_usage_error(tmp_path, capsys):
    path = tmp_path / "broken.json"
    path.write_text(json.dumps({"search": {"cap": 1}}))

    assert main(["--config", str(path), "sigma2", sample("k4_orders.txt")]) == ExitCode.USAGE
    assert main(["oracle", "search", "--workers", "0", sample("k4_faces.txt")]) == ExitCode.USAGE


def test_version_and_usage(capsys):
    assert main(["--version"]) == ExitCode.OK
    assert "trikit" in capsys.readouterr().out
    assert main([]) == ExitCode.USAGE


# === ACCEPTANCE === #

def test_named_triangulations_roundtrip():
    for tri in (k4(), octahedron(), icosahedron()):
        assert sigma2(realize(tri, verify=True)) == tri.graph


@pytest.mark.slow
def test_seeded_corpus_roundtrip():
    """100 stacked triangulations with 5 to 200 vertices, each through the full consistency check"""
    sizes = np.random.Generator(np.random.PCG64(2024)).integers(5, 201, size=100).tolist()
    corpus = generate_corpus(sizes, seed=2024)

    for tri in corpus:
        rep = realize(tri, verify=True)
        check_consistency(tri, rep)
    print(f"Checked {len(corpus)} triangulations, largest n={max(sizes)}")


def run_integration_tests():
    """Run the CLI tests that need no fixtures"""
    test_named_triangulations_roundtrip()
    print("Integration tests completed")


if __name__ == "__main__":
    run_integration_tests()
