import json
from io import StringIO

import pytest

from .conftest import C4
from .conftest import C5
from .conftest import C6
from .conftest import K2
from .conftest import logger
from .helpers import isomorphic
from cowkit import emit_graph6
from cowkit import gk
from cowkit import Graph
from cowkit import input_digest
from cowkit import parse_graph6
from cowkit import ResultDocument
from cowkit.cli import EXIT_NO
from cowkit.cli import EXIT_OK
from cowkit.cli import EXIT_UNSOLVED
from cowkit.cli import EXIT_USAGE
from cowkit.cli import run


def invoke(*argv, stdin: str = ""):
    stdout = StringIO()
    code = run(list(argv), stdin=StringIO(stdin), stdout=stdout)
    return code, stdout.getvalue()


def invoke_json(*argv, stdin: str = ""):
    code, out = invoke(*argv, "--json", "--no-timings", stdin=stdin)
    return code, json.loads(out)


def test_gen_then_cow():
    code, out = invoke("gen", "gk", "--k", "3")
    assert code == EXIT_OK
    line = out.strip()
    assert parse_graph6(line) == gk(3)

    code, doc = invoke_json("cow", "--exact", "--graph6", line)
    assert code == EXIT_OK
    assert doc["value"] == 3
    assert doc["method"] == "oracle"
    assert doc["input_digest"] == input_digest(gk(3))
    assert len(doc["certificate"]) == 3

    code, doc = invoke_json("cow", stdin=line + "\n")
    assert doc["value"] == 3
    assert doc["trace"]["parameter_delta"] == 0


def test_cow_decisions():
    complete_split = K2.substitute({0: Graph.complete(3), 1: Graph.empty(3)})
    code, doc = invoke_json("cow", "--fpt", "--k", "1", "--graph6", emit_graph6(complete_split))
    assert code == EXIT_OK
    assert doc["value"] == "yes"
    assert len(doc["certificate"]) == 1

    code, doc = invoke_json("cow", "--exact", "--k", "4", "--graph6", emit_graph6(C5))
    assert code == EXIT_NO
    assert doc["value"] == "no"
    assert doc["certificate"] is None

    code, out = invoke("cow", "--k", "5", "--graph6", emit_graph6(C5))
    assert code == EXIT_OK
    assert out.startswith("YES")


def test_human_output():
    code, out = invoke("cow", "--graph6", emit_graph6(C5))
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "complete width: 5 (method: c5_component)"
    assert len(lines) == 6
    assert lines[1].startswith("  N1 = {")


def test_recognize():
    code, doc = invoke_json("recognize", "--graph6", emit_graph6(C4))
    assert code == EXIT_OK
    assert doc["value"] == "width<=2"
    assert doc["certificate"]["small_width"]["excluded_by"]["pattern"] == "C4"
    assert doc["certificate"]["chain"]["order"] == [0, 2]
    assert doc["certificate"]["split"] is None

    code, out = invoke("recognize", "--method", "structural", "--graph6", emit_graph6(C4))
    assert out.splitlines()[0] == "width <= 2, not <= 1: contains C4"

    code, doc = invoke_json("recognize", "--graph6", emit_graph6(C5))
    assert doc["value"] == "width>3"
    assert doc["certificate"]["small_width"]["excluded_by"]["pattern"] == "F2"
    assert doc["certificate"]["pseudo_split"]["cycle"]


def test_ecc_and_biclique():
    code, doc = invoke_json("ecc", "--exact", "--graph6", emit_graph6(C4))
    assert (code, doc["value"]) == (EXIT_OK, 4)

    code, doc = invoke_json("ecc", "--graph6", emit_graph6(C4))
    assert (code, doc["value"]) == (EXIT_OK, 4)

    code, doc = invoke_json("biclique", "--graph6", emit_graph6(C6))
    assert (code, doc["value"]) == (EXIT_OK, 3)
    assert all(len(pair) == 2 for pair in doc["certificate"])

    code, _ = invoke("biclique", "--graph6", emit_graph6(C5))
    assert code == EXIT_USAGE


def test_transform():
    code, doc = invoke_json("transform", "biclique2cow", "--k", "1", "--graph6", emit_graph6(K2))
    assert code == EXIT_OK
    assert doc["certificate"]["k_prime"] == 3
    assert isomorphic(parse_graph6(doc["value"]), Graph.path(4))

    code, out = invoke("transform", "biclique2cow", "--k", "1", "--graph6", emit_graph6(K2))
    assert out.splitlines()[1] == "k' = 3"


def test_verify_round_trip(tmp_path):
    graph6 = emit_graph6(C6)

    for command in ("cow", "ecc", "biclique"):
        _, out = invoke(command, "--json", "--graph6", graph6)
        path = tmp_path / f"{command}.json"
        path.write_text(out)
        code, doc = invoke_json("verify", "--witness", str(path), "--graph6", graph6)
        assert code == EXIT_OK, command
        assert doc["value"] == "ok"

    bad = tmp_path / "bad.json"
    bad.write_text("[[0, 2]]")
    code, doc = invoke_json("verify", "--witness", str(bad), "--graph6", emit_graph6(C4))
    assert code == EXIT_NO
    assert doc["certificate"]["offending_pair"] == [1, 3]

    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    code, _ = invoke("verify", "--witness", str(broken), "--graph6", emit_graph6(C4))
    assert code == EXIT_USAGE


GOLDEN_WIDTHS = [
    (K2, 0),
    (Graph.empty(2), 1),
    (Graph.path(3), 1),
    (Graph.path(4), 3),
    (C4, 2),
    (C5, 5),
    (C6, 5),
    (Graph.from_edges(4, [(0, 1), (2, 3)]), 4),
    (Graph.from_edges(4, [(0, 1), (0, 2), (1, 2)]), 3),
    (gk(3), 3),
]


@pytest.mark.parametrize("graph, width", GOLDEN_WIDTHS)
def test_stable_output(graph, width):
    argv = ("cow", "--json", "--no-timings", "--graph6", emit_graph6(graph))
    first, second = invoke(*argv), invoke(*argv)
    assert first == second
    assert json.loads(first[1])["value"] == width


def test_timings_in_document():
    code, out = invoke("cow", "--json", "--graph6", emit_graph6(C5))
    doc = ResultDocument.from_json(out)
    assert set(doc.timings) == {"parse", "solve", "verify"}


def test_input_sources(tmp_path):
    path = tmp_path / "graph.txt"
    path.write_text("# a path\n0 1\n1 2\n2 3\n")
    code, doc = invoke_json("cow", "--file", str(path))
    assert (code, doc["value"]) == (EXIT_OK, 3)

    code, doc = invoke_json("cow", "--format", "graph6", stdin="D?{\n")
    assert doc["value"] == 1


def test_exit_codes(monkeypatch):
    code, _ = invoke("cow", "--graph6", "D?")
    assert code == EXIT_USAGE

    code, _ = invoke()
    assert code == EXIT_USAGE

    code, _ = invoke("cow", "--exact", "--fpt", "--graph6", "?")
    assert code == EXIT_USAGE

    code, _ = invoke("gen", "gk")
    assert code == EXIT_USAGE

    code, _ = invoke("cow", "--format", "edges", stdin="0 \u00b2\n")
    assert code == EXIT_USAGE

    monkeypatch.setenv("COWKIT_LIMIT_N", "sixteen")
    code, out = invoke("cow", "--graph6", emit_graph6(C5))
    assert (code, out) == (EXIT_USAGE, "")

    monkeypatch.setenv("COWKIT_LIMIT_N", "3")
    code, out = invoke("cow", "--exact", "--json", "--graph6", emit_graph6(C5))
    assert code == EXIT_UNSOLVED
    doc = json.loads(out)
    assert doc["value"] == "unsolved"
    assert "limit" in doc["error"]
    logger.info("Unsolved document: %s", doc)
