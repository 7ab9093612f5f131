import json

import pytest

from liec.coloring import is_liec
from liec.graph import SimpleGraph
from liec.io import (
    FormatError,
    coloring_from_json,
    coloring_to_json,
    format_edge_list,
    graph_from_json,
    graph_to_json,
    parse_edge_list,
    read_coloring,
    read_graph,
    to_dot,
)
from liec.oracle import find_liec


def test_edge_list_round_trip():
    g = SimpleGraph([(0, 1), (1, 2), (2, 0), (2, 3)], [7])
    h = parse_edge_list(format_edge_list(g))
    assert h.edges == g.edges
    assert set(h.vertices) == set(g.vertices)


def test_comments_and_blank_lines():
    g = parse_edge_list("# a path\n0 1\n\n1 2  # second edge\n")
    assert g.edges == ((0, 1), (1, 2))


@pytest.mark.parametrize(
    "text, line",
    [("0 1\n1 x\n", 2), ("0 1\n\n2 2\n", 3), ("0 1 2\n", 1), ("0 -1\n", 1)],
    ids=["word", "loop", "triple", "negative"],
)
def test_edge_list_errors_carry_line(text, line):
    with pytest.raises(FormatError) as exc:
        parse_edge_list(text)
    assert exc.value.line == line
    assert f"line {line}" in str(exc.value)


def test_repeated_edge_rejected():
    with pytest.raises(FormatError, match="repeated"):
        parse_edge_list("0 1\n1 0\n")


def test_graph_json_round_trip():
    g = SimpleGraph([(0, 1), (1, 2)], [5])
    h = graph_from_json(graph_to_json(g))
    assert h.edges == g.edges and set(h.vertices) == set(g.vertices)


@pytest.mark.parametrize(
    "text, msg",
    [
        ('{"edges": [[0, 1]], "weight": 3}', "unknown"),
        ('{"vertices": [0, 1]}', "missing"),
        ('{"edges": [[0, 0]]}', "loop"),
        ('{"edges": [[0, 1, 2]]}', "pair"),
        ('{"vertices": [0], "edges": [[0, 1]]}', "missing from vertices"),
        ("[1, 2]", "object"),
    ],
)
def test_graph_json_errors(text, msg):
    with pytest.raises(FormatError, match=msg):
        graph_from_json(text)


def test_bad_json_reports_line():
    with pytest.raises(FormatError) as exc:
        graph_from_json('{\n"edges": [[0, 1]\n')
    assert exc.value.line is not None


def test_coloring_round_trip_reverifies():
    g = SimpleGraph([(0, 1), (1, 2), (2, 3), (3, 4), (1, 5)])
    col = find_liec(g, 3)
    back, k = coloring_from_json(coloring_to_json(col))
    assert back == col
    assert k == len(set(col.values()))
    assert is_liec(g, back)


@pytest.mark.parametrize(
    "obj, msg",
    [
        ({"assignment": {"0-1": 0}, "extra": 1}, "unknown"),
        ({"assignment": {"0_1": 0}}, "edge key"),
        ({"assignment": {"0-1": -1}}, "non-negative"),
        ({"colors": 2, "assignment": {"0-1": 2}}, "out of range"),
        ({"assignment": {"0-1": 0, "1-0": 1}}, "twice"),
    ],
)
def test_coloring_json_errors(obj, msg):
    with pytest.raises(FormatError, match=msg):
        coloring_from_json(json.dumps(obj))


def test_dot_output():
    g = SimpleGraph([(0, 1), (1, 2)])
    text = to_dot(g, {(0, 1): 0, (1, 2): 1})
    assert text.startswith("graph G {")
    assert "0 -- 1 [color=red" in text and "1 -- 2 [color=blue" in text
    assert to_dot(g).count("--") == 2


def test_read_files(tmp_path):
    (tmp_path / "g.txt").write_text("0 1\n1 2\n")
    (tmp_path / "g.json").write_text('{"edges": [[0, 1], [1, 2]]}')
    (tmp_path / "c.json").write_text('{"colors": 1, "assignment": {"0-1": 0, "1-2": 0}}')
    assert read_graph(tmp_path / "g.txt").edges == read_graph(tmp_path / "g.json").edges
    col, k = read_coloring(tmp_path / "c.json")
    assert k == 1 and len(col) == 2


def test_coloring_with_unused_middle_color():
    col = {(0, 1): 0, (0, 2): 2}
    back, k = coloring_from_json(coloring_to_json(col))
    assert back == col and k == 3
