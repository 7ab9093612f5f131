"""Reading and writing graphs and colorings.

Formats:

* edge-list text: one ``u v`` pair per line, ``#`` starts a comment;
* graph JSON: ``{"vertices": [...], "edges": [[u, v], ...]}``;
* coloring JSON: ``{"colors": k, "assignment": {"u-v": c, ...}}``;
* DOT export, one ``color`` attribute per edge.
"""

from __future__ import annotations

import json
import sys
from pathlib import Path
from typing import Mapping

from .coloring import Coloring, color_name
from .graph import Edge, SimpleGraph, edge


class FormatError(ValueError):
    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


# edge-list text ------------------------------------------------------------

def parse_edge_list(text: str) -> SimpleGraph:
    edges: list[Edge] = []
    vertices: list[int] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        try:
            nums = [int(p) for p in parts]
        except ValueError:
            raise FormatError(f"expected integers, got {line!r}", lineno) from None
        if len(nums) == 1:
            vertices.append(nums[0])  # an isolated vertex
            continue
        if len(nums) != 2:
            raise FormatError(f"expected 'u v', got {line!r}", lineno)
        u, v = nums
        if u == v:
            raise FormatError(f"loop at vertex {u}", lineno)
        if u < 0 or v < 0:
            raise FormatError("vertex ids must be non-negative", lineno)
        edges.append(edge(u, v))
    g = SimpleGraph(edges, vertices)
    if g.duplicates:
        raise FormatError(f"{g.duplicates} repeated edge(s)")
    return g


def format_edge_list(g: SimpleGraph) -> str:
    lines = [f"{u} {v}" for u, v in g.edges]
    covered = {x for e in g.edges for x in e}
    lines += [str(x) for x in g.vertices if x not in covered]
    return "\n".join(lines) + "\n"


# JSON ----------------------------------------------------------------------

def _check_keys(obj: object, allowed: set[str], required: set[str], what: str) -> dict:
    if not isinstance(obj, dict):
        raise FormatError(f"{what} must be a JSON object")
    unknown = set(obj) - allowed
    if unknown:
        raise FormatError(f"unknown field(s) in {what}: {', '.join(sorted(unknown))}")
    missing = required - set(obj)
    if missing:
        raise FormatError(f"missing field(s) in {what}: {', '.join(sorted(missing))}")
    return obj


def _load_json(text: str) -> object:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise FormatError(exc.msg, exc.lineno) from None


def graph_from_json(text: str) -> SimpleGraph:
    obj = _check_keys(_load_json(text), {"vertices", "edges"}, {"edges"}, "graph")
    edges = []
    for i, pair in enumerate(obj["edges"]):
        if not (isinstance(pair, list) and len(pair) == 2 and all(isinstance(x, int) for x in pair)):
            raise FormatError(f"edge #{i} must be a pair of integers")
        if pair[0] == pair[1]:
            raise FormatError(f"edge #{i} is a loop")
        edges.append(edge(*pair))
    vertices = obj.get("vertices", [])
    if not all(isinstance(x, int) for x in vertices):
        raise FormatError("vertices must be integers")
    g = SimpleGraph(edges, vertices)
    if g.duplicates:
        raise FormatError(f"{g.duplicates} repeated edge(s)")
    stray = {x for e in edges for x in e} - set(vertices)
    if vertices and stray:
        raise FormatError(f"edge endpoints missing from vertices: {sorted(stray)}")
    return g


def graph_to_json(g: SimpleGraph) -> str:
    return json.dumps({"vertices": list(g.vertices), "edges": [list(e) for e in g.edges]})


def _parse_key(key: str) -> Edge:
    try:
        a, b = key.split("-")
        return edge(int(a), int(b))
    except ValueError:
        raise FormatError(f"bad edge key {key!r}; expected 'u-v'") from None


def coloring_from_json(text: str) -> tuple[Coloring, int]:
    obj = _check_keys(_load_json(text), {"colors", "assignment"}, {"assignment"}, "coloring")
    assignment = obj["assignment"]
    if not isinstance(assignment, dict):
        raise FormatError("assignment must be an object")
    col: Coloring = {}
    for key, c in assignment.items():
        if not isinstance(c, int) or c < 0:
            raise FormatError(f"color of {key} must be a non-negative integer")
        e = _parse_key(key)
        if e in col:
            raise FormatError(f"edge {key} assigned twice")
        col[e] = c
    k = obj.get("colors", max(col.values(), default=-1) + 1)
    if not isinstance(k, int):
        raise FormatError("colors must be an integer")
    if col and max(col.values()) >= k:
        raise FormatError(f"color {max(col.values())} out of range for {k} colors")
    return col, k


def coloring_to_dict(col: Mapping[Edge, int], k: int | None = None) -> dict:
    if k is None:
        k = max(col.values(), default=-1) + 1  # palette size, so gaps in the colors still parse
    return {"colors": k, "assignment": {f"{u}-{v}": c for (u, v), c in sorted(col.items())}}


def coloring_to_json(col: Mapping[Edge, int], k: int | None = None) -> str:
    return json.dumps(coloring_to_dict(col, k))


# DOT -----------------------------------------------------------------------

_DOT_COLORS = ["red", "blue", "darkgreen", "orange", "purple", "brown", "gray", "black"]


def to_dot(g: SimpleGraph, col: Mapping[Edge, int] | None = None, name: str = "G") -> str:
    lines = [f"graph {name} {{"]
    for x in g.vertices:
        lines.append(f"  {x};")
    for u, v in g.edges:
        if col is not None and (u, v) in col:
            c = col[(u, v)]
            lines.append(f'  {u} -- {v} [color={_DOT_COLORS[c % len(_DOT_COLORS)]}, label="{color_name(c)}"];')
        else:
            lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"


# files ---------------------------------------------------------------------

def read_graph(path: str | Path) -> SimpleGraph:
    """Read a graph; JSON if the content starts with ``{``, edge list otherwise."""
    text = sys.stdin.read() if str(path) == "-" else Path(path).read_text()
    return graph_from_json(text) if text.lstrip().startswith("{") else parse_edge_list(text)


def read_coloring(path: str | Path) -> tuple[Coloring, int]:
    return coloring_from_json(Path(path).read_text())
