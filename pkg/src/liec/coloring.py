"""Edge colorings and the local irregularity predicates.

A coloring is a plain ``dict`` mapping canonical edges to small integer
colors. Colors are positional; ``a, b, c, ...`` are display names only.
"""

from __future__ import annotations

import enum
from collections import defaultdict
from typing import Iterable, Mapping

from .graph import Edge, GraphError, SimpleGraph, edge

Coloring = dict[Edge, int]

COLOR_NAMES = "abcdefgh"
A, B, C = 0, 1, 2


class ColoringError(ValueError):
    pass


class AliecStatus(enum.Enum):
    LIEC = "liec"
    PROPER_ALIEC = "proper-aliec"
    INVALID = "invalid"


def color_name(c: int) -> str:
    return COLOR_NAMES[c]


def _check_total(g: SimpleGraph, col: Mapping[Edge, int]) -> None:
    missing = [e for e in g.edges if e not in col]
    if missing:
        raise ColoringError(f"coloring is partial, e.g. {missing[0]} uncolored")


def color_degrees(g: SimpleGraph, col: Mapping[Edge, int]) -> dict[int, dict[int, int]]:
    """Per-vertex color-degree table restricted to the edges of ``g``."""
    deg: dict[int, dict[int, int]] = {v: defaultdict(int) for v in g.vertices}
    for u, v in g.edges:
        c = col[(u, v)]
        deg[u][c] += 1
        deg[v][c] += 1
    return deg


def color_degree(g: SimpleGraph, col: Mapping[Edge, int], v: int, c: int) -> int:
    return sum(1 for w in g.neighbors(v) if col[edge(v, w)] == c)


def colors_at(g: SimpleGraph, col: Mapping[Edge, int], v: int) -> set[int]:
    return {col[edge(v, w)] for w in g.neighbors(v)}


def a_sequence(g: SimpleGraph, col: Mapping[Edge, int], v: int, c: int) -> list[int]:
    """Color-``c`` degrees of the ends of the ``c``-edges at ``v``, non-increasing."""
    seq = [color_degree(g, col, w, c) for w in g.neighbors(v) if col[edge(v, w)] == c]
    return sorted(seq, reverse=True)


def violations(g: SimpleGraph, col: Mapping[Edge, int]) -> list[Edge]:
    """Locally regular edges, in canonical order."""
    _check_total(g, col)
    deg = color_degrees(g, col)
    return [(u, v) for u, v in g.edges if deg[u][col[(u, v)]] == deg[v][col[(u, v)]]]


def first_violation(g: SimpleGraph, col: Mapping[Edge, int]) -> Edge | None:
    bad = violations(g, col)
    return bad[0] if bad else None


def is_liec(g: SimpleGraph, col: Mapping[Edge, int]) -> bool:
    return first_violation(g, col) is None


def is_locally_irregular(g: SimpleGraph) -> bool:
    return all(g.degree(u) != g.degree(v) for u, v in g.edges)


def is_aliec(g: SimpleGraph, root_edge: Edge, col: Mapping[Edge, int]) -> AliecStatus:
    """Classify a coloring of a shrub rooted at the leaf end of ``root_edge``."""
    root_edge = edge(*root_edge)
    if not any(g.degree(x) == 1 for x in root_edge):
        raise GraphError("root edge has no leaf end")
    bad = violations(g, col)
    if not bad:
        return AliecStatus.LIEC
    if bad != [root_edge]:
        return AliecStatus.INVALID
    c = col[root_edge]
    u, v = root_edge
    isolated = all(col[e] != c for x in (u, v) for e in g.incident(x) if e != root_edge)
    return AliecStatus.PROPER_ALIEC if isolated else AliecStatus.INVALID


def sum_colorings(parts: Iterable[Mapping[Edge, int]]) -> Coloring:
    """Union of colorings on pairwise disjoint edge sets."""
    out: Coloring = {}
    for part in parts:
        for e, c in part.items():
            if e in out:
                raise ColoringError(f"edge {e} colored by two parts")
            out[e] = c
    return out


def permute_colors(col: Mapping[Edge, int], mapping: Mapping[int, int] | tuple[int, ...]) -> Coloring:
    """Relabel colors. ``mapping`` is a dict or a tuple ``p`` sending ``i -> p[i]``.

    A three-letter recipe such as ``"cba"`` corresponds to the tuple
    ``(C, B, A)``: color a becomes c, b stays b, c becomes a.
    """
    if isinstance(mapping, tuple):
        mapping = dict(enumerate(mapping))
    used = set(col.values())
    image = [mapping.get(c, c) for c in used]
    if len(set(image)) != len(image):
        raise ColoringError("color mapping is not injective on the used colors")
    return {e: mapping.get(c, c) for e, c in col.items()}


def recipe(name: str) -> tuple[int, ...]:
    """Tuple form of a recipe name like ``"cab"`` (see :func:`permute_colors`)."""
    return tuple(COLOR_NAMES.index(ch) for ch in name)


def swap(col: Mapping[Edge, int], x: int, y: int, only: Iterable[Edge] | None = None) -> Coloring:
    """Exchange colors ``x`` and ``y`` (on ``only`` if given)."""
    out = dict(col)
    targets = out if only is None else only
    for e in list(targets):
        c = out[e]
        if c == x:
            out[e] = y
        elif c == y:
            out[e] = x
    return out


def restrict(col: Mapping[Edge, int], es: Iterable[Edge]) -> Coloring:
    return {e: col[e] for e in es}


def used_colors(col: Mapping[Edge, int]) -> int:
    return len(set(col.values()))


def compact(col: Mapping[Edge, int]) -> Coloring:
    """Renumber the used colors to 0..k-1 in order of first use."""
    order: dict[int, int] = {}
    for e in sorted(col):
        order.setdefault(col[e], len(order))
    return {e: order[c] for e, c in col.items()}


def format_coloring(col: Mapping[Edge, int]) -> str:
    return " ".join(f"{u}-{v}:{color_name(c)}" for (u, v), c in sorted(col.items()))
