"""Exact exponential-time search for locally irregular edge colorings.

This is the independent reference every constructive routine is checked
against, so it deliberately shares nothing with them beyond the graph type.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from typing import Callable, Iterator, Mapping

from .coloring import AliecStatus, Coloring, is_aliec, is_liec
from .graph import Edge, GraphError, SimpleGraph, edge, is_connected


class SearchExhausted(RuntimeError):
    """A node or time limit was hit before the search finished."""


@dataclass
class SearchBudget:
    max_colors: int = 5
    node_limit: int | None = None
    time_limit: float | None = None


# Debug switch: with pruning off the search only checks complete colorings.
PRUNING = True


def _edge_order(g: SimpleGraph) -> list[Edge]:
    """Edges in DFS discovery order so vertices saturate early."""
    order: list[Edge] = []
    seen_e: set[Edge] = set()
    seen_v: set[int] = set()
    for root in g.vertices:
        if root in seen_v:
            continue
        stack = [root]
        while stack:
            x = stack.pop()
            if x in seen_v:
                continue
            seen_v.add(x)
            for y in g.neighbors(x):
                e = edge(x, y)
                if e not in seen_e and y in seen_v:
                    seen_e.add(e)
                    order.append(e)
            for y in reversed(g.neighbors(x)):
                if y not in seen_v:
                    stack.append(y)
    return order


def search_colorings(
    g: SimpleGraph,
    k: int,
    *,
    fixed: Mapping[Edge, int] | None = None,
    exempt: set[Edge] | frozenset[Edge] = frozenset(),
    symmetry: bool = True,
    budget: SearchBudget | None = None,
) -> Iterator[Coloring]:
    """Yield every k-coloring in which all non-exempt edges are locally irregular.

    ``fixed`` pins colors of some edges (symmetry breaking is then disabled).
    With ``symmetry`` the colors are introduced in increasing order, so each
    coloring is produced once up to renaming of colors.
    """
    if k < 1:
        raise GraphError("k must be at least 1")
    fixed = dict(fixed or {})
    if fixed:
        symmetry = False
    order = _edge_order(g)
    m = len(order)
    index = {v: i for i, v in enumerate(g.vertices)}
    ends = [(index[u], index[v]) for u, v in order]
    n = len(index)
    remaining = [0] * n
    for a, b in ends:
        remaining[a] += 1
        remaining[b] += 1
    incid: list[list[int]] = [[] for _ in range(n)]
    for i, (a, b) in enumerate(ends):
        incid[a].append(i)
        incid[b].append(i)
    is_exempt = [e in exempt for e in order]
    pinned = [fixed.get(e) for e in order]
    cdeg = [[0] * k for _ in range(n)]
    col = [-1] * m
    nodes = 0
    limit = budget.node_limit if budget else None
    deadline = (time.monotonic() + budget.time_limit) if budget and budget.time_limit else None
    prune = PRUNING

    def saturated_ok(x: int) -> bool:
        dx = cdeg[x]
        for j in incid[x]:
            if is_exempt[j]:
                continue
            a, b = ends[j]
            y = b if a == x else a
            if remaining[y] == 0 and dx[col[j]] == cdeg[y][col[j]]:
                return False
        return True

    def final_ok() -> bool:
        for j in range(m):
            if not is_exempt[j]:
                a, b = ends[j]
                if cdeg[a][col[j]] == cdeg[b][col[j]]:
                    return False
        return True

    def rec(i: int, top: int) -> Iterator[Coloring]:
        nonlocal nodes
        if i == m:
            if prune or final_ok():
                yield {order[j]: col[j] for j in range(m)}
            return
        nodes += 1
        if limit is not None and nodes > limit:
            raise SearchExhausted(f"node limit {limit} reached")
        if deadline is not None and (nodes & 1023) == 0 and time.monotonic() > deadline:
            raise SearchExhausted("time limit reached")
        a, b = ends[i]
        if pinned[i] is not None:
            choices = (pinned[i],)
        elif symmetry:
            choices = range(min(top + 1, k))
        else:
            choices = range(k)
        remaining[a] -= 1
        remaining[b] -= 1
        for c in choices:
            col[i] = c
            cdeg[a][c] += 1
            cdeg[b][c] += 1
            if not prune or ((remaining[a] or saturated_ok(a)) and (remaining[b] or saturated_ok(b))):
                yield from rec(i + 1, max(top, c + 1))
            cdeg[a][c] -= 1
            cdeg[b][c] -= 1
        col[i] = -1
        remaining[a] += 1
        remaining[b] += 1

    yield from rec(0, 0)


def find_liec(g: SimpleGraph, k: int, budget: SearchBudget | None = None) -> Coloring | None:
    """A k-liec of ``g`` or ``None`` when none exists (proved by exhaustion)."""
    for col in search_colorings(g, k, budget=budget):
        assert is_liec(g, col)
        return col
    return None


def chromatic_index_irr(g: SimpleGraph, kmax: int = 5, budget: SearchBudget | None = None) -> int | None:
    """Smallest k <= kmax with a k-liec, else ``None``."""
    if not is_connected(g):
        raise GraphError("graph is not connected")
    if g.m == 0:
        return 0
    for k in range(1, kmax + 1):
        if find_liec(g, k, budget) is not None:
            return k
    return None


def enumerate_liecs(
    g: SimpleGraph, k: int, budget: SearchBudget | None = None, *, up_to_permutation: bool = False
) -> Iterator[Coloring]:
    """Every k-liec exactly once (or once per color-renaming class)."""
    yield from search_colorings(g, k, symmetry=up_to_permutation, budget=budget)


def find_aliec(shrub: SimpleGraph, root: int, k: int = 2, budget: SearchBudget | None = None) -> Coloring | None:
    """A k-aliec of a shrub rooted at the leaf ``root``."""
    if shrub.degree(root) != 1:
        raise GraphError("shrub root must be a leaf")
    root_edge = shrub.incident(root)[0]
    for col in search_colorings(shrub, k, exempt={root_edge}, budget=budget):
        if is_aliec(shrub, root_edge, col) is not AliecStatus.INVALID:
            return col
    return None


def find_where(
    g: SimpleGraph,
    k: int,
    accept: Callable[[Coloring], bool],
    *,
    exempt: set[Edge] | frozenset[Edge] = frozenset(),
    fixed: Mapping[Edge, int] | None = None,
    symmetry: bool = False,
    budget: SearchBudget | None = None,
) -> Coloring | None:
    """First coloring (non-exempt edges irregular) satisfying ``accept``."""
    for col in search_colorings(g, k, exempt=exempt, fixed=fixed, symmetry=symmetry, budget=budget):
        if accept(col):
            return col
    return None
