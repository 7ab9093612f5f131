"""Immutable simple graphs and the structural primitives used by the colorer.

Vertices are non-negative integers, edges are canonical ``(min, max)`` pairs.
Everything that iterates does so in sorted order so results are reproducible.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Raised on malformed input or a violated precondition."""


def edge(u: int, v: int) -> Edge:
    if u == v:
        raise GraphError(f"loop at vertex {u}")
    return (u, v) if u < v else (v, u)


class SimpleGraph:
    """An undirected simple graph that never changes after construction."""

    __slots__ = ("_vertices", "_edges", "_edge_set", "_adj", "duplicates", "_hash")

    def __init__(self, edges: Iterable[Sequence[int]] = (), vertices: Iterable[int] = ()):
        es: set[Edge] = set()
        dup = 0
        for pair in edges:
            u, v = pair
            e = edge(int(u), int(v))
            if e in es:
                dup += 1
            es.add(e)
        adj: dict[int, list[int]] = {int(x): [] for x in vertices}
        for u, v in es:
            adj.setdefault(u, []).append(v)
            adj.setdefault(v, []).append(u)
        self._adj = {x: tuple(sorted(ns)) for x, ns in sorted(adj.items())}
        self._vertices = tuple(self._adj)
        self._edges = tuple(sorted(es))
        self._edge_set = frozenset(es)
        self.duplicates = dup
        self._hash = None

    # basic accessors -----------------------------------------------------

    @property
    def vertices(self) -> tuple[int, ...]:
        return self._vertices

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self._edges

    @property
    def edges_set(self) -> frozenset[Edge]:
        return self._edge_set

    def __len__(self) -> int:
        return len(self._vertices)

    @property
    def n(self) -> int:
        return len(self._vertices)

    @property
    def m(self) -> int:
        return len(self._edges)

    def __contains__(self, v: object) -> bool:
        return v in self._adj

    def has_edge(self, u: int, v: int) -> bool:
        return u in self._adj and v in self._adj[u]

    def neighbors(self, v: int) -> tuple[int, ...]:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"vertex {v} not in graph") from None

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def incident(self, v: int) -> list[Edge]:
        return [edge(v, w) for w in self.neighbors(v)]

    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def degrees(self) -> dict[int, int]:
        return {v: len(ns) for v, ns in self._adj.items()}

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimpleGraph):
            return NotImplemented
        return self._vertices == other._vertices and self._edges == other._edges

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self._vertices, self._edges))
        return self._hash

    def __repr__(self) -> str:
        return f"SimpleGraph(n={self.n}, edges={list(self._edges)})"

    # derived graphs ------------------------------------------------------

    def without_edges(self, removed: Iterable[Sequence[int]]) -> SimpleGraph:
        """Delete edges; vertices left isolated are dropped."""
        gone = {edge(*e) for e in removed}
        return SimpleGraph(e for e in self._edges if e not in gone)

    def with_edges(self, added: Iterable[Sequence[int]]) -> SimpleGraph:
        return SimpleGraph(list(self._edges) + [tuple(e) for e in added], self._vertices)

    def edge_subgraph(self, es: Iterable[Sequence[int]]) -> SimpleGraph:
        keep = {edge(*e) for e in es}
        missing = keep.difference(self._edges)
        if missing:
            raise GraphError(f"edges {sorted(missing)} not in graph")
        return SimpleGraph(keep)

    def induced(self, vs: Iterable[int]) -> SimpleGraph:
        vs = set(vs)
        return SimpleGraph((e for e in self._edges if e[0] in vs and e[1] in vs), vertices=vs)

    def without_vertex(self, v: int) -> SimpleGraph:
        return SimpleGraph(e for e in self._edges if v not in e)

    def relabel(self, mapping: dict[int, int]) -> SimpleGraph:
        return SimpleGraph(((mapping[u], mapping[v]) for u, v in self._edges),
                           vertices=(mapping[x] for x in self._vertices))

    def normalized(self) -> tuple[SimpleGraph, dict[int, int]]:
        """Relabel to 0..n-1 preserving order; returns the graph and old->new map."""
        mapping = {v: i for i, v in enumerate(self._vertices)}
        return self.relabel(mapping), mapping


def build_graph(edge_list: Iterable[Sequence[int]], vertices: Iterable[int] = ()) -> SimpleGraph:
    """Canonical graph from vertex pairs. ``duplicates`` counts collapsed repeats."""
    return SimpleGraph(edge_list, vertices)


def path_graph(length: int, start: int = 0) -> SimpleGraph:
    if length == 0:
        return SimpleGraph(vertices=[start])
    return SimpleGraph((start + i, start + i + 1) for i in range(length))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph((i, (i + 1) % n) for i in range(n))


def star_graph(k: int) -> SimpleGraph:
    return SimpleGraph((0, i) for i in range(1, k + 1))


# connectivity ------------------------------------------------------------

def components(g: SimpleGraph) -> list[list[int]]:
    seen: set[int] = set()
    out = []
    for s in g.vertices:
        if s in seen:
            continue
        comp = [s]
        seen.add(s)
        q = deque([s])
        while q:
            x = q.popleft()
            for y in g.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    comp.append(y)
                    q.append(y)
        out.append(sorted(comp))
    return out


def is_connected(g: SimpleGraph) -> bool:
    return g.n <= 1 or len(components(g)) == 1


def _require_connected(g: SimpleGraph) -> None:
    if not is_connected(g):
        raise GraphError("graph is not connected")


def is_tree(g: SimpleGraph) -> bool:
    return is_connected(g) and g.m == g.n - 1


def bfs_distances(g: SimpleGraph, s: int) -> dict[int, int]:
    dist = {s: 0}
    q = deque([s])
    while q:
        x = q.popleft()
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist


# blocks and cycles -------------------------------------------------------

def biconnected_blocks(g: SimpleGraph) -> list[list[Edge]]:
    """Edge sets of the blocks (Hopcroft-Tarjan, iterative)."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    blocks: list[list[Edge]] = []
    counter = 0
    for root in g.vertices:
        if root in disc:
            continue
        disc[root] = low[root] = counter
        counter += 1
        stack: list[Edge] = []
        it = [(root, -1, iter(g.neighbors(root)))]
        while it:
            v, parent, nbrs = it[-1]
            advanced = False
            for w in nbrs:
                if w == parent:
                    continue
                if w not in disc:
                    disc[w] = low[w] = counter
                    counter += 1
                    stack.append(edge(v, w))
                    it.append((w, v, iter(g.neighbors(w))))
                    advanced = True
                    break
                if disc[w] < disc[v]:
                    stack.append(edge(v, w))
                    low[v] = min(low[v], disc[w])
            if advanced:
                continue
            it.pop()
            if it:
                p = it[-1][0]
                low[p] = min(low[p], low[v])
                if low[v] >= disc[p]:
                    block = []
                    target = edge(p, v)
                    while True:
                        e = stack.pop()
                        block.append(e)
                        if e == target:
                            break
                    blocks.append(sorted(block))
    return blocks


def is_cactus(g: SimpleGraph) -> bool:
    """True iff every block is a single edge or a cycle."""
    _require_connected(g)
    for block in biconnected_blocks(g):
        if len(block) == 1:
            continue
        vs = {x for e in block for x in e}
        if len(vs) != len(block):
            return False
    return True


def _cycle_order(block: list[Edge]) -> list[int]:
    adj: dict[int, list[int]] = {}
    for u, v in block:
        adj.setdefault(u, []).append(v)
        adj.setdefault(v, []).append(u)
    start = min(adj)
    order = [start]
    prev, cur = start, min(adj[start])
    while cur != start:
        order.append(cur)
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
    return order


def cycle_list(g: SimpleGraph) -> list[list[int]]:
    """The cycles of a cactus, each as a vertex sequence starting at its minimum."""
    if not is_cactus(g):
        raise GraphError("graph is not a cactus")
    cycles = [_cycle_order(b) for b in biconnected_blocks(g) if len(b) > 1]
    return sorted(cycles)


def cycle_edges(cycle: Sequence[int]) -> list[Edge]:
    return [edge(cycle[i], cycle[(i + 1) % len(cycle)]) for i in range(len(cycle))]


def cycle_count(g: SimpleGraph) -> int:
    """Cyclomatic number of a connected graph."""
    return g.m - g.n + 1 if g.m else 0


# trimming ----------------------------------------------------------------

@dataclass(frozen=True)
class TrimStep:
    """One 2-edge shortening.

    ``walk`` is the vertex sequence of the pendant path (anchor first) or the
    ear (endpoints first/last) *before* shortening; ``removed`` the two
    vertices taken out of it.
    """
    kind: str  # "pendant-path-shorten" | "ear-shorten"
    walk: tuple[int, ...]
    removed: tuple[int, int]
    removed_length: int = 2

    @property
    def anchor(self) -> tuple[int, ...]:
        if self.kind == "pendant-path-shorten":
            return (self.walk[0],)
        return (self.walk[0], self.walk[-1])


@dataclass
class TrimTrace:
    steps: list[TrimStep] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.steps)

    def __iter__(self) -> Iterator[TrimStep]:
        return iter(self.steps)


def _pendant_paths(g: SimpleGraph) -> list[tuple[int, ...]]:
    """Maximal pendant paths, anchor (degree >= 3) first, leaf last."""
    out = []
    for leaf in g.vertices:
        if g.degree(leaf) != 1:
            continue
        walk = [leaf]
        prev, cur = leaf, g.neighbors(leaf)[0]
        while g.degree(cur) == 2:
            walk.append(cur)
            a, b = g.neighbors(cur)
            prev, cur = cur, (b if a == prev else a)
        if g.degree(cur) < 3:
            continue  # the whole graph is a path
        walk.append(cur)
        out.append(tuple(reversed(walk)))
    return out


def _ears(g: SimpleGraph) -> list[tuple[int, ...]]:
    """Maximal ears whose ends have degree >= 3 (a pendant cycle yields an open walk)."""
    out = []
    seen: set[Edge] = set()
    for x in g.vertices:
        if g.degree(x) < 3:
            continue
        for y in g.neighbors(x):
            if g.degree(y) != 2 or edge(x, y) in seen:
                continue
            walk = [x, y]
            prev, cur = x, y
            while g.degree(cur) == 2:
                a, b = g.neighbors(cur)
                nxt = b if a == prev else a
                prev, cur = cur, nxt
                walk.append(cur)
            for i in range(len(walk) - 1):
                seen.add(edge(walk[i], walk[i + 1]))
            if walk[-1] == walk[0]:
                walk = walk[:-1]  # pendant cycle: drop the closing edge
            elif g.degree(walk[-1]) == 1:
                continue  # pendant path, handled elsewhere
            out.append(tuple(walk))
    return out


def _shorten(g: SimpleGraph, walk: tuple[int, ...], kind: str) -> tuple[SimpleGraph, TrimStep]:
    if kind == "pendant-path-shorten":
        a, b = walk[-2], walk[-1]
        new = g.without_edges([(walk[-3], a), (a, b)])
    else:
        # remove the two internal vertices just before the far end
        a, b = walk[-3], walk[-2]
        new = g.without_edges([(walk[-4], a), (a, b), (b, walk[-1])]).with_edges([(walk[-4], walk[-1])])
    return new, TrimStep(kind, walk, (a, b))


def trim(g: SimpleGraph) -> tuple[SimpleGraph, TrimTrace]:
    """Shorten pendant paths of length >= 3 and ears of length >= 5 by two
    edges at a time until neither remains."""
    _require_connected(g)
    trace = TrimTrace()
    while True:
        paths = [p for p in _pendant_paths(g) if len(p) - 1 >= 3]
        if paths:
            walk = min(paths, key=lambda p: (p[0], p[1:]))
            g, step = _shorten(g, walk, "pendant-path-shorten")
            trace.steps.append(step)
            continue
        ears = [w for w in _ears(g) if len(w) - 1 >= 5]
        if ears:
            walk = min(ears, key=lambda w: (min(w[0], w[-1]), w))
            g, step = _shorten(g, walk, "ear-shorten")
            trace.steps.append(step)
            continue
        return g, trace


def extend_through_trim(coloring: dict[Edge, int], trace: TrimTrace, k: int) -> dict[Edge, int]:
    """Undo a trim trace on a k-liec of the trimmed graph (k >= 3)."""
    if k < 3:
        raise GraphError("extension through trimming needs at least 3 colors")
    col = dict(coloring)
    for step in reversed(trace.steps):
        walk = step.walk
        if step.kind == "pendant-path-shorten":
            anchor_side = walk[-3]
            x = col[edge(walk[-4], anchor_side)] if len(walk) >= 4 else None
            y = next(c for c in range(k) if c != x)
            col[edge(anchor_side, walk[-2])] = y
            col[edge(walk[-2], walk[-1])] = y
            continue
        short = walk[:-3] + walk[-1:]
        seq = [col.pop(edge(short[i], short[i + 1])) for i in range(len(short) - 1)]
        # an internal vertex whose two ear edges differ in color
        pos = next(i for i in range(1, len(seq)) if seq[i - 1] != seq[i])
        z = next(c for c in range(k) if c not in (seq[pos - 1], seq[pos]))
        seq = seq[:pos] + [z, z] + seq[pos:]
        for i in range(len(walk) - 1):
            col[edge(walk[i], walk[i + 1])] = seq[i]
    return col
