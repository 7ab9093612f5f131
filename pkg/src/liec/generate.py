"""Graph generators: exhaustive cactus enumeration, seeded random cacti,
members of the non-colorable family T, and small connected graphs."""

from __future__ import annotations

import itertools
import random
from typing import Iterator

from .graph import Edge, GraphError, SimpleGraph, biconnected_blocks, edge, is_connected


# canonical forms ---------------------------------------------------------

def _block_cut_tree(g: SimpleGraph):
    blocks = []
    for b in biconnected_blocks(g):
        vs = sorted({x for e in b for x in e})
        if len(b) == 1:
            blocks.append(("E", vs))
        else:
            if len(vs) != len(b):
                raise GraphError("graph is not a cactus")
            adj: dict[int, list[int]] = {}
            for u, v in b:
                adj.setdefault(u, []).append(v)
                adj.setdefault(v, []).append(u)
            blocks.append(("C", vs, adj))
    at: dict[int, list[int]] = {v: [] for v in g.vertices}
    for i, b in enumerate(blocks):
        for v in b[1]:
            at[v].append(i)
    return blocks, at


def _cycle_from(adj: dict[int, list[int]], start: int, nxt: int) -> list[int]:
    seq = [start]
    prev, cur = start, nxt
    while cur != start:
        seq.append(cur)
        a, b = adj[cur]
        prev, cur = cur, (b if a == prev else a)
    return seq


def _encoders(g: SimpleGraph):
    blocks, at = _block_cut_tree(g)

    def code_vertex(x: int, parent_block: int | None) -> str:
        parts = sorted(code_block(i, x) for i in at[x] if i != parent_block)
        return "V(" + "".join(parts) + ")"

    def code_block(i: int, parent: int | None) -> str:
        b = blocks[i]
        if b[0] == "E":
            if parent is None:
                x, y = b[1]
                return "E" + min(code_vertex(x, i) + code_vertex(y, i), code_vertex(y, i) + code_vertex(x, i))
            (other,) = [x for x in b[1] if x != parent]
            return "E" + code_vertex(other, i)
        adj = b[2]
        if parent is not None:
            p, q = adj[parent]
            best = None
            for nxt in (p, q):
                seq = _cycle_from(adj, parent, nxt)[1:]
                s = "C(" + ",".join(code_vertex(x, i) for x in seq) + ")"
                best = s if best is None or s < best else best
            return best
        best = None
        for s0 in b[1]:
            for nxt in adj[s0]:
                seq = _cycle_from(adj, s0, nxt)
                s = "R(" + ",".join(code_vertex(x, i) for x in seq) + ")"
                best = s if best is None or s < best else best
        return best

    return blocks, at, code_vertex, code_block


def rooted_form(g: SimpleGraph, root: int) -> str:
    """Invariant of a cactus with a distinguished vertex: equal iff some isomorphism maps root to root."""
    if g.m == 0:
        return "V()"
    _, _, code_vertex, _ = _encoders(g)
    return code_vertex(root, None)


def canonical_form(g: SimpleGraph) -> str:
    """Exact isomorphism invariant of a connected cactus (block-cut tree encoding)."""
    if g.m == 0:
        return "V()" if g.n == 1 else f"null{g.n}"
    blocks, at, code_vertex, code_block = _encoders(g)
    # block-cut tree nodes: ("v", x) and ("b", i)
    nbrs: dict[tuple, list[tuple]] = {}
    for v, bs in at.items():
        nbrs[("v", v)] = [("b", i) for i in bs]
    for i, b in enumerate(blocks):
        nbrs[("b", i)] = [("v", x) for x in b[1]]
    # centres of the block-cut tree
    deg = {k: len(v) for k, v in nbrs.items()}
    layer = [k for k, d in deg.items() if d <= 1]
    left = len(deg)
    removed = set()
    while left > 2:
        nxt = []
        for k in layer:
            removed.add(k)
            left -= 1
            for w in nbrs[k]:
                if w not in removed:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    centres = [k for k in nbrs if k not in removed]

    codes = []
    for kind, key in centres:
        codes.append(code_vertex(key, None) if kind == "v" else code_block(key, None))
    return min(codes)


def are_isomorphic_cacti(g: SimpleGraph, h: SimpleGraph) -> bool:
    return g.n == h.n and g.m == h.m and canonical_form(g) == canonical_form(h)


def canonical_form_general(g: SimpleGraph) -> tuple:
    """Minimum adjacency string over degree-respecting vertex orders (small graphs)."""
    vs = sorted(g.vertices, key=lambda v: (-g.degree(v), v))
    groups = [list(grp) for _, grp in itertools.groupby(vs, key=lambda v: -g.degree(v))]
    best = None
    for perms in itertools.product(*(itertools.permutations(grp) for grp in groups)):
        order = [v for p in perms for v in p]
        pos = {v: i for i, v in enumerate(order)}
        code = tuple(sorted((min(pos[u], pos[v]), max(pos[u], pos[v])) for u, v in g.edges))
        if best is None or code < best:
            best = code
    return (g.n, best)


# exhaustive cacti --------------------------------------------------------

def _attach_edge(g: SimpleGraph, v: int) -> SimpleGraph:
    new = max(g.vertices) + 1
    return g.with_edges([(v, new)])


def _attach_cycle(g: SimpleGraph, v: int, length: int) -> SimpleGraph:
    base = max(g.vertices) + 1
    path = [v] + [base + i for i in range(length - 1)] + [v]
    return g.with_edges([(path[i], path[i + 1]) for i in range(length)])


def _orbit_reps(g: SimpleGraph) -> list[int]:
    """One vertex per automorphism orbit."""
    seen: dict[str, int] = {}
    for v in g.vertices:
        seen.setdefault(rooted_form(g, v), v)
    return sorted(seen.values())


def enumerate_cacti(max_edges: int, min_edges: int = 0) -> Iterator[SimpleGraph]:
    """All connected cacti with ``min_edges..max_edges`` edges, one per isomorphism class.

    Every cactus with at least one edge has a leaf or a pendant cycle, so it
    arises from a smaller one by attaching an edge or a cycle at a vertex.
    """
    if max_edges > 14:
        raise GraphError("enumeration is limited to 14 edges")
    levels: dict[int, dict[str, SimpleGraph]] = {0: {"V()": SimpleGraph(vertices=[0])}}
    for m in range(1, max_edges + 1):
        levels[m] = {}
    for m in range(0, max_edges + 1):
        level = levels[m]
        if m >= min_edges:
            for key in sorted(level):
                yield level[key]
        for g in level.values():
            reps = _orbit_reps(g) if g.m else [0]
            for v in reps:
                if m + 1 <= max_edges:
                    h = _attach_edge(g, v)
                    levels[m + 1].setdefault(canonical_form(h), h)
                for length in range(3, max_edges - m + 1):
                    h = _attach_cycle(g, v, length)
                    levels[m + length].setdefault(canonical_form(h), h)
        del levels[m]


def enumerate_trees(max_edges: int, min_edges: int = 0) -> Iterator[SimpleGraph]:
    for g in enumerate_cacti(max_edges, min_edges):
        if g.m == g.n - 1:
            yield g


# random cacti ------------------------------------------------------------

def gen_random_cactus(n: int, cycles: int, seed: int | None = None) -> SimpleGraph:
    """A connected cactus on ``n`` vertices with exactly ``cycles`` cycles."""
    if n < 1 or cycles < 0 or (cycles and n < 2 * cycles + 1):
        raise GraphError(f"no cactus with {n} vertices and {cycles} cycles")
    rng = random.Random(seed)
    # split the non-root vertices: each cycle needs at least two new ones
    extra = n - 1 - 2 * cycles
    sizes = [2] * cycles
    pendant = 0
    for _ in range(extra):
        if cycles and rng.random() < 0.3:
            sizes[rng.randrange(cycles)] += 1
        else:
            pendant += 1
    sizes += [0] * pendant  # 0 stands for a pendant edge
    rng.shuffle(sizes)
    g = SimpleGraph(vertices=[0])
    for s in sizes:
        v = rng.choice(g.vertices)
        g = _attach_edge(g, v) if s == 0 else _attach_cycle(g, v, s + 1)
    return g


# the family T ------------------------------------------------------------

def triangle_attach_points(g: SimpleGraph) -> list[int]:
    """Degree-2 vertices lying on a triangle."""
    out = []
    for v in g.vertices:
        if g.degree(v) != 2:
            continue
        a, b = g.neighbors(v)
        if g.has_edge(a, b):
            out.append(v)
    return out


def gen_T(steps: int, seed: int | None = None, rules: list[str] | None = None) -> tuple[SimpleGraph, list[tuple]]:
    """A member of T built from K3 by ``steps`` grammar steps, with its build trace.

    Each step identifies a degree-2 triangle vertex with the end of an even
    path ("even-path") or with the leaf of a triangle carrying an odd path
    ("triangle-odd-path"). ``rules`` forces the rule sequence.
    """
    rng = random.Random(seed)
    g = SimpleGraph([(0, 1), (1, 2), (0, 2)])
    trace: list[tuple] = []
    for i in range(steps):
        rule = rules[i] if rules else rng.choice(["even-path", "triangle-odd-path"])
        v = rng.choice(triangle_attach_points(g))
        base = max(g.vertices) + 1
        if rule == "even-path":
            length = 2 * rng.randint(1, 2)
            path = [v] + [base + j for j in range(length)]
            g = g.with_edges([(path[j], path[j + 1]) for j in range(length)])
        else:
            length = 2 * rng.randint(0, 1) + 1
            path = [v] + [base + j for j in range(length)]
            t = path[-1]
            x, y = base + length, base + length + 1
            g = g.with_edges([(path[j], path[j + 1]) for j in range(length)] + [(t, x), (x, y), (t, y)])
        trace.append((rule, v, length))
    return g, trace


# all small connected graphs ----------------------------------------------

def connected_graphs(max_vertices: int, min_vertices: int = 1) -> Iterator[SimpleGraph]:
    """Every connected graph up to isomorphism with the given vertex range."""
    if max_vertices <= 7:
        import networkx as nx

        for h in nx.graph_atlas_g():
            n = h.number_of_nodes()
            if min_vertices <= n <= max_vertices and (n == 1 or nx.is_connected(h)):
                yield SimpleGraph(h.edges(), vertices=h.nodes())
        return
    if max_vertices > 8:
        raise GraphError("connected graph enumeration is limited to 8 vertices")
    yield from connected_graphs(7, min_vertices)
    if min_vertices <= 8:
        yield from _augment(list(connected_graphs(7, 7)), 8)


def _augment(smaller: list[SimpleGraph], n: int) -> Iterator[SimpleGraph]:
    """Connected graphs on ``n`` vertices by adding a vertex to every graph on n-1.

    Every connected graph has a non-cut vertex, so this reaches all of them.
    """
    seen: set[tuple] = set()
    for g in smaller:
        new = n - 1
        vs = list(g.vertices)
        for r in range(1, len(vs) + 1):
            for nb in itertools.combinations(vs, r):
                h = g.with_edges([(x, new) for x in nb])
                key = canonical_form_general(h)
                if key not in seen:
                    seen.add(key)
                    yield h
