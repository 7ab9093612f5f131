"""Grapes, berries, end-grapes, tails, docking vertices, openings and closures."""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .graph import Edge, GraphError, SimpleGraph, components, cycle_list, edge, is_cactus
from .templates import A4_OPEN, A5_OPEN, A6_OPEN, A_OPEN_TWO_LEGS, match_template


# --------------------------------------------------------------------------
# berries

@dataclass
class Berry:
    graph: SimpleGraph
    u: int
    cycle: tuple[int, ...] | None
    v: int
    w: int | None = None

    @property
    def unicyclic(self) -> bool:
        return self.cycle is not None

    @property
    def edges(self) -> tuple[Edge, ...]:
        return self.graph.edges

    def is_cyclic_vertex(self, x: int) -> bool:
        return self.cycle is not None and x in self.cycle


def make_berry(graph: SimpleGraph, u: int) -> Berry:
    nbrs = graph.neighbors(u)
    cycles = cycle_list(graph)
    if len(nbrs) == 2:
        if len(cycles) != 1 or u not in cycles[0]:
            raise GraphError("a berry rooted at a degree-2 vertex must be unicyclic through it")
        return Berry(graph, u, tuple(cycles[0]), nbrs[0], nbrs[1])
    if len(nbrs) == 1 and not cycles:
        return Berry(graph, u, None, nbrs[0])
    raise GraphError("not a berry")


def _split_at(g: SimpleGraph, u: int) -> list[tuple[list[int], int]]:
    """Components of g - u with the number of edges joining each to u."""
    rest = g.without_vertex(u)
    out = []
    covered: set[int] = set()
    for comp in components(rest):
        cs = set(comp)
        covered |= cs
        out.append((sorted(cs), sum(1 for y in g.neighbors(u) if y in cs)))
    # neighbours of u that became isolated vanish from ``rest``
    for y in g.neighbors(u):
        if y not in covered:
            out.append(([y], 1))
    out.sort(key=lambda p: p[0][0])
    return out


def berries(g: SimpleGraph, root: int) -> list[Berry]:
    """One berry per component of g - root, ordered by smallest vertex id."""
    out = []
    for comp, _ in _split_at(g, root):
        sub = g.induced(set(comp) | {root})
        out.append(make_berry(sub, root))
    return out


def grape_root(g: SimpleGraph) -> int | None:
    """The vertex shared by every cycle, or None when the graph is not a grape."""
    cycles = cycle_list(g)
    if not cycles:
        raise GraphError("acyclic graph has no grape root")
    common = set(cycles[0])
    for c in cycles[1:]:
        common &= set(c)
    return min(common) if common else None


# --------------------------------------------------------------------------
# end-grapes

class ExitKind(enum.Enum):
    SINGLE = "single"
    DOUBLE = "double"


@dataclass
class EndGrape:
    u: int
    berries: list[Berry]
    exits: list[Edge]
    grape: SimpleGraph
    root_component: SimpleGraph

    @property
    def exit_kind(self) -> ExitKind:
        return ExitKind.SINGLE if len(self.exits) == 1 else ExitKind.DOUBLE

    @property
    def exit_neighbors(self) -> list[int]:
        return [x if y == self.u else y for x, y in self.exits]

    def unicyclic(self) -> list[Berry]:
        return [b for b in self.berries if b.unicyclic]

    def acyclic(self) -> list[Berry]:
        return [b for b in self.berries if not b.unicyclic]

    def g0_prime(self, v1: int) -> SimpleGraph:
        """Root component plus the single edge u v1."""
        return self.root_component.with_edges([(self.u, v1)])


def end_grape_at(g: SimpleGraph, u: int) -> EndGrape | None:
    parts = _split_at(g, u)
    cyclic = []
    for comp, links in parts:
        sub = g.induced(comp)
        if sub.m >= sub.n:  # the component itself contains a cycle
            cyclic.append((comp, links))
    if len(cyclic) != 1:
        return None
    rest_comp, links = cyclic[0]
    if links not in (1, 2):
        return None
    grape_parts = [(c, k) for c, k in parts if c is not rest_comp]
    if not any(k == 2 for _, k in grape_parts):
        return None
    rest = set(rest_comp)
    exits = sorted(edge(u, y) for y in g.neighbors(u) if y in rest)
    grape_vs = {u}
    for c, _ in grape_parts:
        grape_vs |= set(c)
    grape = g.induced(grape_vs)
    g0 = g.without_edges(grape.edges)
    g0 = g0.induced(rest | {u})
    bs = [make_berry(g.induced(set(c) | {u}), u) for c, _ in grape_parts]
    return EndGrape(u, bs, exits, grape, g0)


def find_end_grapes(g: SimpleGraph) -> list[EndGrape]:
    """All end-grapes, sorted by root id."""
    if not is_cactus(g):
        raise GraphError("not a cactus")
    cycles = cycle_list(g)
    if len(cycles) < 2:
        raise GraphError("end-grapes need at least two cycles")
    if grape_root(g) is not None:
        raise GraphError("graph is a grape; color it as one")
    out = []
    for u in g.vertices:
        if g.degree(u) < 3:
            continue
        eg = end_grape_at(g, u)
        if eg is not None:
            out.append(eg)
    return out


# --------------------------------------------------------------------------
# tails and docking vertices

def tail(b: Berry, x: int) -> tuple[SimpleGraph, int]:
    """The tail hanging at ``x``, returned as (graph, x)."""
    if x == b.u:
        raise GraphError("the berry root has no tail")
    g = b.graph
    if b.is_cyclic_vertex(x):
        cyc = b.cycle
        cedges = [edge(cyc[i], cyc[(i + 1) % len(cyc)]) for i in range(len(cyc))]
        h = g.without_edges(cedges)
    else:
        dist = _distances(g, b.u)
        (parent,) = [y for y in g.neighbors(x) if dist[y] < dist[x]]
        h = g.without_edges([edge(x, parent)])
    comp = _reach(h, x)
    return h.induced(comp) if len(comp) > 1 else SimpleGraph([], [x]), x


def _distances(g: SimpleGraph, s: int) -> dict[int, int]:
    dist = {s: 0}
    queue = [s]
    for x in queue:
        for y in g.neighbors(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                queue.append(y)
    return dist


def _reach(g: SimpleGraph, s: int) -> set[int]:
    if s not in g:
        return {s}
    seen = {s}
    stack = [s]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


OPEN_SHAPES = {1: A_OPEN_TWO_LEGS, 2: A_OPEN_TWO_LEGS, 3: A_OPEN_TWO_LEGS, 4: A4_OPEN, 5: A5_OPEN, 6: A6_OPEN}


def docking_kinds(t: SimpleGraph, x: int) -> list[int]:
    """Indices i with (t, x) isomorphic to the opening of A_i rooted at x."""
    return [i for i, tpl in OPEN_SHAPES.items() if match_template(t, tpl, root=x) is not None]


def docking_vertices(b: Berry) -> set[tuple[int, int]]:
    out = set()
    for x in b.graph.vertices:
        if x == b.u:
            continue
        t, _ = tail(b, x)
        for i in docking_kinds(t, x):
            out.add((x, i))
    return out


def is_a1_docking(b: Berry, x: int) -> bool:
    return (x, 1) in docking_vertices_at(b, x)


def docking_vertices_at(b: Berry, x: int) -> set[tuple[int, int]]:
    if x == b.u:
        return set()
    t, _ = tail(b, x)
    return {(x, i) for i in docking_kinds(t, x)}


# --------------------------------------------------------------------------
# singular end-grapes, openings and closures

@dataclass
class Opening:
    """Edges removed by an opening, grouped by the end-grape root they came from."""

    removed: dict[int, list[Edge]] = field(default_factory=dict)
    kinds: dict[int, int] = field(default_factory=dict)

    @property
    def edges(self) -> list[Edge]:
        return [e for es in self.removed.values() for e in es]


def _is_bare_triangle(b: Berry) -> bool:
    return b.unicyclic and b.graph.m == 3


def _is_p2(b: Berry) -> bool:
    g = b.graph
    return not b.unicyclic and g.m == 2 and g.degree(b.v) == 2


def _is_b7(b: Berry) -> bool:
    from .templates import B7

    return not b.unicyclic and match_template(b.graph, B7, root=b.u) is not None


def singular_kind(eg: EndGrape) -> int | None:
    """Index i when the end-grape is the singular A_i, else None."""
    tri = sum(1 for b in eg.berries if _is_bare_triangle(b))
    p2 = sum(1 for b in eg.berries if _is_p2(b))
    b7 = sum(1 for b in eg.berries if _is_b7(b))
    if tri + p2 + b7 != len(eg.berries):
        return None
    single = eg.exit_kind is ExitKind.SINGLE
    sig = (tri, p2, b7)
    if single:
        return 1 if sig == (2, 0, 0) else None
    return {(2, 0, 0): 2, (1, 1, 0): 3, (1, 0, 1): 4, (2, 0, 1): 5, (1, 0, 2): 6}.get(sig)


def opening_edges(eg: EndGrape) -> list[Edge]:
    """One root-to-triangle edge per triangle: the one to the higher-id vertex."""
    out = []
    for b in eg.berries:
        if _is_bare_triangle(b):
            out.append(edge(eg.u, max(b.v, b.w)))
    return out


def open_graph(g: SimpleGraph, roots: set[int] | None = None) -> tuple[SimpleGraph, Opening]:
    """Open every singular end-grape (only those rooted in ``roots`` when given)."""
    op = Opening()
    for eg in find_end_grapes(g):
        if roots is not None and eg.u not in roots:
            continue
        i = singular_kind(eg)
        if i is None:
            continue
        op.removed[eg.u] = opening_edges(eg)
        op.kinds[eg.u] = i
    return g.without_edges(op.edges), op


def open_local(g: SimpleGraph, grape: SimpleGraph) -> tuple[SimpleGraph, Opening]:
    """Open only the singular end-grapes whose root lies in ``grape``."""
    return open_graph(g, set(grape.vertices))


def close(g: SimpleGraph, op: Opening, roots: set[int] | None = None) -> SimpleGraph:
    chosen = op.removed if roots is None else {x: es for x, es in op.removed.items() if x in roots}
    for x in chosen:
        if x not in op.removed:
            raise GraphError(f"{x} was not opened")
    return g.with_edges([e for es in chosen.values() for e in es])


def closing_edges(b: Berry, x: int, i: int) -> list[Edge]:
    """Edges that turn the opening hanging at docking vertex x back into A_i."""
    if (x, i) not in docking_vertices_at(b, x):
        raise GraphError(f"{x} is not a docking vertex for A{i}")
    t, _ = tail(b, x)
    legs = []
    for y in t.neighbors(x):
        if t.degree(y) == 2:
            (z,) = [q for q in t.neighbors(y) if q != x]
            if t.degree(z) == 1:
                legs.append((y, z))
    legs.sort()
    if i in (1, 2, 5):
        use = legs[:2]
    else:
        use = legs[:1]
    return [edge(x, z) for _, z in use]


def close_berry(b: Berry, X: set[tuple[int, int]]) -> SimpleGraph:
    """Closure of a berry at the docking set X."""
    add = []
    for x, i in sorted(X):
        add += closing_edges(b, x, i)
    return b.graph.with_edges(add)
