"""Fixed exceptional shapes and the colorings stored alongside them.

Every template is a small graph with named vertices. Rooted templates carry
the root ``u`` and, for unicyclic berries, its neighbours ``v`` and ``w``.
Stored colorings are checked against their defining conditions when
:mod:`liec.berries` is imported, so a wrong table fails immediately.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping

from .coloring import A, B, C, Coloring, is_liec
from .graph import Edge, SimpleGraph, edge


@dataclass(frozen=True)
class Template:
    name: str
    graph: SimpleGraph
    roles: Mapping[str, int] = field(default_factory=dict)

    @property
    def root(self) -> int | None:
        return self.roles.get("u")


def _t(name: str, edges: list[tuple[int, int]], **roles: int) -> Template:
    return Template(name, SimpleGraph(edges), dict(roles))


# the colorable cactus that needs four colors: two adjacent hubs, each with two triangles
BOW_TIE = _t(
    "B",
    [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 6), (1, 7), (1, 8), (1, 9),
     (2, 3), (4, 5), (6, 7), (8, 9)],
)

# the grape made of two triangles and one B7 at a common root
B_PRIME = _t(
    "B'",
    [(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4), (0, 5),
     (5, 6), (6, 7), (5, 8), (8, 9)],
    u=0,
)

# alternative berries (u is the berry root, v and w its neighbours)
B1 = _t("B1", [(0, 1), (0, 2), (1, 2)], u=0, v=1, w=2)
B3 = _t(
    "B3",
    [(0, 1), (0, 2), (1, 2), (1, 3), (1, 4), (3, 5), (4, 6), (2, 7), (2, 8), (7, 9), (8, 10)],
    u=0, v=1, w=2,
)
# a triangle whose two free corners each carry a B7-like tail plus one leg
B6 = _t(
    "B6",
    [(0, 1), (0, 2), (1, 2), (1, 3), (1, 6), (2, 10), (2, 13), (3, 4), (3, 5), (4, 7), (5, 8),
     (6, 9), (10, 11), (10, 12), (11, 14), (12, 15), (13, 16)],
    u=0, v=1, w=2,
)
B7 = _t("B7", [(0, 1), (1, 2), (2, 3), (1, 4), (4, 5)], u=0, v=1)

# openings of the singular end-grapes, rooted at the docking vertex
A_OPEN_TWO_LEGS = _t("A1op", [(0, 1), (1, 2), (0, 3), (3, 4)], u=0)
A4_OPEN = _t("A4op", [(0, 1), (1, 2), (0, 3), (3, 4), (4, 5), (3, 6), (6, 7)], u=0)
A5_OPEN = _t(
    "A5op",
    [(0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6), (6, 7), (5, 8), (8, 9)],
    u=0,
)
A6_OPEN = _t(
    "A6op",
    [(0, 1), (1, 2), (0, 3), (3, 4), (4, 5), (3, 6), (6, 7), (0, 8), (8, 9), (9, 10), (8, 11), (11, 12)],
    u=0,
)


def rooted_template_graph(t: Template) -> tuple[SimpleGraph, int]:
    return t.graph, t.roles["u"]


# --------------------------------------------------------------------------
# isomorphism by degree-pruned backtracking

def find_isomorphisms(
    pattern: SimpleGraph, g: SimpleGraph, fixed: Mapping[int, int] | None = None
) -> Iterator[dict[int, int]]:
    """All isomorphisms pattern -> g extending ``fixed``, in a deterministic order."""
    if pattern.n != g.n or pattern.m != g.m:
        return
    if sorted(pattern.degrees().values()) != sorted(g.degrees().values()):
        return
    fixed = dict(fixed or {})
    # order pattern vertices so each one after the first touches an earlier one
    order: list[int] = []
    seen: set[int] = set()
    starts = list(fixed) + sorted(pattern.vertices, key=lambda x: (-pattern.degree(x), x))
    for s in starts:
        if s in seen:
            continue
        queue = [s]
        seen.add(s)
        while queue:
            x = queue.pop(0)
            order.append(x)
            for y in pattern.neighbors(x):
                if y not in seen:
                    seen.add(y)
                    queue.append(y)
    by_degree: dict[int, list[int]] = {}
    for x in g.vertices:
        by_degree.setdefault(g.degree(x), []).append(x)
    mapping: dict[int, int] = {}
    used: set[int] = set()

    def candidates(x: int) -> list[int]:
        if x in fixed:
            return [fixed[x]]
        mapped = [mapping[y] for y in pattern.neighbors(x) if y in mapping]
        if mapped:
            pool = g.neighbors(mapped[0])
            return [c for c in pool if g.degree(c) == pattern.degree(x)]
        return by_degree.get(pattern.degree(x), [])

    def extend(i: int) -> Iterator[dict[int, int]]:
        if i == len(order):
            yield dict(mapping)
            return
        x = order[i]
        for c in candidates(x):
            if c in used or g.degree(c) != pattern.degree(x):
                continue
            if all(g.has_edge(c, mapping[y]) for y in pattern.neighbors(x) if y in mapping):
                # non-edges must stay non-edges
                if sum(1 for y in pattern.neighbors(x) if y in mapping) != sum(
                    1 for z in g.neighbors(c) if z in used
                ):
                    continue
                mapping[x] = c
                used.add(c)
                yield from extend(i + 1)
                used.discard(c)
                del mapping[x]

    yield from extend(0)


def match_template(g: SimpleGraph, t: Template, root: int | None = None) -> dict[int, int] | None:
    """First isomorphism from the template onto ``g`` (root onto ``root`` when given)."""
    fixed = None
    if root is not None:
        if t.root is None:
            raise ValueError(f"template {t.name} is not rooted")
        fixed = {t.root: root}
    return next(find_isomorphisms(t.graph, g, fixed), None)


def transport(col: Mapping[Edge, int], mapping: Mapping[int, int]) -> Coloring:
    return {edge(mapping[x], mapping[y]): c for (x, y), c in col.items()}


# --------------------------------------------------------------------------
# stored colorings (template labelling)

BOW_TIE_4LIEC: Coloring = {
    edge(0, 1): A, edge(0, 2): B, edge(0, 3): C, edge(0, 4): C, edge(0, 5): 3,
    edge(2, 3): B, edge(4, 5): 3,
    edge(1, 6): A, edge(1, 7): B, edge(1, 8): A, edge(1, 9): B,
    edge(6, 7): A, edge(8, 9): A,
}

B_PRIME_3LIEC: Coloring = {
    edge(0, 1): A, edge(0, 2): B, edge(1, 2): A,
    edge(0, 3): A, edge(0, 4): B, edge(3, 4): A,
    edge(0, 5): A, edge(5, 6): B, edge(6, 7): B, edge(5, 8): C, edge(8, 9): C,
}


def _table(pairs: list[tuple[tuple[int, int], int]]) -> Coloring:
    return {edge(x, y): c for (x, y), c in pairs}


# alternative primary and tertiary colorings of the stored alternative berries,
# in template labelling (found by exhaustive search and frozen here)
STORED_BERRY_COLORINGS: dict[tuple[str, str], Coloring] = {
    ("B3", "alternative-primary"): _table([
        ((0, 1), C), ((0, 2), A), ((1, 2), A), ((2, 7), A), ((7, 9), A), ((2, 8), A),
        ((8, 10), A), ((1, 3), A), ((3, 5), A), ((1, 4), A), ((4, 6), A),
    ]),
    ("B3", "tertiary"): _table([
        ((0, 1), C), ((0, 2), C), ((1, 2), A), ((2, 7), C), ((7, 9), C), ((2, 8), C),
        ((8, 10), C), ((1, 3), A), ((3, 5), A), ((1, 4), A), ((4, 6), A),
    ]),
    ("B6", "alternative-primary"): _table([
        ((0, 1), C), ((0, 2), A), ((1, 2), A), ((2, 10), A), ((10, 11), A), ((11, 14), A),
        ((10, 12), A), ((12, 15), A), ((2, 13), A), ((13, 16), A), ((1, 3), A), ((3, 4), A),
        ((4, 7), A), ((3, 5), A), ((5, 8), A), ((1, 6), B), ((6, 9), B),
    ]),
    ("B6", "tertiary"): _table([
        ((0, 1), C), ((0, 2), C), ((1, 2), C), ((2, 10), C), ((10, 11), A), ((11, 14), A),
        ((10, 12), B), ((12, 15), B), ((2, 13), C), ((13, 16), C), ((1, 3), A), ((3, 4), A),
        ((4, 7), A), ((3, 5), A), ((5, 8), A), ((1, 6), B), ((6, 9), B),
    ]),
}

ALTERNATIVE_TEMPLATES: tuple[Template, ...] = (B3, B6)
