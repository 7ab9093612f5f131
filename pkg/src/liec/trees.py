"""Colorings of trees and unicyclic graphs.

The tree routines follow the shrub machinery: every shrub gets a 2-aliec,
a shrub based coloring sums them around a vertex of maximum degree, and a
rainbow root 3-liec is assembled from inverted and recolored shrubs when
the shrub based coloring is inversion resistant.

Underneath sits one exact dynamic program. For a vertex x entered by an
edge of color y, the set of achievable values of d^y(x) is computed from
the children's sets; a child edge of color z is irregular exactly when its
own value differs from d^z(x). Restricting a valid coloring to a child
shrub always gives a valid aliec of that shrub, so the program is complete.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence

from .coloring import A, B, C, Coloring, a_sequence, colors_at, is_liec, permute_colors
from .graph import Edge, GraphError, SimpleGraph, cycle_list, edge, is_tree


class NonColorableError(ValueError):
    """The graph admits no locally irregular coloring at all."""


@dataclass(frozen=True)
class Shrub:
    tree: SimpleGraph
    root: int

    def __post_init__(self) -> None:
        if self.tree.degree(self.root) != 1:
            raise GraphError("shrub root must be a leaf")

    @property
    def root_edge(self) -> Edge:
        return self.tree.incident(self.root)[0]


@dataclass
class ShrubBasedColoring:
    root: int
    shrubs: list[Shrub]
    parts: list[Coloring]
    coloring: Coloring = field(default_factory=dict)

    def sequence(self, t: SimpleGraph) -> list[int]:
        return a_sequence(t, self.coloring, self.root, A)


@dataclass
class TreeColoring:
    coloring: Coloring
    colors: int
    method: str


# --------------------------------------------------------------------------
# assignment of child shrubs to colors

def _match(options: Sequence[frozenset[int]], counts: Sequence[int], slots: Sequence[int], k: int) -> list[tuple[int, int]] | None:
    """Give every child a color z and a value d in its option set with d != counts[z].

    ``counts[z]`` is the final z-degree at the parent and ``slots[z]`` children
    take color z. Returns ``(color, value)`` per child or None. Bipartite
    matching by augmenting paths; the instances are tiny.
    """
    m = len(options)
    if sum(slots) != m:
        return None
    allowed = [[z for z in range(k) if slots[z] and any(d != counts[z] for d in options[i])] for i in range(m)]
    holder: dict[tuple[int, int], int] = {}
    where: list[tuple[int, int]] = [(-1, -1)] * m

    def augment(i: int, seen: set[tuple[int, int]]) -> bool:
        for z in allowed[i]:
            for j in range(slots[z]):
                cell = (z, j)
                if cell in seen:
                    continue
                seen.add(cell)
                if cell not in holder or augment(holder[cell], seen):
                    holder[cell] = i
                    where[i] = cell
                    return True
        return False

    for i in range(m):
        if not augment(i, set()):
            return None
    out = []
    for i in range(m):
        z = where[i][0]
        out.append((z, min(d for d in options[i] if d != counts[z])))
    return out


def _entered(options: Sequence[frozenset[int]], counts: Sequence[int], k: int) -> list[tuple[int, int]] | None:
    # the parent edge has local color 0 and occupies one unit of counts[0]
    return _match(options, counts, (counts[0] - 1,) + tuple(counts[1:]), k)


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


class _TreeDP:
    """Achievable sets for every vertex of a tree hanging from ``root``."""

    def __init__(self, t: SimpleGraph, root: int, k: int, skip: frozenset[int] = frozenset()):
        self.t, self.root, self.k = t, root, k
        self.parent: dict[int, int | None] = {root: None}
        order = [root]
        for x in order:
            for y in t.neighbors(x):
                if y not in self.parent and y not in skip:
                    self.parent[y] = x
                    order.append(y)
        self.order = order
        self.children = {x: [y for y in t.neighbors(x) if self.parent.get(y) == x] for x in order}
        self.sets: dict[int, frozenset[int]] = {}
        for x in reversed(order):
            if x != root:
                self.sets[x] = self._achievable(x)

    def _achievable(self, x: int) -> frozenset[int]:
        kids = self.children[x]
        opts = [self.sets[c] for c in kids]
        if any(not o for o in opts):
            return frozenset()
        out = set()
        m = len(kids)
        for split in _compositions(m, self.k):
            counts = (split[0] + 1,) + split[1:]
            if counts[0] in out:
                continue
            if _entered(opts, counts, self.k) is not None:
                out.add(counts[0])
        return frozenset(out)

    def realize(self, x: int, color: int, value: int, col: Coloring) -> None:
        """Color the shrub entered at ``x`` (parent edge already ``color``) so d^color(x) = value."""
        stack = [(x, color, value)]
        while stack:
            x, color, value = stack.pop()
            kids = self.children[x]
            opts = [self.sets[c] for c in kids]
            plan = None
            for split in _compositions(len(kids), self.k):
                counts = (split[0] + 1,) + split[1:]
                if counts[0] != value:
                    continue
                plan = _entered(opts, counts, self.k)
                if plan is not None:
                    break
            if plan is None:
                raise AssertionError("achievable value without a realization")
            # local color z maps to a real color: 0 is the parent color, the rest in order
            others = [z for z in range(self.k) if z != color]
            real = [color] + others
            for c, (z, d) in zip(kids, plan):
                col[edge(x, c)] = real[z]
                stack.append((c, real[z], d))


def shrub_aliec(tree: SimpleGraph, root: int, k: int = 2, *, prefer_liec: bool = True, value: int | None = None) -> Coloring:
    """A k-aliec of the shrub ``(tree, root)`` with the root edge colored a."""
    shrub = Shrub(tree, root)
    dp = _TreeDP(tree, root, k)
    (s,) = tree.neighbors(root)
    ach = dp.sets[s]
    if not ach:
        raise AssertionError("shrub without an aliec")
    if value is None:
        good = sorted(d for d in ach if d != 1)
        value = (good[0] if good else 1) if prefer_liec else min(ach)
    elif value not in ach:
        raise ValueError(f"value {value} not achievable at the root edge")
    col: Coloring = {shrub.root_edge: A}
    dp.realize(s, A, value, col)
    return col


def shrub_2aliec(shrub: Shrub) -> Coloring:
    return shrub_aliec(shrub.tree, shrub.root, 2)


def shrub_values(tree: SimpleGraph, root: int, k: int = 2) -> frozenset[int]:
    """All achievable a-degrees of the root neighbour over k-aliecs with the root edge colored a."""
    dp = _TreeDP(tree, root, k)
    (s,) = tree.neighbors(root)
    return dp.sets[s]


# --------------------------------------------------------------------------
# shrub based colorings

def shrubs_at(t: SimpleGraph, u: int) -> list[Shrub]:
    """Shrubs of ``t`` rooted at ``u``, one per neighbour in id order."""
    out = []
    for v in t.neighbors(u):
        part = t.without_edges([edge(u, w) for w in t.neighbors(u) if w != v])
        comp = _component(part, u)
        out.append(Shrub(part.induced(comp), u))
    return out


def _component(g: SimpleGraph, start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        x = stack.pop()
        for y in g.neighbors(x):
            if y not in seen:
                seen.add(y)
                stack.append(y)
    return seen


def shrub_based_coloring(t: SimpleGraph, u: int) -> ShrubBasedColoring:
    shrubs = shrubs_at(t, u)
    parts = [shrub_2aliec(s) for s in shrubs]
    total: Coloring = {}
    for p in parts:
        total.update(p)
    return ShrubBasedColoring(u, shrubs, parts, total)


def _inversions(sbc: ShrubBasedColoring):
    d = len(sbc.parts)
    if d > 20:
        raise ValueError("inversion search is limited to degree 20")
    for pattern in itertools.product((False, True), repeat=d):
        col: Coloring = {}
        for flip, part in zip(pattern, sbc.parts):
            col.update(permute_colors(part, {A: B, B: A}) if flip else part)
        yield pattern, col


def find_inversion(t: SimpleGraph, sbc: ShrubBasedColoring) -> Coloring | None:
    for _, col in _inversions(sbc):
        if is_liec(t, col):
            return col
    return None


def is_inversion_resistant(t: SimpleGraph, u: int, sbc: ShrubBasedColoring) -> bool:
    if sbc.root != u:
        raise ValueError("shrub based coloring is rooted elsewhere")
    return find_inversion(t, sbc) is None


def max_degree_vertices(t: SimpleGraph) -> list[int]:
    d = t.max_degree()
    return [x for x in t.vertices if t.degree(x) == d]


# role recipes: (permutation applied to the shrub's a/b coloring) per shrub
_RAINBOW_ROLES = {
    3: [(A, B, C), (B, A, C), (C, B, A)],
    4: [(A, B, C), (A, B, C), (B, A, C), (C, B, A)],
}


def rainbow_root_3liec(t: SimpleGraph, u: int, special: int | None = None) -> Coloring:
    """A 3-liec of a tree with chi' = 3 whose only 3-chromatic vertex is ``u``.

    ``special`` is the index (neighbour order) of the shrub that carries color c;
    by default the first one that works.
    """
    d = t.degree(u)
    if d not in _RAINBOW_ROLES:
        raise GraphError("rainbow root must have degree 3 or 4")
    sbc = shrub_based_coloring(t, u)
    if find_inversion(t, sbc) is not None:
        raise GraphError("tree admits a 2-liec; use tree_color")
    roles = _RAINBOW_ROLES[d]
    targets = range(d) if special is None else [special]
    for sp in targets:
        rest = [i for i in range(d) if i != sp]
        for order in itertools.permutations(rest):
            assign = dict(zip(order, roles[:-1]))
            assign[sp] = roles[-1]
            col: Coloring = {}
            for i, part in enumerate(sbc.parts):
                col.update(permute_colors(part, assign[i]))
            if is_liec(t, col):
                return col
    raise AssertionError(f"no rainbow root assignment at {u}")


def is_odd_path(g: SimpleGraph) -> bool:
    return g.m % 2 == 1 and g.m == g.n - 1 and g.max_degree() <= 2


def _is_path(g: SimpleGraph) -> bool:
    return g.m == g.n - 1 and g.max_degree() <= 2


def path_coloring(g: SimpleGraph) -> Coloring:
    """Even path colored in consecutive blocks of two, alternating a and b."""
    ends = [x for x in g.vertices if g.degree(x) == 1]
    walk = [min(ends)]
    while len(walk) < g.n:
        nxt = [y for y in g.neighbors(walk[-1]) if len(walk) < 2 or y != walk[-2]]
        walk.append(nxt[0])
    return {edge(walk[i], walk[i + 1]): (i // 2) % 2 for i in range(g.m)}


def tree_color(t: SimpleGraph) -> TreeColoring:
    """Locally irregular coloring of a tree with the minimum number of colors."""
    if not is_tree(t):
        raise GraphError("not a tree")
    if t.m == 0:
        return TreeColoring({}, 0, "empty")
    if all(t.degree(x) != t.degree(y) for x, y in t.edges):
        return TreeColoring({e: A for e in t.edges}, 1, "irregular")
    if _is_path(t):
        if t.m % 2:
            raise NonColorableError("odd path")
        return TreeColoring(path_coloring(t), 2, "path")
    u = max_degree_vertices(t)[0]
    sbc = shrub_based_coloring(t, u)
    col = find_inversion(t, sbc)
    if col is not None:
        return TreeColoring(col, 2, "shrub-based")
    # other aliecs of the same shrubs may still give a 2-liec
    col = exact_tree_liec(t, 2, root=u)
    if col is not None:
        return TreeColoring(col, 2, "shrub-based-reselected")
    return TreeColoring(rainbow_root_3liec(t, u), 3, "rainbow-root")


def tree_3liec(t: SimpleGraph, rainbow: int | None = None) -> Coloring:
    """A liec with at most 3 colors; ``rainbow`` picks the rainbow root when 3 are needed."""
    res = tree_color(t)
    if res.colors < 3 or rainbow is None:
        return res.coloring
    return rainbow_root_3liec(t, rainbow)


def exact_tree_liec(t: SimpleGraph, k: int, root: int | None = None) -> Coloring | None:
    """A k-liec of a tree or None, decided exactly by the shrub program."""
    if t.m == 0:
        return {}
    r = t.vertices[0] if root is None else root
    dp = _TreeDP(t, r, k)
    kids = dp.children[r]
    opts = [dp.sets[c] for c in kids]
    for counts in _compositions(len(kids), k):
        plan = _match(opts, counts, counts, k)
        if plan is None:
            continue
        col: Coloring = {}
        for c, (z, d) in zip(kids, plan):
            col[edge(r, c)] = z
            dp.realize(c, z, d, col)
        return col
    return None


# --------------------------------------------------------------------------
# unicyclic graphs

def _cycle_order(g: SimpleGraph) -> list[int]:
    (cyc,) = cycle_list(g)
    return list(cyc)


def exact_unicyclic_liec(g: SimpleGraph, k: int) -> Coloring | None:
    """A k-liec of a unicyclic graph or None, decided exactly.

    Dynamic program around the cycle: the state at cycle vertex x_j is the
    color of the cycle edge x_j x_{j+1} together with the full color-degree
    vector of x_j; the trees hanging at x_j are handled by the shrub program.
    """
    cyc = _cycle_order(g)
    L = len(cyc)
    on_cycle = set(cyc)
    dps = []
    for x in cyc:
        dp = _TreeDP(g, x, k, skip=frozenset(on_cycle - {x}))
        dps.append(dp)

    def vectors(j: int, left: int, right: int):
        """Achievable color-degree vectors at x_j given its two cycle edge colors."""
        dp = dps[j]
        kids = dp.children[cyc[j]]
        opts = [dp.sets[c] for c in kids]
        base = [0] * k
        base[left] += 1
        base[right] += 1
        out = []
        for split in _compositions(len(kids), k):
            counts = tuple(base[z] + split[z] for z in range(k))
            if _match(opts, counts, split, k) is not None:
                out.append(counts)
        return out

    memo: dict[tuple[int, int, int], list[tuple[int, ...]]] = {}

    def vec(j, left, right):
        key = (j, left, right)
        if key not in memo:
            memo[key] = vectors(j, left, right)
        return memo[key]

    # edge e_j joins x_j and x_{j+1}; colors gamma_0..gamma_{L-1}
    for g0 in range(k):
        for g_last in range(k):
            for v0 in vec(0, g_last, g0):
                # layer: state (gamma_j, vector at x_j)
                layer = {(g0, v0): None}
                back: list[dict] = [layer]
                for j in range(1, L):
                    nxt: dict = {}
                    for (gp, vp) in layer:
                        right_opts = [g_last] if j == L - 1 else range(k)
                        for gr in right_opts:
                            for vj in vec(j, gp, gr):
                                if vp[gp] == vj[gp]:
                                    continue
                                if (gr, vj) not in nxt:
                                    nxt[(gr, vj)] = (gp, vp)
                    layer = nxt
                    back.append(layer)
                for (gl, vl) in layer:
                    if vl[g_last] != v0[g_last]:
                        return _rebuild(g, cyc, dps, back, (gl, vl), k)
    return None


def _rebuild(g, cyc, dps, back, final, k) -> Coloring:
    L = len(cyc)
    states = [None] * L
    states[L - 1] = final
    for j in range(L - 1, 0, -1):
        states[j - 1] = back[j][states[j]]
    col: Coloring = {}
    gam = [s[0] for s in states]
    for j in range(L):
        col[edge(cyc[j], cyc[(j + 1) % L])] = gam[j]
    for j in range(L):
        counts = states[j][1]
        dp = dps[j]
        x = cyc[j]
        kids = dp.children[x]
        opts = [dp.sets[c] for c in kids]
        split = list(counts)
        split[gam[j - 1]] -= 1
        split[gam[j]] -= 1
        plan = _match(opts, counts, split, k)
        for c, (z, d) in zip(kids, plan):
            col[edge(x, c)] = z
            dp.realize(c, z, d, col)
    return col


def cycle_coloring(n: int, vertices: Sequence[int]) -> Coloring | None:
    """Bare even cycle in blocks of two; a third color closes cycles of length 2 mod 4."""
    if n % 2:
        return None
    blocks = n // 2
    col: Coloring = {}
    for i in range(n):
        blk = i // 2
        c = blk % 2
        if blocks % 2 and blk == blocks - 1:
            c = C
        col[edge(vertices[i], vertices[(i + 1) % n])] = c
    return col


def unicyclic_color(g: SimpleGraph) -> TreeColoring:
    """A liec of a unicyclic graph with at most 3 colors (the minimum, in fact)."""
    if g.m != g.n:
        raise GraphError("not unicyclic")
    if g.max_degree() == 2:
        cyc = _cycle_order(g)
        col = cycle_coloring(g.n, cyc)
        if col is None:
            raise NonColorableError("odd cycle")
        return TreeColoring(col, len(set(col.values())), "cycle")
    for k in (1, 2, 3):
        col = exact_unicyclic_liec(g, k)
        if col is not None:
            return TreeColoring(col, k, "cycle-program")
    raise NonColorableError("unicyclic graph without a 3-liec")
