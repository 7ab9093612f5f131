"""Berry classification and the four boundary-controlled berry colorings.

Colors are positional: ``A``, ``B``, ``C`` play the roles of a, b, c.  A
flavored coloring is always produced in canonical form (the root edges use
``C``, plus ``A`` on uw where the flavor asks for it); callers obtain the
other five variants with :func:`liec.coloring.permute_colors`.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Mapping

from .coloring import A, B, C, Coloring, color_degree, is_liec, permute_colors
from .decomp import Berry, close_berry, closing_edges, docking_vertices_at, is_a1_docking, make_berry
from .graph import Edge, GraphError, SimpleGraph, components, cycle_list, edge
from .oracle import SearchBudget, SearchExhausted, find_where
from .templates import ALTERNATIVE_TEMPLATES, STORED_BERRY_COLORINGS, B7, match_template, transport
from .trees import (
    exact_tree_liec,
    is_odd_path,
    max_degree_vertices,
    path_coloring,
    rainbow_root_3liec,
    shrubs_at,
    tree_color,
)


class BerryError(ValueError):
    pass


class Flavor(enum.Enum):
    STANDARD_PRIMARY = "standard-primary"
    ALTERNATIVE_PRIMARY = "alternative-primary"
    SECONDARY = "secondary"
    TERTIARY = "tertiary"


class Obstruction(enum.Enum):
    CASE_I = "CaseI"
    CASE_II = "CaseII"


@dataclass(frozen=True)
class BerryKind:
    tag: str  # "standard" or one of B1..B7
    v: int
    w: int | None = None
    mapping: Mapping[int, int] | None = None

    @property
    def alternative(self) -> bool:
        return self.tag != "standard"


@dataclass
class BerryColoring:
    coloring: Coloring
    flavor: Flavor
    liec: bool
    u: int
    v: int
    w: int | None = None
    method: str = ""
    boundary: dict[str, int] = field(default_factory=dict)


# --------------------------------------------------------------------------
# flavor predicates (canonical color names)

def _irregular_except(g: SimpleGraph, col: Mapping[Edge, int], exempt: set[Edge]) -> bool:
    deg: dict[tuple[int, int], int] = {}
    for (x, y), c in col.items():
        if (x, y) in g.edges_set:
            deg[(x, c)] = deg.get((x, c), 0) + 1
            deg[(y, c)] = deg.get((y, c), 0) + 1
    for x, y in g.edges:
        if (x, y) in exempt:
            continue
        c = col[(x, y)]
        if deg[(x, c)] == deg[(y, c)]:
            return False
    return True


def _root_edges(g: SimpleGraph, u: int) -> set[Edge]:
    return {edge(u, y) for y in g.neighbors(u)}


def is_flavor(
    flavor: Flavor, g: SimpleGraph, u: int, v: int, w: int | None, col: Mapping[Edge, int]
) -> bool:
    """Check one flavor definition with the given orientation of v and w."""
    if any(e not in col for e in g.edges):
        return False
    du = g.degree(u)
    if du not in (1, 2) or not g.has_edge(u, v) or (du == 2 and (w is None or not g.has_edge(u, w))):
        return False
    uv = edge(u, v)
    if du == 1:
        if col[uv] != C:
            return False
        dv = color_degree(g, col, v, C)
        if flavor is Flavor.STANDARD_PRIMARY:
            return dv <= 2 and _irregular_except(g, col, {uv})
        if flavor is Flavor.ALTERNATIVE_PRIMARY:
            return len({col[edge(v, y)] for y in g.neighbors(v)}) == 1 and is_liec(g, col)
        if flavor is Flavor.SECONDARY:
            return dv != 2 and _irregular_except(g, col, {uv})
        return False
    uw = edge(u, w)
    dv = color_degree(g, col, v, C)
    if col[uv] != C:
        return False
    if flavor is Flavor.STANDARD_PRIMARY:
        return col[uw] == C and dv <= 2 and color_degree(g, col, w, C) <= 2 and _irregular_except(g, col, {uv, uw})
    if flavor is Flavor.TERTIARY:
        return col[uw] == C and dv <= 2 and color_degree(g, col, w, C) in (3, 4) and _irregular_except(g, col, {uv})
    if col[uw] != A or dv > 2 or not _irregular_except(g, col, {uv}):
        return False
    dw = color_degree(g, col, w, A)
    if flavor is Flavor.ALTERNATIVE_PRIMARY:
        return dw in (2, 4) and (dv != 2 or dw == 4)
    if flavor is Flavor.SECONDARY:
        return dv != 2 or dw >= 3
    return False


def _orientations(g: SimpleGraph, u: int) -> list[tuple[int, int | None]]:
    nb = g.neighbors(u)
    if len(nb) == 1:
        return [(nb[0], None)]
    return [(nb[0], nb[1]), (nb[1], nb[0])]


def flavors_of(g: SimpleGraph, u: int, col: Mapping[Edge, int], up_to_permutation: bool = True) -> list[tuple[Flavor, int, int | None]]:
    """Every (flavor, v, w) the coloring satisfies."""
    perms = list(itertools.permutations(range(3))) if up_to_permutation else [(0, 1, 2)]
    out = []
    for p in perms:
        pc = permute_colors(col, p)
        for v, w in _orientations(g, u):
            for fl in Flavor:
                if (fl, v, w) not in out and is_flavor(fl, g, u, v, w, pc):
                    out.append((fl, v, w))
    return out


def _boundary(g: SimpleGraph, u: int, v: int, w: int | None, col: Coloring) -> dict[str, int]:
    out = {"c(uv)": col[edge(u, v)], "d(v)": color_degree(g, col, v, col[edge(u, v)])}
    if w is not None:
        out["c(uw)"] = col[edge(u, w)]
        out["d(w)"] = color_degree(g, col, w, col[edge(u, w)])
    return out


def _finish(b: Berry, col: Coloring, flavor: Flavor, v: int, w: int | None, method: str) -> BerryColoring:
    if not is_flavor(flavor, b.graph, b.u, v, w, col):
        raise AssertionError(f"{method} produced a coloring that is not {flavor.value}")
    return BerryColoring(col, flavor, is_liec(b.graph, col), b.u, v, w, method, _boundary(b.graph, b.u, v, w, col))


# --------------------------------------------------------------------------
# classification

def _as_berry(b: Berry | SimpleGraph, u: int | None = None) -> Berry:
    if isinstance(b, Berry):
        return b
    if u is None:
        raise BerryError("a root is needed when passing a bare graph")
    return make_berry(b, u)


def _pendant_path(g: SimpleGraph, x: int, banned: set[int]) -> int | None:
    """Length of the bare path hanging at x away from ``banned``, None if not a path."""
    prev, cur, n = None, x, 0
    while True:
        nxt = [y for y in g.neighbors(cur) if y != prev and y not in banned]
        if len(nxt) > 1 or (cur != x and g.degree(cur) > 2):
            return None
        if not nxt:
            return n
        prev, cur, n = cur, nxt[0], n + 1


def _b2_paths(b: Berry) -> tuple[int, int] | None:
    """Lengths of the pendant paths at v and w when b is a triangle with even paths."""
    if b.cycle is None or len(b.cycle) != 3:
        return None
    tri = {b.u, b.v, b.w}
    lengths = [_pendant_path(b.graph, x, tri) for x in (b.v, b.w)]
    if None in lengths or sum(lengths) + 3 != b.graph.m or any(n % 2 for n in lengths):
        return None
    return lengths[0], lengths[1]


def classify_berry(b: Berry | SimpleGraph, u: int | None = None) -> BerryKind:
    b = _as_berry(b, u)
    g = b.graph
    if not b.unicyclic:
        iso = match_template(g, B7, root=b.u)
        if iso is not None:
            return BerryKind("B7", iso[1], None, iso)
        return BerryKind("standard", b.v)
    paths = _b2_paths(b)
    if paths is not None:
        lv, lw = paths
        if lv == lw == 0:
            return BerryKind("B1", b.v, b.w)
        # the vertex carrying the (longer) path plays w
        if lv > lw:
            return BerryKind("B2", b.w, b.v)
        return BerryKind("B2", b.v, b.w)
    for tpl in ALTERNATIVE_TEMPLATES:
        iso = match_template(g, tpl, root=b.u)
        if iso is not None:
            return BerryKind(tpl.name, iso[tpl.roles["v"]], iso[tpl.roles["w"]], iso)
    return BerryKind("standard", b.v, b.w)


# --------------------------------------------------------------------------
# helpers on the tree T = G - u

def _path_pieces_coloring(forest: SimpleGraph) -> Coloring | None:
    """Color every component (an even path or a point) with a and b."""
    col: Coloring = {}
    for comp in components(forest):
        sub = forest.induced(comp)
        if sub.m == 0:
            continue
        if not (sub.m == sub.n - 1 and sub.max_degree() <= 2) or sub.m % 2:
            return None
        col.update(path_coloring(sub))
    return col


def _forest_2liec(forest: SimpleGraph) -> Coloring | None:
    col: Coloring = {}
    for comp in components(forest):
        sub = forest.induced(comp)
        if sub.m == 0:
            continue
        part = exact_tree_liec(sub, 2)
        if part is None:
            return None
        col.update(part)
    return col


def _t_minus_u(b: Berry) -> SimpleGraph:
    return b.graph.without_vertex(b.u)


def primary_is_liec_obstruction(b: Berry | SimpleGraph, u: int | None = None) -> Obstruction | None:
    """Why the standard primary construction cannot be a liec, if it cannot."""
    b = _as_berry(b, u)
    if not b.unicyclic:
        raise BerryError("obstruction is defined for unicyclic berries")
    t = _t_minus_u(b)
    if is_odd_path(t):
        return Obstruction.CASE_II
    if exact_tree_liec(t, 2) is not None:
        return None
    if t.max_degree() != 3:
        return None
    threes = [x for x in t.vertices if t.degree(x) == 3]
    if len(threes) != 2:
        return None
    x, y = threes
    for s, o in ((x, y), (y, x)):
        if s in (b.v, b.w) and t.has_edge(s, o) and not b.is_cyclic_vertex(o):
            return Obstruction.CASE_I
    return None


# --------------------------------------------------------------------------
# primary colorings

def _standard_unicyclic(b: Berry) -> BerryColoring:
    g, u = b.graph, b.u
    t = _t_minus_u(b)
    base = {edge(u, b.v): C, edge(u, b.w): C}
    if is_odd_path(t):
        for v, w in ((b.v, b.w), (b.w, b.v)):
            for z in t.neighbors(v):
                if z == w:
                    continue
                rest = _path_pieces_coloring(t.without_edges([edge(v, z)]))
                if rest is None:
                    continue
                col = {**rest, **base, edge(v, z): C}
                if is_flavor(Flavor.STANDARD_PRIMARY, g, u, b.v, b.w, col):
                    return _finish(b, col, Flavor.STANDARD_PRIMARY, b.v, b.w, "odd-path-split")
        raise AssertionError("no splitting edge for a non-colorable T")
    two = exact_tree_liec(t, 2)
    if two is not None:
        return _finish(b, {**two, **base}, Flavor.STANDARD_PRIMARY, b.v, b.w, "two-colorable-T")
    if primary_is_liec_obstruction(b) is Obstruction.CASE_I:
        for v, w in ((b.v, b.w), (b.w, b.v)):
            for z in t.neighbors(w):
                rest = _forest_2liec(t.without_edges([edge(w, z)]))
                if rest is None:
                    continue
                col = {**rest, **base, edge(w, z): C}
                if is_flavor(Flavor.STANDARD_PRIMARY, g, u, b.v, b.w, col):
                    return _finish(b, col, Flavor.STANDARD_PRIMARY, b.v, b.w, "case-i-split")
    col = _rainbow_choice(b, t, avoid={b.v, b.w})
    if col is not None:
        return _finish(b, {**col, **base}, Flavor.STANDARD_PRIMARY, b.v, b.w, "rainbow-root")
    return _search_flavor(b, Flavor.STANDARD_PRIMARY)


def _rainbow_choice(b: Berry, t: SimpleGraph, avoid: set[int], allow_v: bool = False) -> Coloring | None:
    """3-liec of T with a rainbow root that is not an A1-opening docking vertex."""
    base = {edge(b.u, y): C for y in b.graph.neighbors(b.u)}
    for z in max_degree_vertices(t):
        if (z in avoid and not allow_v) or is_a1_docking(b, z) or t.degree(z) not in (3, 4):
            continue
        shrubs = shrubs_at(t, z)
        for i, s in enumerate(shrubs):
            if z not in avoid and set(s.tree.vertices) & avoid:
                continue
            try:
                col = rainbow_root_3liec(t, z, special=i)
            except (AssertionError, GraphError):
                continue
            full = {**col, **base}
            if is_flavor(Flavor.STANDARD_PRIMARY, b.graph, b.u, b.v, b.w, full):
                return col
    return None


def _standard_acyclic(b: Berry) -> BerryColoring:
    g, u, v = b.graph, b.u, b.v
    t = _t_minus_u(b)
    base = {edge(u, v): C}
    if t.m == 0:
        return _finish(b, dict(base), Flavor.STANDARD_PRIMARY, v, None, "single-edge")
    if is_odd_path(t):
        for z in t.neighbors(v):
            rest = _path_pieces_coloring(t.without_edges([edge(v, z)]))
            if rest is not None:
                col = {**rest, **base, edge(v, z): C}
                if is_flavor(Flavor.STANDARD_PRIMARY, g, u, v, None, col):
                    return _finish(b, col, Flavor.STANDARD_PRIMARY, v, None, "odd-path-split")
        raise AssertionError("no splitting edge for a non-colorable T")
    two = exact_tree_liec(t, 2)
    if two is not None:
        return _finish(b, {**two, **base}, Flavor.STANDARD_PRIMARY, v, None, "two-colorable-T")
    col = _rainbow_choice(b, t, avoid={v}, allow_v=True)
    if col is not None:
        return _finish(b, {**col, **base}, Flavor.STANDARD_PRIMARY, v, None, "rainbow-root")
    return _search_flavor(b, Flavor.STANDARD_PRIMARY)


_SEARCH_BUDGET = 200_000


def _search_flavor(b: Berry, flavor: Flavor) -> BerryColoring:
    """Exhaustive fallback for a flavor the constructions did not reach."""
    g, u = b.graph, b.u
    for v, w in _orientations(g, u):
        fixed = {edge(u, v): C}
        if w is not None:
            fixed[edge(u, w)] = C if flavor in (Flavor.STANDARD_PRIMARY, Flavor.TERTIARY) else A
        exempt = {edge(u, v)} if flavor is not Flavor.STANDARD_PRIMARY else set(fixed)
        if flavor is Flavor.ALTERNATIVE_PRIMARY and w is None:
            exempt = set()
        try:
            col = find_where(
                g, 3, lambda c: is_flavor(flavor, g, u, v, w, c), exempt=exempt, fixed=fixed,
                budget=SearchBudget(node_limit=_SEARCH_BUDGET),
            )
        except SearchExhausted:
            col = None
        if col is not None:
            return _finish(b, col, flavor, v, w, "search")
    raise BerryError(f"berry admits no {flavor.value} coloring")


def _b2_coloring(b: Berry, kind: BerryKind, flavor: Flavor) -> Coloring:
    """Alternative primary or tertiary coloring of a triangle with even pendant paths."""
    g, u, v, w = b.graph, b.u, kind.v, kind.w
    col: Coloring = {edge(u, v): C}
    if flavor is Flavor.ALTERNATIVE_PRIMARY:
        col[edge(u, w)] = A
        col[edge(v, w)] = A
        first = {v: B, w: B}
    else:
        col[edge(u, w)] = C
        col[edge(v, w)] = C
        first = {v: B, w: C}
    for x in (v, w):
        f = first[x]
        later = (A, B) if f == B else (B, A)
        prev, cur, i = None, x, 0
        while True:
            nxt = [y for y in g.neighbors(cur) if y != prev and y not in (u, v, w)]
            if not nxt:
                break
            blk = i // 2
            col[edge(cur, nxt[0])] = f if blk == 0 else later[(blk - 1) % 2]
            prev, cur, i = cur, nxt[0], i + 1
    return col


def _stored(b: Berry, kind: BerryKind, flavor: Flavor) -> Coloring:
    table = STORED_BERRY_COLORINGS[(kind.tag, flavor.value)]
    return transport(table, kind.mapping)


def primary_coloring(b: Berry | SimpleGraph, u: int | None = None) -> BerryColoring:
    b = _as_berry(b, u)
    kind = classify_berry(b)
    if not kind.alternative:
        return _standard_unicyclic(b) if b.unicyclic else _standard_acyclic(b)
    fl = Flavor.ALTERNATIVE_PRIMARY
    if kind.tag == "B7":
        col = {e: C for e in b.graph.edges}
        return _finish(b, col, fl, kind.v, None, "monochromatic")
    if kind.tag in ("B1", "B2"):
        return _finish(b, _b2_coloring(b, kind, fl), fl, kind.v, kind.w, "triangle-with-paths")
    return _finish(b, _stored(b, kind, fl), fl, kind.v, kind.w, "stored")


# --------------------------------------------------------------------------
# secondary and tertiary colorings

def secondary_coloring(b: Berry | SimpleGraph, u: int | None = None) -> BerryColoring:
    b = _as_berry(b, u)
    g = b.graph
    if not b.unicyclic:
        if g.m == g.n - 1 and g.max_degree() <= 2 and g.m % 2 == 0 and g.degree(b.u) == 1:
            raise BerryError("an even path rooted at an end has no secondary coloring")
        if classify_berry(b).tag == "B7":
            raise BerryError("B7 has no secondary coloring")
        x = max(g.vertices) + 1
        big = g.with_edges([(b.u, x)])
        res = tree_color(big)
        col = res.coloring
        # pad to canonical colors: the root edge gets C
        c = col[edge(b.u, b.v)]
        perm = {c: C, C: c} if c != C else {}
        col = permute_colors({e: k for e, k in col.items() if e in g.edges_set}, {**{k: k for k in range(3)}, **perm})
        return _finish(b, col, Flavor.SECONDARY, b.v, None, f"extended-tree/{res.method}")
    for v, w in ((b.v, b.w), (b.w, b.v)):
        t2 = g.without_edges([edge(b.u, v)])
        two = exact_tree_liec(t2, 2)
        if two is None:
            continue
        a = two[edge(b.u, w)]
        col = {e: (A if k == a else B) for e, k in two.items()}
        col[edge(b.u, v)] = C
        if is_flavor(Flavor.SECONDARY, g, b.u, v, w, col):
            return _finish(b, col, Flavor.SECONDARY, v, w, "two-liec-without-uv")
    return _search_flavor(b, Flavor.SECONDARY)


def tertiary_coloring(b: Berry | SimpleGraph, u: int | None = None) -> BerryColoring:
    b = _as_berry(b, u)
    kind = classify_berry(b)
    if kind.tag in ("standard", "B1", "B7"):
        raise BerryError(f"tertiary coloring is defined for B2..B6, not {kind.tag}")
    fl = Flavor.TERTIARY
    if kind.tag == "B2":
        return _finish(b, _b2_coloring(b, kind, fl), fl, kind.v, kind.w, "triangle-with-paths")
    return _finish(b, _stored(b, kind, fl), fl, kind.v, kind.w, "stored")


def flavored_colorings(b: Berry) -> list[BerryColoring]:
    """Every flavored coloring the engine can produce for ``b``, primary first."""
    out = [primary_coloring(b)]
    for make in (secondary_coloring, tertiary_coloring):
        try:
            out.append(make(b))
        except BerryError:
            pass
    return out


# --------------------------------------------------------------------------
# closures

def closure_coloring(b: Berry, bc: BerryColoring, X: set[tuple[int, int]]) -> BerryColoring:
    """Extend a flavored berry coloring to the closure at docking set X, same flavor."""
    if not X:
        return bc
    for x, i in X:
        if (x, i) not in docking_vertices_at(b, x):
            raise BerryError(f"{x} is not a docking vertex for A{i}")
    gcl = close_berry(b, X)
    new = [e for e in gcl.edges if e not in b.graph.edges_set]
    for choice in itertools.product(range(3), repeat=len(new)):
        col = dict(bc.coloring)
        col.update(zip(new, choice))
        if is_flavor(bc.flavor, gcl, b.u, bc.v, bc.w, col):
            return BerryColoring(col, bc.flavor, is_liec(gcl, col), b.u, bc.v, bc.w,
                                 "closure-extension", _boundary(gcl, b.u, bc.v, bc.w, col))
    # closures add triangles; search the closed graph directly for the flavor
    g, u = gcl, b.u
    v, w = bc.v, bc.w
    fixed = {edge(u, v): C}
    if w is not None:
        fixed[edge(u, w)] = bc.coloring[edge(u, w)]
    exempt = set(fixed) if bc.flavor is Flavor.STANDARD_PRIMARY else {edge(u, v)}
    if bc.flavor is Flavor.ALTERNATIVE_PRIMARY and w is None:
        exempt = set()
    try:
        col = find_where(g, 3, lambda c: is_flavor(bc.flavor, g, u, v, w, c), exempt=exempt, fixed=fixed,
                         budget=SearchBudget(node_limit=_SEARCH_BUDGET))
    except SearchExhausted:
        col = None
    if col is None:
        raise BerryError("closure admits no coloring of the same flavor")
    return BerryColoring(col, bc.flavor, is_liec(g, col), u, v, w, "closure-search", _boundary(g, u, v, w, col))


# --------------------------------------------------------------------------
# interface signatures, used by the end-grape extension

@dataclass(frozen=True)
class BerryOption:
    """A coloring of one berry described by what it shows at the root."""

    coloring: tuple[tuple[Edge, int], ...]
    ends: tuple[tuple[int, int, int], ...]  # (neighbour of u, color, its color degree)
    flavored: bool
    label: str

    @property
    def counts(self) -> tuple[int, int, int]:
        n = [0, 0, 0]
        for _, c, _ in self.ends:
            n[c] += 1
        return n[0], n[1], n[2]

    def as_dict(self) -> Coloring:
        return dict(self.coloring)


def _option(g: SimpleGraph, u: int, col: Mapping[Edge, int], flavored: bool, label: str) -> BerryOption:
    ends = tuple(sorted((y, col[edge(u, y)], color_degree(g, col, y, col[edge(u, y)])) for y in g.neighbors(u)))
    return BerryOption(tuple(sorted(col.items())), ends, flavored, label)


_PERMS = list(itertools.permutations(range(3)))
EXHAUSTIVE_LIMIT = 14


def berry_options(b: Berry, exhaustive: bool = True) -> list[BerryOption]:
    """Colorings of b with every non-root edge irregular, one per root signature.

    Flavored colorings come first, each under all six color renamings; when
    the berry is small the remaining signatures are found by exhaustive search.
    """
    key = (b.graph.edges, b.graph.vertices, b.u)
    return list(_options_cached(key, exhaustive and b.graph.m <= EXHAUSTIVE_LIMIT))


@lru_cache(maxsize=4096)
def _options_cached(key, exhaustive: bool) -> tuple[BerryOption, ...]:
    edges, vertices, u = key
    g = SimpleGraph(edges, vertices)
    b = make_berry(g, u)
    seen: set = set()
    out: list[BerryOption] = []
    for bc in flavored_colorings(b):
        for p in _PERMS:
            opt = _option(g, u, permute_colors(bc.coloring, p), True, f"{bc.flavor.value}{p}")
            if opt.ends not in seen:
                seen.add(opt.ends)
                out.append(opt)
    if not b.unicyclic and classify_berry(b).tag == "B7":
        # inside A4..A6 the two legs of B7 may also take a and b
        for p in _PERMS:
            col = _b7_split(b)
            opt = _option(g, u, permute_colors(col, p), True, f"b7-split{p}")
            if opt.ends not in seen:
                seen.add(opt.ends)
                out.append(opt)
    if exhaustive:
        from .oracle import search_colorings

        exempt = {edge(u, y) for y in g.neighbors(u)}
        for col in search_colorings(g, 3, exempt=exempt, symmetry=True):
            for p in _PERMS:
                opt = _option(g, u, permute_colors(col, p), False, "search")
                if opt.ends not in seen:
                    seen.add(opt.ends)
                    out.append(opt)
    return tuple(out)


def _b7_split(b: Berry) -> Coloring:
    kind = classify_berry(b)
    iso = kind.mapping
    col = {edge(iso[0], iso[1]): C, edge(iso[1], iso[2]): A, edge(iso[2], iso[3]): A,
           edge(iso[1], iso[4]): B, edge(iso[4], iso[5]): B}
    return col


def _self_check() -> None:
    from .templates import B_PRIME, B_PRIME_3LIEC, BOW_TIE, BOW_TIE_4LIEC

    by_name = {t.name: t for t in ALTERNATIVE_TEMPLATES}
    for (name, flavor), table in STORED_BERRY_COLORINGS.items():
        t = by_name[name]
        r = t.roles
        if not is_flavor(Flavor(flavor), t.graph, r["u"], r["v"], r["w"], table):
            raise AssertionError(f"stored {flavor} coloring of {name} is wrong")
    if not is_liec(BOW_TIE.graph, BOW_TIE_4LIEC) or not is_liec(B_PRIME.graph, B_PRIME_3LIEC):
        raise AssertionError("stored exceptional coloring is wrong")


_self_check()
