"""End-grape reductions, grape colorings and the cactus coloring algorithm.

The extension of a coloring of the root component to the whole graph is
done in two layers.  First the explicit case tables (data rows below) are
tried; each row names the recipe it applies.  When no row applies, or a
row's output fails verification, a recipe search takes over: it looks for a
color count vector at the end-grape root together with one coloring per
berry (flavored colorings in all six renamings first, then, for small
berries, every root signature) that makes every edge at the root irregular.
"""

from __future__ import annotations

import itertools
import logging
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Sequence

from .berries import (
    BerryColoring,
    BerryOption,
    Flavor,
    berry_options,
    classify_berry,
    primary_coloring,
    secondary_coloring,
    tertiary_coloring,
    BerryError,
)
from .classify import Verdict, classify
from .coloring import A, B, C, Coloring, color_degree, is_liec, permute_colors, recipe, restrict, swap
from .decomp import (
    Berry,
    EndGrape,
    ExitKind,
    berries,
    end_grape_at,
    find_end_grapes,
    grape_root,
    open_graph,
    singular_kind,
)
from .graph import Edge, GraphError, SimpleGraph, components, cycle_count, edge, extend_through_trim, is_cactus, trim
from .oracle import SearchBudget, SearchExhausted, find_liec, search_colorings
from .templates import B_PRIME, B_PRIME_3LIEC, BOW_TIE, BOW_TIE_4LIEC, match_template, transport
from .trees import tree_color, unicyclic_color

log = logging.getLogger(__name__)

# counts of the routes taken, for diagnostics and the coverage tests
STATS: Counter = Counter()


class ReductionError(RuntimeError):
    pass


class ConstructionError(RuntimeError):
    def __init__(self, message: str, steps: list | None = None):
        super().__init__(message)
        self.steps = steps or []


# --------------------------------------------------------------------------
# primary coloring of an end-grape and its modification

@dataclass
class EndGrapePrimary:
    u: int
    berries: list[Berry]
    kinds: list[str]
    colorings: list[BerryColoring]
    modified_parts: list[Coloring]
    modification: str

    @property
    def prim(self) -> Coloring:
        out: Coloring = {}
        for bc in self.colorings:
            out.update(bc.coloring)
        return out

    @property
    def modified(self) -> Coloring:
        out: Coloring = {}
        for part in self.modified_parts:
            out.update(part)
        return out

    @property
    def graph(self) -> SimpleGraph:
        es = [e for b in self.berries for e in b.graph.edges]
        return SimpleGraph(es)

    def counts(self, col: Coloring | None = None) -> tuple[int, int, int]:
        col = self.prim if col is None else col
        n = [0, 0, 0]
        for e, c in col.items():
            if self.u in e:
                n[c] += 1
        return n[0], n[1], n[2]

    @property
    def d_prim(self) -> tuple[int, int, int]:
        return self.counts()

    @property
    def d_u(self) -> tuple[int, int, int]:
        return self.counts(self.modified)

    @property
    def has_b7(self) -> bool:
        return "B7" in self.kinds

    def alternative_unicyclic(self) -> list[int]:
        return [i for i, (b, k) in enumerate(zip(self.berries, self.kinds)) if b.unicyclic and k != "standard"]

    @property
    def liec_guaranteed(self) -> bool:
        dc = self.d_u[C]
        return dc >= 4 or (dc >= 3 and not self.has_b7)

    @property
    def chromatic(self) -> int:
        return sum(1 for x in self.d_u if x)

    def three_chromatic_shape_ok(self) -> bool:
        d = self.d_u
        return self.chromatic < 3 or (d[A] == 3 and d[B] == 1)


def _order_berries(bs: Sequence[Berry]) -> list[tuple[Berry, str]]:
    tagged = [(b, classify_berry(b).tag) for b in bs]
    alt = [p for p in tagged if p[0].unicyclic and p[1] != "standard"]
    std = [p for p in tagged if p[0].unicyclic and p[1] == "standard"]
    acyc = [p for p in tagged if not p[0].unicyclic]
    return alt + std + acyc


def grape_primary(u: int, bs: Sequence[Berry]) -> EndGrapePrimary:
    ordered = _order_berries(bs)
    berries_ = [b for b, _ in ordered]
    kinds = [k for _, k in ordered]
    cols = [primary_coloring(b) for b in berries_]
    parts = [dict(bc.coloring) for bc in cols]
    eg = EndGrapePrimary(u, berries_, kinds, cols, parts, "none")
    alt = eg.alternative_unicyclic()
    da = eg.d_prim[A]
    dw = {i: color_degree(berries_[i].graph, parts[i], cols[i].w, A) for i in alt}
    if all(dw[i] != da for i in alt):
        return eg
    if da == 2 and any(dw[i] == 2 for i in alt):
        for i in alt:
            if dw[i] == 2:
                parts[i] = swap(parts[i], A, C)
        eg.modification = "swap-ac"
    elif da == 4 and any(dw[i] == 4 for i in alt):
        i = next(i for i in alt if dw[i] == 4)
        parts[i] = swap(parts[i], A, B)
        eg.modification = "swap-ab-one"
    return eg


def endgrape_primary(eg: EndGrape) -> EndGrapePrimary:
    return grape_primary(eg.u, eg.berries)


# --------------------------------------------------------------------------
# the recipe search

def _targets(deg: int):
    for a in range(deg, -1, -1):
        for b in range(deg - a, -1, -1):
            yield (a, b, deg - a - b)


def assemble(
    u: int,
    option_lists: Sequence[Sequence[BerryOption]],
    exit_ends: Sequence[tuple[int, int]],
    flavored_only: bool = False,
) -> list[BerryOption] | None:
    """Pick one option per berry so that every edge at ``u`` is irregular.

    ``exit_ends`` holds (color, color degree of the far end) for each edge
    from u into the root component; those colors are fixed.
    """
    deg = len(exit_ends) + sum(len(opts[0].ends) if opts else 0 for opts in option_lists)
    if any(not opts for opts in option_lists):
        return None
    fixed = [0, 0, 0]
    for c, _ in exit_ends:
        fixed[c] += 1
    for n in _targets(deg):
        if any(n[c] == d for c, d in exit_ends):
            continue
        need = tuple(n[i] - fixed[i] for i in range(3))
        if min(need) < 0:
            continue
        feasible = []
        for opts in option_lists:
            ok = [o for o in opts if (o.flavored or not flavored_only) and all(n[c] != d for _, c, d in o.ends)]
            if not ok:
                break
            feasible.append(ok)
        else:
            choice = _subset_sum(feasible, need)
            if choice is not None:
                return choice
    return None


def _subset_sum(feasible: list[list[BerryOption]], need: tuple[int, int, int]) -> list[BerryOption] | None:
    layers: list[dict] = [{(0, 0, 0): None}]
    for ok in feasible:
        nxt: dict = {}
        by_counts: dict[tuple[int, int, int], BerryOption] = {}
        for o in ok:
            by_counts.setdefault(o.counts, o)
        for vec in layers[-1]:
            for cnt, o in by_counts.items():
                nv = (vec[0] + cnt[0], vec[1] + cnt[1], vec[2] + cnt[2])
                if nv[0] <= need[0] and nv[1] <= need[1] and nv[2] <= need[2] and nv not in nxt:
                    nxt[nv] = (vec, o)
        if not nxt:
            return None
        layers.append(nxt)
    if need not in layers[-1]:
        return None
    out = []
    vec = need
    for layer in reversed(layers[1:]):
        prev, o = layer[vec]
        out.append(o)
        vec = prev
    return list(reversed(out))


# --------------------------------------------------------------------------
# case tables

@dataclass
class Context:
    g: SimpleGraph
    u: int
    prim: EndGrapePrimary
    phi0: Coloring | None = None  # normalized: u u1 is a, u u2 is a or b
    g0: SimpleGraph | None = None
    exits: tuple[int, ...] = ()

    def d0(self, y: int, c: int) -> int:
        return color_degree(self.g0, self.phi0, y, c)

    @property
    def u1(self) -> int:
        return self.exits[0]

    @property
    def u2(self) -> int:
        return self.exits[1]

    @property
    def mono(self) -> bool:
        return len(self.exits) == 2 and self.phi0[edge(self.u, self.u2)] == A


@dataclass(frozen=True)
class Row:
    table: str
    name: str
    anchor: str
    guard: Callable[[Context], bool]
    build: Callable[[Context], list[Coloring]]


def _with0(ctx: Context, name: str, *parts: Coloring) -> list[Coloring]:
    out = permute_colors(ctx.phi0, recipe(name))
    for p in parts:
        out.update(p)
    return [out]


def _prime_variants(ctx: Context) -> list[Coloring]:
    """phi'^u: one alternative berry recolored, for each eligible berry."""
    pr = ctx.prim
    out = []
    d = pr.d_u
    alt = pr.alternative_unicyclic()
    if pr.chromatic == 2:
        for i in [i for i in range(len(pr.berries)) if pr.berries[i].unicyclic]:
            part = pr.modified_parts[i]
            w = pr.colorings[i].w
            dw = color_degree(pr.berries[i].graph, part, w, A)
            if dw == 4:
                new = swap(part, A, B)
            elif dw == 2:
                new = swap(swap(part, A, C), A, B)
            else:
                continue
            out.append(_replace(pr, i, new))
    elif pr.chromatic == 3:
        for i in alt:
            part = pr.modified_parts[i]
            if part[edge(pr.u, pr.colorings[i].w)] == A:
                out.append(_replace(pr, i, swap(part, A, B)))
    del d
    return out


def _replace(pr: EndGrapePrimary, i: int, part: Coloring) -> Coloring:
    out: Coloring = {}
    for j, p in enumerate(pr.modified_parts):
        out.update(part if j == i else p)
    return out


def _dc(ctx: Context) -> int:
    return ctx.prim.d_u[C]


def _db(ctx: Context) -> int:
    return ctx.prim.d_u[B]


DEG4_ROWS: list[Row] = [
    Row("deg4", "single/d0a(u1)!=dcu+1", "phi0_cba + phi_u",
        lambda x: len(x.exits) == 1 and x.d0(x.u1, A) != _dc(x) + 1,
        lambda x: _with0(x, "cba", x.prim.modified)),
    Row("deg4", "single/d0a(u1)=dcu+1", "phi0_bac + phi_u",
        lambda x: len(x.exits) == 1 and x.d0(x.u1, A) == _dc(x) + 1,
        lambda x: _with0(x, "bac", x.prim.modified)),
    Row("deg4", "mono/neither", "phi0_cba + phi_u",
        lambda x: len(x.exits) == 2 and x.mono and x.d0(x.u1, A) != _dc(x) + 2 and x.d0(x.u2, A) != _dc(x) + 2,
        lambda x: _with0(x, "cba", x.prim.modified)),
    Row("deg4", "mono/u1 hit, u2 clear of b", "phi0_bac + phi_u",
        lambda x: len(x.exits) == 2 and x.mono and x.d0(x.u1, A) == _dc(x) + 2 and x.d0(x.u2, A) != _db(x) + 2,
        lambda x: _with0(x, "bac", x.prim.modified)),
    Row("deg4", "mono/both hit", "phi0_abc + phi_u",
        lambda x: len(x.exits) == 2 and x.mono and x.d0(x.u1, A) == _dc(x) + 2 and x.d0(x.u2, A) == _db(x) + 2,
        lambda x: _with0(x, "abc", x.prim.modified)),
    Row("deg4", "bi/neither", "phi0_cba + phi_u",
        lambda x: len(x.exits) == 2 and not x.mono and x.d0(x.u1, A) != _dc(x) + 1 and x.d0(x.u2, B) != _db(x) + 1,
        lambda x: _with0(x, "cba", x.prim.modified)),
    Row("deg4", "bi/u2 hit", "phi0_cab + phi_prim",
        lambda x: len(x.exits) == 2 and not x.mono and x.d0(x.u1, A) != _dc(x) + 1 and x.d0(x.u2, B) == _db(x) + 1,
        lambda x: _with0(x, "cab", x.prim.prim)),
    Row("deg4", "bi/both hit/u 1-chromatic", "phi0_abc + phi_u",
        lambda x: len(x.exits) == 2 and not x.mono and x.d0(x.u1, A) == _dc(x) + 1
        and x.d0(x.u2, B) == _dc(x) + 1 and x.prim.chromatic == 1,
        lambda x: _with0(x, "abc", x.prim.modified)),
    Row("deg4", "bi/both hit/u 2- or 3-chromatic", "phi0_abc + phi'_u",
        lambda x: len(x.exits) == 2 and not x.mono and x.d0(x.u1, A) == _dc(x) + 1
        and x.d0(x.u2, B) == _dc(x) + 1 and x.prim.chromatic >= 2,
        lambda x: [c for p in _prime_variants(x) for c in _with0(x, "abc", p)]),
]


def _tert(pr: EndGrapePrimary, i: int) -> BerryColoring | None:
    try:
        return tertiary_coloring(pr.berries[i])
    except BerryError:
        return None


def _sum(*parts: Coloring) -> Coloring:
    out: Coloring = {}
    for p in parts:
        out.update(p)
    return out


def _grape_b7(x: Context, want: int) -> list[Coloring]:
    pr = x.prim
    alt = pr.alternative_unicyclic()
    b7 = [i for i, k in enumerate(pr.kinds) if k == "B7"]
    out = []
    for i in alt:
        t = _tert(pr, i)
        if t is None or t.boundary["d(w)"] != want:
            continue
        others = [j for j in range(len(pr.berries)) if j != i]
        parts = [t.coloring]
        for j in others:
            p = pr.colorings[j].coloring
            parts.append(permute_colors(p, recipe("acb")) if (want == 4 and j in b7) else p)
        out.append(_sum(*parts))
    return out


def _two_alt(x: Context, pick: Callable[[int, int], bool], name: str) -> list[Coloring]:
    pr = x.prim
    out = []
    for i, j in itertools.permutations(range(len(pr.berries)), 2):
        dv_i = pr.colorings[i].boundary["d(v)"]
        dv_j = pr.colorings[j].boundary["d(v)"]
        if pick(dv_i, dv_j):
            out.append(_sum(pr.colorings[i].coloring, permute_colors(pr.colorings[j].coloring, recipe(name))))
    return out


GRAPE_ROWS: list[Row] = [
    Row("grape", "dc>=4", "phi_u", lambda x: x.prim.d_prim[C] >= 4, lambda x: [x.prim.modified]),
    Row("grape", "dc=3/no B7", "phi_u", lambda x: x.prim.d_prim[C] == 3 and not x.prim.has_b7,
        lambda x: [x.prim.modified]),
    Row("grape", "dc=3/B7/tert d(w1)=3", "tert1 + prim2 + prim3",
        lambda x: x.prim.d_prim[C] == 3 and x.prim.has_b7, lambda x: _grape_b7(x, 3)),
    Row("grape", "dc=3/B7/tert d(w1)=4", "tert1 + prim2 + prim3_acb",
        lambda x: x.prim.d_prim[C] == 3 and x.prim.has_b7, lambda x: _grape_b7(x, 4)),
    Row("grape", "dc=2/d(v1)=d(v2)=1", "prim1 + prim2_bac",
        lambda x: x.prim.d_prim[C] == 2 and len(x.prim.berries) == 2,
        lambda x: _two_alt(x, lambda a, b: a == 1 and b == 1, "bac")),
    Row("grape", "dc=2/d(v1)=1,d(v2)=2", "prim1 + prim2_cab",
        lambda x: x.prim.d_prim[C] == 2 and len(x.prim.berries) == 2,
        lambda x: _two_alt(x, lambda a, b: a == 1 and b == 2, "cab")),
    Row("grape", "dc=2/d(v1)=d(v2)=2", "prim1 + prim2_acb",
        lambda x: x.prim.d_prim[C] == 2 and len(x.prim.berries) == 2,
        lambda x: _two_alt(x, lambda a, b: a == 2 and b == 2, "acb")),
]


def _path_mono(x: Context, c: int) -> Coloring:
    return {e: c for e in x.g0.edges}


def _b7_rows(x: Context, base: int) -> list[Coloring]:
    pr = x.prim
    out = []
    b7 = [i for i, k in enumerate(pr.kinds) if k == "B7"]
    for i in pr.alternative_unicyclic():
        parts = [_path_mono(x, base), pr.colorings[i].coloring]
        for j in range(len(pr.berries)):
            if j != i:
                p = pr.colorings[j].coloring
                parts.append(permute_colors(p, recipe("acb")) if j in b7 else p)
        out.append(_sum(*parts))
    return out


def _v1(x: Context) -> int | None:
    alt = x.prim.alternative_unicyclic()
    return x.prim.colorings[alt[0]].boundary["d(v)"] if alt else None


PATH_ROWS: list[Row] = [
    Row("g0tree", "dcu>=3 or dcu=2 without B7", "phi0_c + phi_u",
        lambda x: _dc(x) >= 3 or (_dc(x) == 2 and not x.prim.has_b7),
        lambda x: [_sum(_path_mono(x, C), x.prim.modified)]),
    Row("g0tree", "dcu=2/B7/d(v1)=1", "phi0_c + prim1 + prim2_acb",
        lambda x: _dc(x) == 2 and x.prim.has_b7 and _v1(x) == 1, lambda x: _b7_rows(x, C)),
    Row("g0tree", "dcu=2/B7/d(v1)=2", "phi0_b + prim1 + prim2_acb",
        lambda x: _dc(x) == 2 and x.prim.has_b7 and _v1(x) == 2, lambda x: _b7_rows(x, B)),
    Row("g0tree", "dcu=1/d(v1)=1", "phi0_c + prim1",
        lambda x: _dc(x) == 1 and _v1(x) == 1, lambda x: [_sum(_path_mono(x, C), x.prim.prim)]),
    Row("g0tree", "dcu=1/d(v1)=2/odd", "phi0_a + prim1",
        lambda x: _dc(x) == 1 and _v1(x) == 2 and x.g0.m % 2 == 1, lambda x: [_sum(_path_mono(x, A), x.prim.prim)]),
    Row("g0tree", "dcu=1/d(v1)=2/even", "phi0_b + prim1",
        lambda x: _dc(x) == 1 and _v1(x) == 2 and x.g0.m % 2 == 0, lambda x: [_sum(_path_mono(x, B), x.prim.prim)]),
]

ALL_ROWS = DEG4_ROWS + GRAPE_ROWS + PATH_ROWS


def _run_rows(rows: Sequence[Row], ctx: Context, target: SimpleGraph) -> tuple[Coloring, Row] | None:
    for row in rows:
        try:
            if not row.guard(ctx):
                continue
            cands = row.build(ctx)
        except (KeyError, BerryError):
            continue
        STATS[f"row-fired:{row.table}:{row.name}"] += 1
        for col in cands:
            if len(col) == target.m and is_liec(target, col):
                STATS[f"row-ok:{row.table}:{row.name}"] += 1
                return col, row
        STATS[f"row-failed:{row.table}:{row.name}"] += 1
    return None


# --------------------------------------------------------------------------
# grapes

@dataclass
class ReductionStep:
    root: int
    reduced: str  # "G0", "G0'", "grape", "opening", ...
    rule: str
    anchor: str = ""
    flavors: list[str] = field(default_factory=list)


def grape_3liec(g: SimpleGraph, steps: list[ReductionStep] | None = None) -> Coloring:
    u = grape_root(g)
    if u is None:
        raise ReductionError("not a grape")
    if cycle_count(g) < 2:
        raise ReductionError("a grape needs at least two cycles")
    iso = match_template(g, B_PRIME)
    if iso is not None:
        _log(steps, ReductionStep(iso[0], "grape", "stored B'", "stored 3-liec"))
        return transport(B_PRIME_3LIEC, iso)
    bs = berries(g, u)
    pr = grape_primary(u, bs)
    ctx = Context(g, u, pr)
    hit = _run_rows(GRAPE_ROWS, ctx, g)
    if hit is not None:
        col, row = hit
        _log(steps, ReductionStep(u, "grape", f"{row.table}/{row.name}", row.anchor))
        return col
    choice = assemble(u, [berry_options(b) for b in bs], [], flavored_only=True) or assemble(
        u, [berry_options(b) for b in bs], []
    )
    if choice is None:
        raise ConstructionError(f"no recipe colors the grape rooted at {u}")
    col = _sum(*(o.as_dict() for o in choice))
    _log(steps, ReductionStep(u, "grape", "recipe-search", "", [o.label for o in choice]))
    STATS["grape:recipe-search"] += 1
    return col


def _log(steps, step) -> None:
    if steps is not None:
        steps.append(step)


# --------------------------------------------------------------------------
# end-grape reduction

def _normalizations(g0: SimpleGraph, u: int, exits: list[int], phi0: Coloring):
    """Yield (phi0 normalized, exits ordered as u1[, u2], inverse permutation)."""
    orders = [exits] if len(exits) == 1 else [exits, exits[::-1]]
    for order in orders:
        c1 = phi0[edge(u, order[0])]
        perm = {c1: A}
        if len(order) == 2:
            c2 = phi0[edge(u, order[1])]
            if c2 != c1:
                perm[c2] = B
        rest = [c for c in range(3) if c not in perm]
        free = [c for c in range(3) if c not in perm.values()]
        perm.update(zip(rest, free))
        yield permute_colors(phi0, perm), order


def _table_extension(g: SimpleGraph, eg: EndGrape, phi0: Coloring, pr: EndGrapePrimary):
    if pr.d_prim[C] < 4:
        return None
    exits = eg.exit_neighbors
    for norm, order in _normalizations(eg.root_component, eg.u, exits, phi0):
        ctx = Context(g, eg.u, pr, norm, eg.root_component, tuple(order))
        hit = _run_rows(DEG4_ROWS, ctx, g)
        if hit is not None:
            return hit
    return None


def extend_endgrape(
    g: SimpleGraph, eg: EndGrape, phi0: Coloring, *, tables: bool = True, steps: list | None = None
) -> Coloring | None:
    """Extend a liec of the root component (given on its edges) to all of g."""
    phi0 = restrict(phi0, eg.root_component.edges)
    if tables:
        try:
            pr = endgrape_primary(eg)
        except BerryError:
            pr = None
        if pr is not None:
            hit = _table_extension(g, eg, phi0, pr)
            if hit is not None:
                col, row = hit
                _log(steps, ReductionStep(eg.u, "G0", f"{row.table}/{row.name}", row.anchor))
                return col
    opts = [berry_options(b) for b in eg.berries]
    ends = []
    for y in eg.exit_neighbors:
        c = phi0[edge(eg.u, y)]
        ends.append((c, color_degree(eg.root_component, phi0, y, c)))
    for flavored in (True, False):
        choice = assemble(eg.u, opts, ends, flavored_only=flavored)
        if choice is not None:
            col = dict(phi0)
            for o in choice:
                col.update(o.as_dict())
            if not is_liec(g, col):
                raise AssertionError("recipe search produced an invalid coloring")
            STATS["endgrape:recipe-search" + ("" if flavored else ":unflavored")] += 1
            _log(steps, ReductionStep(eg.u, "G0", "recipe-search", "", [o.label for o in choice]))
            return col
    return None


def _first_secondary_v(b: Berry) -> int | None:
    try:
        sec = secondary_coloring(b)
    except BerryError:
        return None
    return sec.v if sec.boundary["d(v)"] == 1 else None


def reduced_graph(g: SimpleGraph, eg: EndGrape) -> tuple[SimpleGraph, str, int | None]:
    """The graph to color first: the root component, or it plus one berry edge u v1."""
    g0 = eg.root_component
    if not classify(g0).verdict.colorable:
        kind = classify_berry(eg.berries[0]) if len(eg.berries) == 1 else None
        if kind is None or kind.tag not in ("B1", "B2") or eg.exit_kind is not ExitKind.SINGLE:
            raise ReductionError("root component is not colorable and the end-grape is not B2*")
        return eg.g0_prime(kind.v), "G0'/B2*", kind.v
    pr = endgrape_primary(eg)
    dc = pr.d_prim[C]
    if dc == 1:
        bc = pr.colorings[0]
        if bc.boundary["d(v)"] == 1:
            return eg.g0_prime(bc.v), "G0'/deg1", bc.v
    if dc == 2 and len(pr.berries) == 1 and pr.kinds[0] == "standard" and not pr.colorings[0].liec:
        v1 = _first_secondary_v(pr.berries[0])
        if v1 is not None:
            return eg.g0_prime(v1), "G0'/deg2", v1
    return g0, "G0", None


def is_b2_star(eg: EndGrape) -> bool:
    if len(eg.berries) != 1 or eg.exit_kind is not ExitKind.SINGLE:
        return False
    if classify_berry(eg.berries[0]).tag not in ("B1", "B2"):
        return False
    return not classify(eg.root_component).verdict.colorable


def reduce_endgrape(g: SimpleGraph, eg: EndGrape, *, allow_singular: bool = False):
    """Return (reduced graph, label, extender) for an end-grape.

    The extender maps a liec of the reduced graph to a liec of g, or
    returns None when it cannot.
    """
    kind = singular_kind(eg)
    if kind is not None and not allow_singular and not is_b2_star(eg):
        raise ReductionError(f"end-grape at {eg.u} is A{kind}; open it first")
    red, label, _ = reduced_graph(g, eg)

    def extender(col: Coloring, steps: list | None = None) -> Coloring | None:
        return extend_endgrape(g, eg, restrict(col, eg.root_component.edges), steps=steps)

    return red, label, extender


def path_root_component_extend(g0: SimpleGraph, eg: EndGrape, g: SimpleGraph | None = None) -> Coloring:
    """Color an end-grape whose root component is a path of length at most 2 ending at u."""
    if g0.m > 2 or g0.max_degree() > 2 or g0.m != g0.n - 1:
        raise ReductionError("root component must be a path of length at most two; trim first")
    if g0.degree(eg.u) != 1:
        raise ReductionError("the path must end at the end-grape root")
    host = g if g is not None else g0.with_edges(eg.grape.edges)
    pr = endgrape_primary(eg)
    ctx = Context(host, eg.u, pr, None, g0, tuple(eg.exit_neighbors))
    hit = _run_rows(PATH_ROWS, ctx, host)
    if hit is None:
        raise ConstructionError("no path-root row produced a liec")
    return hit[0]


# --------------------------------------------------------------------------
# the main algorithm

@dataclass
class CactusResult:
    verdict: Verdict
    coloring: Coloring | None
    colors: int
    steps: list[ReductionStep] = field(default_factory=list)
    method: str = "construct"


def _usable(g: SimpleGraph) -> bool:
    v = classify(g).verdict
    return v.colorable and v is not Verdict.BOW_TIE


class _Colorer:
    def __init__(self, steps: list[ReductionStep]):
        self.steps = steps
        self.memo: dict[SimpleGraph, Coloring] = {}

    def color(self, g: SimpleGraph) -> Coloring:
        if g in self.memo:
            return dict(self.memo[g])
        col = self._color(g)
        if not is_liec(g, col) or len(set(col.values())) > 3:
            raise ConstructionError("internal step produced an invalid coloring", self.steps)
        self.memo[g] = col
        return dict(col)

    def _color(self, g: SimpleGraph) -> Coloring:
        if g.m == 0:
            return {}
        c = cycle_count(g)
        if c == 0:
            res = tree_color(g)
            _log(self.steps, ReductionStep(-1, "tree", res.method))
            return res.coloring
        if c == 1:
            res = unicyclic_color(g)
            _log(self.steps, ReductionStep(-1, "unicyclic", res.method))
            return res.coloring
        if grape_root(g) is not None:
            return grape_3liec(g, self.steps)
        egs = find_end_grapes(g)
        regular = [eg for eg in egs if singular_kind(eg) is None or is_b2_star(eg)]
        singular = [eg for eg in egs if eg not in regular]
        for eg in regular + singular:
            col = self._via_endgrape(g, eg)
            if col is not None:
                if eg in singular:
                    STATS["singular-extended"] += 1
                return col
        col = self._via_opening(g)
        if col is not None:
            return col
        raise ConstructionError("no reduction applies", self.steps)

    def _via_endgrape(self, g: SimpleGraph, eg: EndGrape) -> Coloring | None:
        try:
            red, label, v1 = reduced_graph(g, eg)
        except (ReductionError, BerryError):
            return None
        options = [(red, label)]
        if label != "G0" and _usable(eg.root_component):
            options.append((eg.root_component, "G0"))
        elif label == "G0" and v1 is None:
            pass
        for target, lab in options:
            if not _usable(target):
                continue
            try:
                sub = self.color(target)
            except ConstructionError:
                continue
            col = extend_endgrape(g, eg, sub, steps=self.steps)
            if col is not None:
                STATS[f"reduce:{lab}"] += 1
                self.steps.append(ReductionStep(eg.u, lab, "extended"))
                return col
            STATS[f"reduce-failed:{lab}"] += 1
        return None

    def _via_opening(self, g: SimpleGraph) -> Coloring | None:
        gop, op = open_graph(g)
        if not op.removed or not _usable(gop):
            return None
        STATS["opening"] += 1
        col = self.color(gop)
        cur = gop
        for x in sorted(op.removed):
            cur = cur.with_edges(op.removed[x])
            eg = _regrape(g, x, cur)
            ext = extend_endgrape(cur, eg, col, steps=self.steps)
            if ext is None:
                ext = local_completion(cur, col, eg)
                if ext is None:
                    return None
                STATS["closing:local-completion"] += 1
            else:
                STATS["closing:recipe"] += 1
            self.steps.append(ReductionStep(x, "opening", f"closed A{op.kinds[x]}"))
            col = ext
        return col


def _regrape(g: SimpleGraph, x: int, host: SimpleGraph) -> EndGrape:
    """The end-grape of g at x, with its root component taken inside ``host``."""
    eg = end_grape_at(g, x)
    if eg is None:
        raise ReductionError(f"no end-grape at {x}")
    rest = host.without_edges(eg.grape.edges)
    keep = next(set(c) for c in components(rest) if x in c)
    g0 = rest.induced(keep)
    return EndGrape(eg.u, eg.berries, eg.exits, eg.grape, g0)


def local_completion(g: SimpleGraph, col: Coloring, eg: EndGrape, budget: int = 200_000) -> Coloring | None:
    """Recolor the end-grape and a growing neighbourhood of its root, keeping the rest."""
    free = set(eg.grape.edges) | set(eg.exits)
    frontier = set(eg.exit_neighbors)
    for _ in range(4):
        fixed = {e: c for e, c in col.items() if e not in free and e in g.edges_set}
        try:
            for out in search_colorings(g, 3, fixed=fixed, budget=SearchBudget(node_limit=budget)):
                return out
        except SearchExhausted:
            return None
        grow = {e for e in g.edges if e[0] in frontier or e[1] in frontier}
        frontier = {y for e in grow for y in e}
        if grow <= free:
            break
        free |= grow
    return None


FALLBACK_EDGES = 16


def color_cactus(g: SimpleGraph, *, fallback: bool = True) -> CactusResult:
    """Classify, then color a connected cactus with at most three colors."""
    cls = classify(g)
    if not cls.verdict.colorable:
        return CactusResult(cls.verdict, None, 0, [], "classifier")
    if cls.verdict is Verdict.BOW_TIE:
        return CactusResult(cls.verdict, transport(BOW_TIE_4LIEC, cls.witness), 4, [], "stored")
    if cls.verdict is Verdict.GRAPE_B_PRIME:
        col = transport(B_PRIME_3LIEC, cls.witness)
        return CactusResult(cls.verdict, col, 3, [ReductionStep(cls.witness[0], "grape", "stored B'")], "stored")
    if not is_cactus(g):
        raise GraphError("not a cactus")
    steps: list[ReductionStep] = []
    t, trace = trim(g)
    if len(trace) and not _usable(t):
        t, trace = g, type(trace)()
        STATS["trim-skipped"] += 1
    try:
        col = _Colorer(steps).color(t)
        col = extend_through_trim(col, trace, 3) if len(trace) else col
        if not is_liec(g, col):
            raise ConstructionError("trim extension broke the coloring", steps)
        method = "construct"
    except (ConstructionError, ReductionError, BerryError, AssertionError) as exc:
        if not fallback or g.m > FALLBACK_EDGES:
            raise
        log.warning("construction failed (%s); using the search fallback", exc)
        STATS["oracle-fallback"] += 1
        col = find_liec(g, 3)
        if col is None:
            raise ConstructionError("search fallback found no 3-liec either", steps) from exc
        method = "oracle-fallback"
    return CactusResult(Verdict.COLORABLE, col, len(set(col.values())), steps, method)
