"""Exhaustive desk-scale checks of the main results.

Each ``criterion_*`` function runs one check and returns a
:class:`CriterionResult`; the ``selftest`` command and the acceptance tests
both call them. Sizes are parameters so the CLI can run a quick version.
"""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass, field
from typing import Callable

from .berries import Flavor, flavors_of
from .classify import Verdict, classify, is_colorable
from .coloring import A, a_sequence, is_liec, permute_colors, restrict
from .decomp import berries as split_berries
from .decomp import find_end_grapes, grape_root, singular_kind
from .generate import are_isomorphic_cacti, connected_graphs, enumerate_cacti, enumerate_trees
from .graph import SimpleGraph, cycle_count, edge, is_cactus
from .oracle import chromatic_index_irr, enumerate_liecs, find_liec, find_where
from .reduction import ReductionError, color_cactus, is_b2_star, reduce_endgrape
from .templates import B1, B3, B6, B7, B_PRIME, BOW_TIE, Template, match_template
from .trees import (
    NonColorableError,
    is_inversion_resistant,
    max_degree_vertices,
    shrub_based_coloring,
    tree_color,
)


@dataclass
class CriterionResult:
    number: int
    title: str
    passed: bool
    checked: int = 0
    failures: list = field(default_factory=list)
    seconds: float = 0.0
    note: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        extra = f"; {self.note}" if self.note else ""
        return f"[{mark}] criterion {self.number}: {self.title} ({self.checked} checked, {len(self.failures)} failures, {self.seconds:.1f}s{extra})"


def _timed(number: int, title: str, body: Callable[[CriterionResult], None]) -> CriterionResult:
    res = CriterionResult(number, title, False)
    t0 = time.perf_counter()
    body(res)
    res.seconds = time.perf_counter() - t0
    res.passed = not res.failures and res.checked > 0
    return res


def _template_graph(t: Template) -> SimpleGraph:
    return t.graph


# ---------------------------------------------------------------------------

def criterion_1(max_edges: int = 13) -> CriterionResult:
    def body(res: CriterionResult) -> None:
        for g in enumerate_cacti(max_edges, 1):
            if not classify(g).verdict.colorable or match_template(g, BOW_TIE) is not None:
                continue
            res.checked += 1
            try:
                r = color_cactus(g, fallback=False)
            except Exception as exc:  # any failure of the construction counts
                res.failures.append((g.edges, repr(exc)))
                continue
            if r.coloring is None or not is_liec(g, r.coloring) or len(set(r.coloring.values())) > 3:
                res.failures.append((g.edges, "invalid coloring"))

    return _timed(1, f"constructive 3-liec for colorable cacti up to {max_edges} edges", body)


def criterion_2() -> CriterionResult:
    def body(res: CriterionResult) -> None:
        g = _template_graph(BOW_TIE)
        res.checked = 2
        k = chromatic_index_irr(g, kmax=5)
        if k != 4:
            res.failures.append(("oracle index", k))
        r = color_cactus(g)
        if r.verdict is not Verdict.BOW_TIE:
            res.failures.append(("verdict", r.verdict.value))

    return _timed(2, "bow-tie needs exactly four colors", body)


def criterion_3(max_edges: int = 12) -> CriterionResult:
    def body(res: CriterionResult) -> None:
        for g in enumerate_cacti(max_edges, 1):
            res.checked += 1
            says_not = not classify(g).verdict.colorable
            oracle_not = chromatic_index_irr(g, kmax=5) is None
            if says_not != oracle_not:
                res.failures.append((g.edges, says_not, oracle_not))

    return _timed(3, f"non-colorable verdict matches the oracle up to {max_edges} edges", body)


def criterion_4(max_edges: int = 12) -> CriterionResult:
    def body(res: CriterionResult) -> None:
        for t in enumerate_trees(max_edges, 1):
            res.checked += 1
            opt = chromatic_index_irr(t, kmax=3)
            try:
                k = tree_color(t).colors
            except NonColorableError:
                k = None
            if k != opt:
                res.failures.append((t.edges, "k", k, opt))
            if t.max_degree() >= 5 and (k is None or k > 2):
                res.failures.append((t.edges, "max degree >= 5 but k =", k))
            if t.max_degree() < 3:
                continue
            for u in max_degree_vertices(t):
                sbc = shrub_based_coloring(t, u)
                seq = a_sequence(t, sbc.coloring, u, A)
                if is_inversion_resistant(t, u, sbc) != (seq in ([3, 2, 2], [4, 3, 3, 2])):
                    res.failures.append((t.edges, "inversion resistance at", u, seq))

    return _timed(4, f"tree results up to {max_edges} edges", body)


def criterion_5(max_edges: int = 12) -> CriterionResult:
    def body(res: CriterionResult) -> None:
        for g in enumerate_cacti(max_edges, 3):
            if g.m != g.n or not classify(g).verdict.colorable:
                continue
            res.checked += 1
            try:
                r = color_cactus(g, fallback=False)
            except Exception as exc:
                res.failures.append((g.edges, repr(exc)))
                continue
            if not is_liec(g, r.coloring) or len(set(r.coloring.values())) > 3:
                res.failures.append((g.edges, "invalid coloring"))

    return _timed(5, f"unicyclic graphs up to {max_edges} edges use at most three colors", body)


# template checks -----------------------------------------------------------

def has_standard_primary(g: SimpleGraph, u: int) -> bool:
    """Oracle search for a standard primary coloring of the berry (g, u)."""
    root_edges = {edge(u, y) for y in g.neighbors(u)}

    def accept(col) -> bool:
        return any(fl is Flavor.STANDARD_PRIMARY for fl, _, _ in flavors_of(g, u, col))

    return find_where(g, 3, accept, exempt=root_edges, symmetry=True) is not None


def _b2_examples() -> list[SimpleGraph]:
    tri = [(0, 1), (0, 2), (1, 2)]
    return [
        SimpleGraph(tri + [(1, 3), (3, 4)]),
        SimpleGraph(tri + [(2, 3), (3, 4), (4, 5), (5, 6)]),
        SimpleGraph(tri + [(1, 3), (3, 4), (2, 5), (5, 6)]),
    ]


def all_berries_flavored(g: SimpleGraph, col) -> bool:
    """True when, for one naming of the colors, every berry of the grape g is
    primary, secondary or tertiary."""
    root = grape_root(g)
    parts = [(b.graph, restrict(col, b.graph.edges)) for b in split_berries(g, root)]
    for p in itertools.permutations(range(3)):
        named = [(h, permute_colors(c, p)) for h, c in parts]
        if all(flavors_of(h, root, c, up_to_permutation=False) for h, c in named):
            return True
    return False


def criterion_6() -> CriterionResult:
    def body(res: CriterionResult) -> None:
        without = [("B1", _template_graph(B1))] + [("B2", g) for g in _b2_examples()] + [("B3", _template_graph(B3))]
        with_ = [("B6", _template_graph(B6)), ("B7", _template_graph(B7))]
        for name, g in without:
            res.checked += 1
            if has_standard_primary(g, 0):
                res.failures.append((name, g.edges, "has a standard primary coloring"))
        for name, g in with_:
            res.checked += 1
            if not has_standard_primary(g, 0):
                res.failures.append((name, g.edges, "has no standard primary coloring"))
        # the degree-3 vertex of B7 is never 2-chromatic
        b7 = _template_graph(B7)
        (x,) = [y for y in b7.vertices if b7.degree(y) == 3]
        res.checked += 1
        for col in enumerate_liecs(b7, 3):
            if len({col[e] for e in b7.incident(x)}) == 2:
                res.failures.append(("B7", col))
                break
        bp = _template_graph(B_PRIME)
        res.checked += 1
        if find_liec(bp, 3) is None:
            res.failures.append(("B'", "no 3-liec"))
        for col in enumerate_liecs(bp, 3):
            if all_berries_flavored(bp, col):
                res.failures.append(("B'", "all berries flavored", col))
                break

    return _timed(6, "berry template checks", body)


# extension soundness -------------------------------------------------------

def endgrape_instances(max_edges: int = 11):
    """(g, end-grape) pairs the reduction accepts, over all cacti up to max_edges."""
    for g in enumerate_cacti(max_edges, 6):
        if cycle_count(g) < 2 or grape_root(g) is not None:
            continue
        for eg in find_end_grapes(g):
            if singular_kind(eg) is not None and not is_b2_star(eg):
                continue
            if not is_colorable(eg.root_component) and not is_b2_star(eg):
                continue  # the reduction picks another end-grape here
            yield g, eg


def criterion_7(max_edges: int = 11, minimum: int = 200) -> CriterionResult:
    def body(res: CriterionResult) -> None:
        extensions = 0
        for g, eg in endgrape_instances(max_edges):
            try:
                red, label, extend = reduce_endgrape(g, eg)
            except ReductionError as exc:
                res.failures.append((g.edges, eg.u, repr(exc)))
                continue
            res.checked += 1
            for col in enumerate_liecs(red, 3):
                extensions += 1
                try:
                    out = extend(col)
                except Exception as exc:
                    out = None
                    why = repr(exc)
                else:
                    why = "no extension"
                if out is None or not is_liec(g, out) or len(set(out.values())) > 3:
                    res.failures.append((g.edges, eg.u, label, col, why))
        res.note = f"{extensions} colorings extended"
        if res.checked < minimum:
            res.failures.append(("only", res.checked, "instances"))

    return _timed(7, f"every 3-liec of the reduced graph extends (up to {max_edges} edges)", body)


# conjecture support --------------------------------------------------------

def search_counterexamples(max_vertices: int, kmax: int = 3):
    """Yield (graph, index) for colorable connected graphs with no kmax-liec."""
    for g in connected_graphs(max_vertices, 2):
        if not classify(g).verdict.colorable:
            continue
        if find_liec(g, kmax) is not None:
            continue
        yield g, chromatic_index_irr(g, kmax=max(5, kmax + 1))


def criterion_8(max_vertices: int = 7) -> CriterionResult:
    def body(res: CriterionResult) -> None:
        bow = _template_graph(BOW_TIE)
        found = list(search_counterexamples(max_vertices, 3))
        res.checked = sum(1 for _ in connected_graphs(max_vertices, 2))
        for g, k in found:
            if not (is_cactus(g) and are_isomorphic_cacti(g, bow)):
                res.failures.append((g.edges, k))
        fits = bow.n <= max_vertices
        res.note = f"{len(found)} found; the bow-tie has {bow.n} vertices and {'fits' if fits else 'does not fit'}"

    return _timed(8, f"only the bow-tie needs four colors among graphs up to {max_vertices} vertices", body)


def run_all(max_edges: int | None = None, max_vertices: int = 7) -> list[CriterionResult]:
    """All criteria; ``max_edges`` caps every enumeration for a quick run."""
    cap = (lambda n: n) if max_edges is None else (lambda n: min(n, max_edges))
    return [
        criterion_1(cap(13)),
        criterion_2(),
        criterion_3(cap(12)),
        criterion_4(cap(12)),
        criterion_5(cap(12)),
        criterion_6(),
        criterion_7(cap(11), minimum=200 if cap(11) >= 11 else 1),
        criterion_8(max_vertices),
    ]
