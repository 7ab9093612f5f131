import pytest

from liec.classify import TTrace, Verdict, classify, is_colorable, is_in_T, replay_T
from liec.generate import canonical_form, enumerate_cacti, triangle_attach_points
from liec.graph import GraphError, SimpleGraph, cycle_graph, path_graph
from liec.oracle import chromatic_index_irr
from liec.templates import B_PRIME, BOW_TIE, match_template


def test_examples(triangle):
    assert classify(path_graph(3)).verdict is Verdict.NON_COLORABLE_ODD_PATH
    assert classify(cycle_graph(5)).verdict is Verdict.NON_COLORABLE_ODD_CYCLE
    assert classify(triangle).verdict is Verdict.NON_COLORABLE_T
    assert classify(BOW_TIE.graph).verdict is Verdict.BOW_TIE
    assert classify(B_PRIME.graph).verdict is Verdict.GRAPE_B_PRIME
    assert classify(path_graph(2)).verdict is Verdict.COLORABLE
    assert classify(cycle_graph(4)).verdict is Verdict.COLORABLE
    assert classify(SimpleGraph([], [0])).verdict is Verdict.COLORABLE


def test_disconnected_rejected():
    with pytest.raises(GraphError):
        classify(SimpleGraph([(0, 1), (2, 3)]))


def test_is_in_T_examples(triangle):
    trace = is_in_T(triangle)
    assert isinstance(trace, TTrace) and len(trace) == 0
    tail = triangle.with_edges([(2, 3), (3, 4)])
    assert is_in_T(tail) is not None
    assert is_in_T(cycle_graph(4)) is None
    assert is_in_T(triangle.with_edges([(2, 3)])) is None


def test_trace_replays_to_an_isomorphic_graph():
    for g in enumerate_cacti(10, 3):
        trace = is_in_T(g)
        if trace is None:
            continue
        h = replay_T(trace.steps)
        assert canonical_form(h) == canonical_form(g)
        assert h.relabel(trace.mapping) == g


def _grammar_closure(max_vertices):
    start = SimpleGraph([(0, 1), (1, 2), (0, 2)])
    seen = {canonical_form(start): start}
    frontier = [start]
    while frontier:
        nxt = []
        for g in frontier:
            for v in triangle_attach_points(g):
                options = []
                for length in range(2, max_vertices, 2):
                    if g.n + length <= max_vertices:
                        options.append(replay_T_step(g, v, "even-path", length))
                for length in range(1, max_vertices, 2):
                    if g.n + length + 2 <= max_vertices:
                        options.append(replay_T_step(g, v, "triangle-odd-path", length))
                for h in options:
                    key = canonical_form(h)
                    if key not in seen:
                        seen[key] = h
                        nxt.append(h)
        frontier = nxt
    return set(seen)


def replay_T_step(g, v, rule, length):
    base = max(g.vertices) + 1
    path = [v] + [base + j for j in range(length)]
    new = [(path[j], path[j + 1]) for j in range(length)]
    if rule == "triangle-odd-path":
        t = path[-1]
        new += [(t, base + length), (base + length, base + length + 1), (t, base + length + 1)]
    return g.with_edges(new)


@pytest.mark.slow
def test_recognizer_matches_grammar_up_to_10_vertices():
    generated = _grammar_closure(10)
    recognized = {canonical_form(g) for g in enumerate_cacti(12, 3) if g.n <= 10 and is_in_T(g) is not None}
    assert generated == recognized


def test_non_colorable_verdicts_are_sound_up_to_9_edges():
    for g in enumerate_cacti(9, 1):
        if not is_colorable(g):
            assert chromatic_index_irr(g, kmax=5) is None


def test_colorable_cacti_need_at_most_four_colors_up_to_9_edges():
    for g in enumerate_cacti(9, 1):
        if is_colorable(g):
            assert chromatic_index_irr(g, kmax=4) is not None


def test_template_matching():
    g = BOW_TIE.graph
    iso = match_template(g, BOW_TIE)
    assert iso is not None and g.relabel(iso) == g
    assert match_template(g.with_edges([(0, 99)]), BOW_TIE) is None
    shuffled = g.relabel({v: 100 - v for v in g.vertices})
    assert classify(shuffled).verdict is Verdict.BOW_TIE
