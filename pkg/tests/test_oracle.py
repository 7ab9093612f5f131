import itertools

import pytest

import liec.oracle as oracle
from liec.coloring import AliecStatus, is_aliec, is_liec
from liec.generate import connected_graphs, enumerate_cacti
from liec.graph import GraphError, SimpleGraph, cycle_graph, path_graph, star_graph
from liec.oracle import (
    SearchBudget,
    SearchExhausted,
    chromatic_index_irr,
    enumerate_liecs,
    find_aliec,
    find_liec,
)
from liec.templates import B_PRIME, BOW_TIE


def brute_force_liecs(g, k):
    for colors in itertools.product(range(k), repeat=g.m):
        col = dict(zip(g.edges, colors))
        if is_liec(g, col):
            yield col


def test_find_liec_examples(triangle):
    assert find_liec(path_graph(2), 1) is not None
    assert find_liec(triangle, 3) is None
    assert find_liec(cycle_graph(4), 1) is None
    col = find_liec(cycle_graph(4), 2)
    assert col is not None and is_liec(cycle_graph(4), col)


def test_chromatic_index_examples():
    assert chromatic_index_irr(star_graph(3)) == 1
    assert chromatic_index_irr(BOW_TIE.graph) == 4
    assert chromatic_index_irr(B_PRIME.graph) == 3
    assert chromatic_index_irr(SimpleGraph([], [0])) == 0


def test_chromatic_index_needs_connected():
    with pytest.raises(GraphError):
        chromatic_index_irr(SimpleGraph([(0, 1), (2, 3)]))


def test_enumerate_small(triangle):
    for k in range(1, 5):
        assert list(enumerate_liecs(triangle, k)) == []
    assert len(list(enumerate_liecs(path_graph(2), 1))) == 1


def test_enumeration_matches_brute_force():
    graphs = [g for g in enumerate_cacti(6) if g.m >= 2] + [SimpleGraph([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])]
    for g in graphs:
        for k in (2, 3):
            got = sorted(tuple(sorted(c.items())) for c in enumerate_liecs(g, k))
            want = sorted(tuple(sorted(c.items())) for c in brute_force_liecs(g, k))
            assert got == want, g


def test_up_to_permutation_counts():
    g = cycle_graph(6)
    full = list(enumerate_liecs(g, 3))
    reps = list(enumerate_liecs(g, 3, up_to_permutation=True))
    assert 0 < len(reps) < len(full)
    # a class of colorings using j of the 3 colors has 3!/(3-j)! members
    size = {1: 3, 2: 6, 3: 6}
    assert sum(size[len(set(c.values()))] for c in reps) == len(full)


def test_monotone_in_k():
    for g in itertools.islice(connected_graphs(5, 3), 30):
        found = [find_liec(g, k) is not None for k in range(1, 5)]
        assert found == sorted(found)


def test_pruning_switch_gives_same_verdicts(monkeypatch):
    graphs = [g for g in enumerate_cacti(9) if g.m >= 7][:60]
    with_pruning = [find_liec(g, 2) is not None for g in graphs]
    monkeypatch.setattr(oracle, "PRUNING", False)
    without = [find_liec(g, 2) is not None for g in graphs]
    assert with_pruning == without


def test_budget_exhaustion_is_explicit():
    g = BOW_TIE.graph
    with pytest.raises(SearchExhausted):
        find_liec(g, 3, SearchBudget(node_limit=5))


def test_find_aliec():
    col = find_aliec(path_graph(1), 0)
    assert is_aliec(path_graph(1), (0, 1), col) is AliecStatus.PROPER_ALIEC
    p3 = path_graph(3)
    col = find_aliec(p3, 0)
    assert is_aliec(p3, (0, 1), col) in (AliecStatus.LIEC, AliecStatus.PROPER_ALIEC)
    with pytest.raises(GraphError):
        find_aliec(path_graph(2), 1)
