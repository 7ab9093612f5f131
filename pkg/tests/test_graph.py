import pytest

from liec.coloring import is_liec
from liec.generate import enumerate_cacti, gen_random_cactus
from liec.graph import (
    GraphError,
    SimpleGraph,
    build_graph,
    cycle_graph,
    cycle_list,
    extend_through_trim,
    is_cactus,
    is_connected,
    path_graph,
    trim,
)
from liec.oracle import find_liec


def test_build_path_and_triangle():
    p = build_graph([(0, 1), (1, 2)])
    assert p.n == 3 and p.m == 2 and p.degree(1) == 2
    k3 = build_graph([(0, 1), (1, 2), (2, 0)])
    assert k3.edges == ((0, 1), (0, 2), (1, 2))


def test_duplicate_edges_collapse_with_flag():
    g = build_graph([(0, 1), (1, 0)])
    assert g.m == 1
    assert g.duplicates == 1


def test_loop_rejected():
    with pytest.raises(GraphError):
        build_graph([(3, 3)])


def test_single_vertex_graph():
    g = SimpleGraph([], [0])
    assert g.n == 1 and g.m == 0 and is_connected(g)


def test_deleting_edges_drops_isolated_vertices():
    g = path_graph(2).without_edges([(1, 2)])
    assert g.vertices == (0, 1)


def test_unknown_vertex():
    with pytest.raises(GraphError):
        path_graph(2).neighbors(7)


@pytest.mark.parametrize(
    "edges, expected",
    [
        ([(0, 1), (1, 2), (0, 2)], True),
        ([(a, b) for a in range(4) for b in range(a + 1, 4)], False),
        ([(0, 1), (1, 2), (0, 2), (0, 3), (3, 4), (0, 4)], True),
        ([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)], False),
    ],
)
def test_is_cactus(edges, expected):
    assert is_cactus(SimpleGraph(edges)) is expected


def test_is_cactus_requires_connected():
    with pytest.raises(GraphError):
        is_cactus(SimpleGraph([(0, 1), (2, 3)]))


def test_cycle_list():
    assert cycle_list(path_graph(4)) == []
    (c,) = cycle_list(cycle_graph(5))
    assert sorted(c) == [0, 1, 2, 3, 4]


def test_cycle_count_equals_rank_on_all_small_cacti():
    for g in enumerate_cacti(8):
        if g.m:
            assert len(cycle_list(g)) == g.m - g.n + 1


def test_five_cycle_cactus():
    g = gen_random_cactus(16, 5, seed=3)
    cycles = cycle_list(g)
    assert len(cycles) == 5 == g.m - g.n + 1
    seen = set()
    for c in cycles:
        es = {tuple(sorted((c[i], c[(i + 1) % len(c)]))) for i in range(len(c))}
        assert not es & seen
        seen |= es


def test_cycle_list_rejects_non_cactus():
    with pytest.raises(GraphError):
        cycle_list(SimpleGraph([(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]))


# trimming -------------------------------------------------------------------

def _triangle_with_tail(length):
    es = [(0, 1), (1, 2), (0, 2)]
    prev = 0
    for i in range(length):
        es.append((prev, 10 + i))
        prev = 10 + i
    return SimpleGraph(es)


def test_trim_pendant_path_five_to_one():
    g = _triangle_with_tail(5)
    t, trace = trim(g)
    assert len(trace) == 2
    assert t.m == 4
    assert all(s.kind == "pendant-path-shorten" for s in trace)


def test_trim_ear_seven_to_three():
    # an 8-cycle whose chord-free side between 1 and 2 is an ear of length 7
    ear = [1, 20, 21, 22, 23, 24, 25, 2]
    es = [(ear[i], ear[i + 1]) for i in range(7)] + [(1, 2), (1, 30), (2, 31)]
    g = SimpleGraph(es)
    assert is_cactus(g)
    t, trace = trim(g)
    assert [s.kind for s in trace] == ["ear-shorten", "ear-shorten"]
    assert t.m == g.m - 4
    assert len(cycle_list(t)[0]) == 4


def test_trim_fixpoint():
    g = _triangle_with_tail(1)
    t, trace = trim(g)
    assert t == g and len(trace) == 0


def test_trim_idempotent_and_preserves_cactus():
    for seed in range(40):
        g = gen_random_cactus(14, seed % 4, seed=seed)
        t, _ = trim(g)
        t2, trace2 = trim(t)
        assert t2 == t and len(trace2) == 0
        assert is_connected(t) and is_cactus(t)


def test_extend_through_trim_needs_three_colors():
    g = _triangle_with_tail(3)
    t, trace = trim(g)
    with pytest.raises(GraphError):
        extend_through_trim({}, trace, 2)


def test_extend_through_trim_identity_on_empty_trace():
    col = {(0, 1): 0}
    t, trace = trim(path_graph(1))
    assert extend_through_trim(col, trace, 3) == col


def test_extend_through_trim_random_cacti():
    checked = 0
    for seed in range(60):
        g = gen_random_cactus(13, seed % 3, seed=seed)
        t, trace = trim(g)
        if not len(trace):
            continue
        col = find_liec(t, 3)
        if col is None:
            continue
        out = extend_through_trim(col, trace, 3)
        assert is_liec(g, out)
        checked += 1
    assert checked > 10
