import pytest

from liec.decomp import (
    ExitKind,
    berries,
    close,
    close_berry,
    closing_edges,
    docking_vertices,
    end_grape_at,
    find_end_grapes,
    grape_root,
    make_berry,
    open_graph,
    open_local,
    singular_kind,
    tail,
)
from liec.generate import canonical_form, enumerate_cacti
from liec.graph import GraphError, SimpleGraph, cycle_count, cycle_graph, path_graph
from liec.templates import A4_OPEN, A_OPEN_TWO_LEGS, match_template

TWO_TRIANGLES = SimpleGraph([(0, 1), (0, 2), (1, 2), (0, 3), (0, 4), (3, 4)])


def two_end_grapes():
    """A 4-cycle 10..13 carrying: a two-triangle grape hanging by an edge at 10,
    a triangle plus pendant edge on a second cycle through 12, and a vertex 60
    whose triangle sits between two cyclic parts."""
    es = [(10, 11), (11, 12), (12, 13), (10, 13)]
    es += [(10, 20), (20, 21), (20, 22), (21, 22), (20, 23), (20, 24), (23, 24)]
    es += [(12, 30), (30, 31), (31, 32), (12, 32), (30, 33), (30, 34), (33, 34), (30, 35)]
    es += [(13, 60), (60, 61), (60, 62), (61, 62), (60, 70), (70, 71), (70, 72), (71, 72)]
    return SimpleGraph(es)


def test_grape_root():
    assert grape_root(TWO_TRIANGLES) == 0
    assert grape_root(two_end_grapes()) is None
    assert grape_root(cycle_graph(5).with_edges([(3, 9)])) == 0
    with pytest.raises(GraphError):
        grape_root(path_graph(3))


def test_berries_of_grapes():
    bs = berries(TWO_TRIANGLES, 0)
    assert len(bs) == 2 and all(b.unicyclic for b in bs)
    g = SimpleGraph([(0, 1), (0, 2), (1, 2), (0, 3), (3, 4)])
    kinds = sorted(b.unicyclic for b in berries(g, 0))
    assert kinds == [False, True]


def test_berries_partition_edges():
    for g in enumerate_cacti(10, 6):
        if cycle_count(g) < 2:
            continue
        u = grape_root(g)
        if u is None:
            continue
        bs = berries(g, u)
        assert sum(b.graph.m for b in bs) == g.m
        assert set().union(*(b.graph.edges_set for b in bs)) == g.edges_set


def test_end_grapes_and_exits():
    g = two_end_grapes()
    egs = {eg.u: eg for eg in find_end_grapes(g)}
    assert egs[20].exit_kind is ExitKind.SINGLE
    assert egs[20].exits == [(10, 20)]
    assert egs[30].exit_kind is ExitKind.DOUBLE
    assert sorted(egs[30].exit_neighbors) == [12, 31]
    kinds = sorted(b.unicyclic for b in egs[30].berries)
    assert kinds == [False, True]
    # the triangle at 60 has cyclic parts on two sides
    assert 60 not in egs
    assert end_grape_at(g, 60) is None


def test_two_triangles_joined_by_a_path():
    g = SimpleGraph([(0, 1), (0, 2), (1, 2), (2, 3), (3, 4), (4, 5), (4, 6), (5, 6)])
    roots = sorted(eg.u for eg in find_end_grapes(g))
    assert roots == [2, 4]


def test_end_grape_descriptor_is_consistent():
    for g in enumerate_cacti(10, 7):
        if cycle_count(g) < 2 or grape_root(g) is not None:
            continue
        for eg in find_end_grapes(g):
            assert eg.root_component.m + eg.grape.m == g.m
            shared = set(eg.root_component.vertices) & set(eg.grape.vertices)
            assert shared == {eg.u}
            assert len(eg.exits) in (1, 2)
            if len(eg.exits) == 2:
                (a, b) = eg.exit_neighbors
                # both exits lie on one cycle of the root component
                assert any(a in c and b in c and eg.u in c for c in _cycles(eg.root_component))


def _cycles(g):
    from liec.graph import cycle_list

    return cycle_list(g)


def test_find_end_grapes_errors():
    with pytest.raises(GraphError):
        find_end_grapes(TWO_TRIANGLES)
    with pytest.raises(GraphError):
        find_end_grapes(cycle_graph(4))


def test_tails():
    b = make_berry(SimpleGraph([(0, 1), (0, 2), (1, 2), (2, 3), (3, 4)]), 0)
    t, x = tail(b, 1)
    assert x == 1 and t.m == 0
    t, _ = tail(b, 2)
    assert t.edges == ((2, 3), (3, 4))
    acyclic = make_berry(SimpleGraph([(0, 1), (1, 2), (2, 3), (1, 4)]), 0)
    t, _ = tail(acyclic, 2)
    assert t.edges == ((2, 3),)
    with pytest.raises(GraphError):
        tail(b, 0)


def _berry_with_tail(shape):
    """A triangle 0,1,2 rooted at 0 whose vertex 1 carries ``shape`` rooted at its root."""
    tg = shape.graph
    r = shape.roles["u"]
    mp = {r: 1}
    for x in tg.vertices:
        if x != r:
            mp[x] = 10 + x
    return make_berry(SimpleGraph([(0, 1), (0, 2), (1, 2)] + [(mp[a], mp[b]) for a, b in tg.edges]), 0)


def test_docking_vertices():
    plain = make_berry(SimpleGraph([(0, 1), (0, 2), (1, 2)]), 0)
    assert docking_vertices(plain) == set()
    b = _berry_with_tail(A_OPEN_TWO_LEGS)
    assert (1, 1) in docking_vertices(b)
    b4 = _berry_with_tail(A4_OPEN)
    dv = docking_vertices(b4)
    assert (1, 4) in dv
    assert any(i == 1 and x != 1 for x, i in dv)


def test_closing_restores_a_triangle_shape():
    b = _berry_with_tail(A_OPEN_TWO_LEGS)
    es = closing_edges(b, 1, 1)
    assert len(es) == 2
    closed = close_berry(b, {(1, 1)})
    assert cycle_count(closed) == 3
    with pytest.raises(GraphError):
        closing_edges(b, 2, 1)


def _a_graph(kind_triangles, p2=0, b7=0, double=False):
    """An end-grape at 0 with the given berries, attached to a 4-cycle (double exit) or a triangle by an edge."""
    es = []
    nxt = 100
    for _ in range(kind_triangles):
        es += [(0, nxt), (0, nxt + 1), (nxt, nxt + 1)]
        nxt += 2
    for _ in range(p2):
        es += [(0, nxt), (nxt, nxt + 1)]
        nxt += 2
    for _ in range(b7):
        es += [(0, nxt), (nxt, nxt + 1), (nxt + 1, nxt + 2), (nxt, nxt + 3), (nxt + 3, nxt + 4)]
        nxt += 5
    if double:
        es += [(0, 1), (1, 2), (2, 3), (0, 3), (2, 4), (2, 5), (4, 5)]
    else:
        es += [(0, 1), (1, 2), (1, 3), (2, 3), (2, 4)]
    return SimpleGraph(es)


@pytest.mark.parametrize(
    "args, kind",
    [
        ((2, 0, 0, False), 1),
        ((2, 0, 0, True), 2),
        ((1, 1, 0, True), 3),
        ((1, 0, 1, True), 4),
        ((2, 0, 1, True), 5),
        ((1, 0, 2, True), 6),
        ((1, 0, 0, False), None),
    ],
)
def test_singular_kinds(args, kind):
    g = _a_graph(*args)
    (eg,) = [e for e in find_end_grapes(g) if e.u == 0]
    assert singular_kind(eg) == kind


def test_open_and_close_are_inverse():
    g = _a_graph(2, 0, 0, False)
    op_g, op = open_graph(g)
    assert set(op_g.vertices) == set(g.vertices)
    assert cycle_count(op_g) == cycle_count(g) - 2
    assert close(op_g, op) == g
    # the opened triangles now form the two-legged shape at 0
    sub = op_g.edge_subgraph([e for e in op_g.edges if 0 in e or min(e) >= 100])
    assert match_template(sub.induced({0} | {x for x in sub.vertices if x >= 100}), A_OPEN_TWO_LEGS, root=0)


def test_open_local_only_touches_the_given_grape():
    g = SimpleGraph(
        [(0, 100), (0, 101), (100, 101), (0, 102), (0, 103), (102, 103), (0, 1), (1, 2), (2, 3), (3, 200),
         (200, 201), (200, 202), (201, 202), (200, 203), (200, 204), (203, 204)]
    )
    full, op = open_graph(g)
    assert sorted(op.removed) == [0, 200]
    local, op_l = open_local(g, SimpleGraph([(0, 100), (0, 101), (100, 101), (0, 102), (0, 103), (102, 103)]))
    assert sorted(op_l.removed) == [0]
    assert cycle_count(local) == cycle_count(g) - 2


def test_opening_leaves_no_small_singular_end_grapes():
    for g in enumerate_cacti(11, 9):
        if cycle_count(g) < 2 or grape_root(g) is not None:
            continue
        if not any(singular_kind(eg) in (1, 2, 3) for eg in find_end_grapes(g)):
            continue
        op_g, op = open_graph(g)
        assert close(op_g, op) == g
        if cycle_count(op_g) >= 2 and grape_root(op_g) is None:
            assert not any(singular_kind(eg) in (1, 2, 3) for eg in find_end_grapes(op_g))
        assert canonical_form(close(op_g, op)) == canonical_form(g)
