from hypothesis import given, settings
from hypothesis import strategies as st

from liec.classify import classify
from liec.coloring import is_liec, permute_colors
from liec.generate import gen_random_cactus
from liec.graph import SimpleGraph, cycle_count, is_cactus, is_connected
from liec.io import coloring_from_json, coloring_to_json, format_edge_list, parse_edge_list
from liec.reduction import color_cactus


@st.composite
def cacti(draw, max_cycles=6):
    c = draw(st.integers(0, max_cycles))
    n = draw(st.integers(max(2, 2 * c + 1), 2 * c + 14))
    seed = draw(st.integers(0, 2**32 - 1))
    return gen_random_cactus(n, c, seed), n, c


def relabel(g, perm):
    return SimpleGraph([(perm[u], perm[v]) for u, v in g.edges])


@settings(max_examples=200, deadline=None)
@given(cacti())
def test_generator_shape(data):
    g, n, c = data
    assert g.n == n and cycle_count(g) == c
    assert is_cactus(g) and is_connected(g)


@settings(max_examples=60, deadline=None)
@given(cacti(), st.randoms(use_true_random=False))
def test_relabel_invariance(data, rnd):
    g, _, _ = data
    labels = list(range(1000, 1000 + g.n))
    rnd.shuffle(labels)
    perm = dict(zip(g.vertices, labels))
    h = relabel(g, perm)
    assert classify(g).verdict is classify(h).verdict
    r = color_cactus(h, fallback=False)
    if r.verdict.colorable:
        assert is_liec(h, r.coloring)
        back = {(min(perm[u], perm[v]), max(perm[u], perm[v])): c for (u, v), c in color_cactus(g, fallback=False).coloring.items()}
        assert is_liec(h, back)


@settings(max_examples=60, deadline=None)
@given(cacti(), st.permutations([0, 1, 2]))
def test_colors_can_be_renamed(data, p):
    g, _, _ = data
    r = color_cactus(g, fallback=False)
    if r.coloring is not None:
        assert is_liec(g, permute_colors(r.coloring, tuple(p) + (3,)))


@settings(max_examples=100, deadline=None)
@given(cacti())
def test_serialization_round_trip(data):
    g, _, _ = data
    assert parse_edge_list(format_edge_list(g)).edges == g.edges
    r = color_cactus(g, fallback=False)
    if r.coloring is not None:
        col, _ = coloring_from_json(coloring_to_json(r.coloring))
        assert col == r.coloring
