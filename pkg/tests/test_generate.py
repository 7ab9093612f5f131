import itertools
import random

import networkx as nx
import pytest

from liec.classify import Verdict, classify, replay_T
from liec.generate import (
    are_isomorphic_cacti,
    canonical_form,
    canonical_form_general,
    connected_graphs,
    enumerate_cacti,
    enumerate_trees,
    gen_random_cactus,
    gen_T,
)
from liec.graph import GraphError, SimpleGraph, cycle_count, is_cactus, is_connected, is_tree


def _nx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    return h


def _brute_force_cacti(max_edges):
    """Second generator: grow by any new edge (pendant or chord), dedup with networkx."""
    level = [SimpleGraph([(0, 1)])]
    found = list(level)
    for _ in range(max_edges - 1):
        nxt = []
        for g in level:
            cands = [g.with_edges([(v, max(g.vertices) + 1)]) for v in g.vertices]
            cands += [g.with_edges([(u, v)]) for u, v in itertools.combinations(g.vertices, 2) if not g.has_edge(u, v)]
            for h in cands:
                if not is_cactus(h):
                    continue
                hn = _nx(h)
                if any(nx.is_isomorphic(hn, _nx(o)) for o in nxt if o.m == h.m and o.n == h.n):
                    continue
                nxt.append(h)
        level = nxt
        found += nxt
    return found


def test_three_edges():
    gs = list(enumerate_cacti(3, 1))
    assert len(gs) == 5
    kinds = sorted((g.m, g.n, g.max_degree()) for g in gs)
    # P1, P2, P3, K3, K1,3
    assert kinds == [(1, 2, 1), (2, 3, 2), (3, 3, 2), (3, 4, 2), (3, 4, 3)]


def test_counts_match_second_generator():
    ours = {}
    for g in enumerate_cacti(7, 1):
        ours[g.m] = ours.get(g.m, 0) + 1
    theirs = {}
    for g in _brute_force_cacti(7):
        theirs[g.m] = theirs.get(g.m, 0) + 1
    assert ours == theirs


def test_enumeration_is_isomorphism_free():
    gs = list(enumerate_cacti(7, 1))
    for g, h in itertools.combinations(gs, 2):
        if (g.n, g.m, sorted(g.degrees().values())) == (h.n, h.m, sorted(h.degrees().values())):
            assert not nx.is_isomorphic(_nx(g), _nx(h))
    forms = [canonical_form(g) for g in gs]
    assert len(set(forms)) == len(forms)


def test_all_enumerated_are_connected_cacti():
    for g in enumerate_cacti(9, 1):
        assert is_connected(g) and is_cactus(g)


def test_trees_are_the_acyclic_cacti():
    trees = list(enumerate_trees(8, 1))
    assert all(is_tree(t) for t in trees)
    assert len(trees) == sum(1 for g in enumerate_cacti(8, 1) if cycle_count(g) == 0)


def test_canonical_forms_agree_with_networkx():
    rng = random.Random(2)
    for _ in range(60):
        c = rng.randint(0, 2)
        g = gen_random_cactus(rng.randint(2 * c + 1, 9), c, seed=rng.randrange(10**6))
        perm = list(g.vertices)
        rng.shuffle(perm)
        h = g.relabel(dict(zip(g.vertices, perm)))
        assert canonical_form(g) == canonical_form(h)
        assert canonical_form_general(g) == canonical_form_general(h)
        assert are_isomorphic_cacti(g, h)


def test_random_cactus_small_tree():
    g = gen_random_cactus(5, 0, seed=1)
    assert is_tree(g) and g.n == 5


def test_random_cactus_deterministic():
    assert gen_random_cactus(6, 2, seed=7) == gen_random_cactus(6, 2, seed=7)


def test_random_cactus_thousand_samples():
    rng = random.Random(0)
    for i in range(1000):
        c = rng.randint(0, 4)
        n = rng.randint(2 * c + 1, 2 * c + 12)
        g = gen_random_cactus(n, c, seed=i)
        assert is_cactus(g) and is_connected(g)
        assert g.n == n and cycle_count(g) == c


def test_random_cactus_infeasible():
    with pytest.raises(GraphError):
        gen_random_cactus(4, 2)


def test_gen_T_rules():
    g, trace = gen_T(0, seed=1)
    assert g == SimpleGraph([(0, 1), (1, 2), (0, 2)]) and trace == []
    g, trace = gen_T(1, seed=3, rules=["even-path"])
    assert trace[0][0] == "even-path" and g.m == 3 + trace[0][2] and cycle_count(g) == 1
    g, trace = gen_T(1, seed=3, rules=["triangle-odd-path"])
    assert cycle_count(g) == 2 and trace[0][2] % 2 == 1


@pytest.mark.parametrize("seed", range(25))
def test_gen_T_members_classified_and_replayable(seed):
    g, trace = gen_T(seed % 5, seed=seed)
    assert classify(g).verdict is Verdict.NON_COLORABLE_T
    assert replay_T(trace) == g


def test_connected_graphs_counts():
    # OEIS A001349: connected graphs on n vertices
    counts = {}
    for g in connected_graphs(6):
        counts[g.n] = counts.get(g.n, 0) + 1
    assert counts == {1: 1, 2: 1, 3: 2, 4: 6, 5: 21, 6: 112}
