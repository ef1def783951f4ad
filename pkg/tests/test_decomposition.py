from itertools import combinations

import numpy as np
from hypothesis import given, settings, strategies as st

from ehgraphs import Graph, OrderedGraph
from ehgraphs.decomposition import cograph_clique_and_stable, find_module, is_cograph, is_prime, quotient
from ehgraphs.generators import random_cograph, random_graph
from ehgraphs.graph import bull, cycle, path


def brute_min_module(g, interval=False):
    n = g.n
    for size in range(2, n):
        for s in combinations(range(n), size):
            if interval and s[-1] - s[0] + 1 != size:
                continue
            ss = set(s)
            if all(len({bool(g.adj[w, v]) for v in s}) == 1 for w in range(n) if w not in ss):
                return s
    return None


def brute_has_p4(g):
    p4 = path(4)
    for s in combinations(range(g.n), 4):
        sub = g.induced(s)
        if sorted(sub.degrees.tolist()) == [1, 1, 2, 2] and sub.num_edges() == 3:
            return True
    return False


def test_known_primes():
    assert is_prime(path(4))
    assert is_prime(bull())
    assert is_prime(cycle(5))
    assert not is_prime(path(3))
    assert not is_prime(cycle(4))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 10_000), st.integers(3, 7))
def test_find_module_matches_brute_force(seed, n):
    g = random_graph(n, 0.5, seed=seed)
    m = find_module(g)
    b = brute_min_module(g)
    assert (m is None) == (b is None)
    if m is not None:
        assert m.verify(g)
        assert m.vertices == b


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(3, 7))
def test_ordered_modules_are_intervals(seed, n):
    g = OrderedGraph(random_graph(n, 0.5, seed=seed))
    m = find_module(g)
    b = brute_min_module(g, interval=True)
    assert (m is None) == (b is None)
    if m is not None:
        assert m.vertices == b


def test_ordered_prime_but_unordered_not():
    # the monotone path on 3 vertices: its only module {0, 2} is not an interval
    h = OrderedGraph.from_edges(3, [(0, 1), (1, 2)])
    assert find_module(h) is None
    assert find_module(h.graph) is not None


def test_quotient_collapses_to_least():
    g = Graph.from_edges(4, [(0, 1), (0, 2), (0, 3)])
    q, kept = quotient(g, (1, 2, 3))
    assert kept == [0, 1]
    assert q.n == 2 and q.num_edges() == 1


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 8))
def test_is_cograph_matches_p4_search(seed, n):
    g = random_graph(n, 0.5, seed=seed)
    assert is_cograph(g) == (not brute_has_p4(g))


def test_random_cographs_and_extremes():
    for s in range(10):
        g = random_cograph(30, seed=s)
        assert is_cograph(g)
        clique, stable = cograph_clique_and_stable(g)
        a = g.adj
        assert all(a[u, v] for u, v in combinations(clique, 2))
        assert not any(a[u, v] for u, v in combinations(stable, 2))


def test_cograph_extremes_are_maximum():
    for s in range(15):
        g = random_cograph(9, seed=s)
        clique, stable = cograph_clique_and_stable(g)
        best_c = best_s = 0
        for mask in range(1 << 9):
            vs = [v for v in range(9) if mask >> v & 1]
            sub = g.adj[np.ix_(vs, vs)]
            k = len(vs)
            if sub.sum() == k * (k - 1):
                best_c = max(best_c, k)
            if sub.sum() == 0:
                best_s = max(best_s, k)
        assert (len(clique), len(stable)) == (best_c, best_s)
