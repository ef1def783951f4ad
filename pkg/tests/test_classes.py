from itertools import combinations

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ehgraphs import DomainError, Graph, OrderedGraph
from ehgraphs import classes
from ehgraphs.classes import AddLeaf, Base, Substitute, replay
from ehgraphs.enumeration import all_graphs, fig2_ordered
from ehgraphs.generators import random_bull_free, random_cograph, random_graph
from ehgraphs.graph import bull, complement, cycle, path, star

from test_decomposition import brute_min_module


def prime_subgraphs(g):
    for k in range(3, g.n + 1):
        for s in combinations(range(g.n), k):
            sub = g.induced(s)
            if brute_min_module(sub, interval=isinstance(sub, OrderedGraph)) is None:
                yield sub


def j_oracle(g):
    return all((sub.degrees <= 1).any() for sub in prime_subgraphs(g))


def h_oracle(g):
    return all((sub.degrees == 1).any() and (sub.degrees == sub.n - 2).any() for sub in prime_subgraphs(g))


def k_oracle(g):
    return all(sub.degrees[0] <= 1 or sub.degrees[-1] <= 1 for sub in prime_subgraphs(g))


def test_small_named_graphs():
    assert classes.in_H(path(4))
    assert classes.in_H(bull())
    assert classes.in_J(star(4))
    assert not classes.in_J(cycle(5))
    assert not classes.in_H(cycle(5))
    assert classes.in_J(path(6)) and not classes.in_H(path(6))


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 7))
def test_J_and_H_match_oracles(seed, n):
    g = random_graph(n, float(np.random.default_rng(seed).uniform(0.2, 0.8)), seed=seed)
    assert classes.in_J(g) == j_oracle(g)
    assert classes.in_H(g) == h_oracle(g)
    assert classes.in_H(g, method="J") == classes.in_H(g)


@settings(max_examples=60, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 7))
def test_K_matches_oracle(seed, n):
    g = OrderedGraph(random_graph(n, 0.35, seed=seed))
    assert classes.in_K(g) == k_oracle(g)
    assert classes.in_K(g) == classes.in_K_characterization(g)


def test_cographs_are_in_H():
    for s in range(10):
        assert classes.in_H(random_cograph(25, seed=s))


def test_build_sequence_replays():
    for s in range(30):
        g = random_graph(7, 0.4, seed=s)
        seq = classes.build_J(g)
        if seq is None:
            continue
        assert replay(seq, "J") == g
        seq_h = classes.build_H(g)
        if seq_h is not None:
            assert replay(seq_h, "H") == g


def test_replay_rejects_bad_steps():
    # the last leaf of P5 hangs off a vertex of degree 1 among 4
    seq = AddLeaf(AddLeaf(AddLeaf(AddLeaf(Base(0), 1, 0), 2, 1), 3, 2), 4, 3)
    assert replay(seq, "J").num_edges() == 4
    assert replay(seq.inner, "H") == path(4)
    with pytest.raises(DomainError):
        replay(seq, "H")
    with pytest.raises(DomainError):
        replay(Substitute(Base(0), 1, Base(1)), "J")


def test_order_into_K():
    for s in range(20):
        g = random_bull_free(9, seed=s)
        if not classes.in_J(g):
            continue
        og, order = classes.order_into_K(g)
        assert sorted(order) == list(range(9))
        assert classes.in_K(og)
    with pytest.raises(DomainError):
        classes.order_into_K(cycle(5))


def test_L_definitions_agree_away_from_fixture_e():
    agree = 0
    for n in range(1, 6):
        for g in all_graphs(n):
            o = OrderedGraph(g)
            assert classes.in_L(o) or not classes.in_L_constructive(o)
            agree += classes.in_L(o) == classes.in_L_constructive(o)
    assert agree > 0
    assert classes.in_L(fig2_ordered(4))


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 8))
def test_split_recognizers_agree(seed, n):
    g = random_graph(n, 0.5, seed=seed)
    brute = False
    for c in range(1 << n):
        clique = [v for v in range(n) if c >> v & 1]
        stable = [v for v in range(n) if not c >> v & 1]
        if all(g.adj[u, v] for u, v in combinations(clique, 2)) and not any(
            g.adj[u, v] for u, v in combinations(stable, 2)
        ):
            brute = True
            break
    assert classes.is_split(g) == brute == classes.is_split_degrees(g)


def test_complement_symmetry_of_H():
    for s in range(20):
        g = random_graph(7, 0.5, seed=s)
        assert classes.in_H(g) == classes.in_H(complement(g))
