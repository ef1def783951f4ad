"""Seeded random hosts: plain, degree-capped, cographs, bull-free graphs and
substitution-built tournaments."""
from __future__ import annotations

import numpy as np

from .errors import DomainError
from .graph import Graph, OrderedGraph, Tournament


def _rng(seed):
    return np.random.default_rng(seed)


def random_graph(n, p, seed=0) -> Graph:
    rng = _rng(seed)
    a = np.triu(rng.random((n, n)) < p, 1)
    return Graph(a | a.T)


def random_ordered(n, p, seed=0) -> OrderedGraph:
    return OrderedGraph(random_graph(n, p, seed))


def random_tournament(n, seed=0) -> Tournament:
    rng = _rng(seed)
    up = np.triu(rng.random((n, n)) < 0.5, 1)
    low = np.triu(~up, 1).T
    return Tournament(up | low)


def random_capped(n, cap, seed=0, tries=None) -> Graph:
    """Random graph with every degree at most ``cap``."""
    rng = _rng(seed)
    a = np.zeros((n, n), dtype=bool)
    deg = np.zeros(n, dtype=int)
    for _ in range(tries if tries is not None else n * max(cap, 1)):
        u, v = rng.integers(0, n, size=2)
        if u != v and not a[u, v] and deg[u] < cap and deg[v] < cap:
            a[u, v] = a[v, u] = True
            deg[u] += 1
            deg[v] += 1
    return Graph(a)


def _split(rng, items, k):
    """Split ``items`` into ``k`` non-empty groups at random."""
    items = list(items)
    cuts = sorted(rng.choice(np.arange(1, len(items)), size=k - 1, replace=False).tolist())
    bounds = [0, *cuts, len(items)]
    return [items[bounds[i]:bounds[i + 1]] for i in range(k)]


def random_cograph(n, seed=0, p_join=0.5) -> Graph:
    """Random P4-free graph: recursive disjoint unions and joins."""
    rng = _rng(seed)
    a = np.zeros((n, n), dtype=bool)

    def build(vs):
        if len(vs) <= 1:
            return
        left, right = _split(rng, vs, 2)
        if rng.random() < p_join:
            a[np.ix_(left, right)] = True
            a[np.ix_(right, left)] = True
        build(left)
        build(right)

    build(list(rng.permutation(n)))
    return Graph(a)


def _piece(rng, k):
    """A small bull-free graph: cograph, bipartite or complement of bipartite."""
    kind = rng.integers(0, 3)
    if kind == 0:
        return random_cograph(k, int(rng.integers(1 << 31))).adj
    side = rng.random(k) < 0.5
    cross = np.triu(rng.random((k, k)) < 0.5, 1)
    cross = (cross | cross.T) & (side[:, None] != side[None, :])
    if kind == 1:
        return cross
    same = (side[:, None] == side[None, :]) & ~np.eye(k, dtype=bool)
    return same | cross


def random_bull_free(n, seed=0, leaf_size=8) -> Graph:
    """Random bull-free graph on ``n`` vertices.

    Bull-free graphs are closed under substitution (the bull is prime), so
    substituting random bull-free pieces into each other stays bull-free.
    Vertex labels are shuffled at the end.
    """
    if n < 1:
        raise DomainError("n >= 1")
    rng = _rng(seed)
    a = np.zeros((n, n), dtype=bool)

    def build(vs):
        m = len(vs)
        if m == 1:
            return
        if m <= leaf_size:
            a[np.ix_(vs, vs)] = _piece(rng, m)
            return
        k = int(rng.integers(2, min(leaf_size, m) + 1))
        outer = _piece(rng, k)
        groups = _split(rng, vs, k)
        for i in range(k):
            for j in range(k):
                if outer[i, j]:
                    a[np.ix_(groups[i], groups[j])] = True
        for grp in groups:
            build(grp)

    build(list(range(n)))
    perm = rng.permutation(n)
    return Graph(a[np.ix_(perm, perm)])


def random_small_pieces_tournament(n, seed=0, piece=4) -> Tournament:
    """Tournament built by substituting random tournaments on at most ``piece``
    vertices.  It has no prime subtournament on more than ``piece`` vertices."""
    if n < 1:
        raise DomainError("n >= 1")
    rng = _rng(seed)
    out = np.zeros((n, n), dtype=bool)

    def build(vs):
        m = len(vs)
        if m == 1:
            return
        k = int(rng.integers(2, min(piece, m) + 1))
        groups = _split(rng, vs, k)
        small = random_tournament(k, int(rng.integers(1 << 31))).out
        for i in range(k):
            for j in range(k):
                if small[i, j]:
                    out[np.ix_(groups[i], groups[j])] = True
        for grp in groups:
            build(grp)

    build(list(rng.permutation(n)))
    return Tournament(out)
