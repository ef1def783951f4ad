"""Exhaustive catalogs, named families and transcribed figure fixtures."""
from __future__ import annotations

import hashlib
from functools import lru_cache
from importlib import resources
from itertools import combinations, combinations_with_replacement

import numpy as np

from .classes import in_H
from .decomposition import is_prime
from .errors import DomainError
from .graph import Graph, OrderedGraph, canonical_form, canonical_graph
from .textio import parse_many, serialize_many


def _extensions(g):
    """Every graph obtained from ``g`` by adding vertex ``n`` with some neighbour set."""
    n = g.n
    base = np.zeros((n + 1, n + 1), dtype=bool)
    base[:n, :n] = g.adj
    for s in range(1 << n):
        a = base.copy()
        for v in range(n):
            if s >> v & 1:
                a[n, v] = a[v, n] = True
        yield Graph(a)


def _grow(level, keep):
    seen = {}
    for g in level:
        for h in _extensions(g):
            if not keep(h):
                continue
            key = canonical_form(h)
            if key not in seen:
                seen[key] = canonical_graph(h)
    return [seen[k] for k in sorted(seen)]


@lru_cache(maxsize=None)
def _all_level(n):
    if n == 0:
        return (Graph.empty(0),)
    return tuple(_grow(_all_level(n - 1), lambda h: True))


def all_graphs(n):
    """One canonical graph per isomorphism class on ``n`` vertices (n <= 8)."""
    if not 0 <= n <= 8:
        raise DomainError("all_graphs supports 0 <= n <= 8")
    return list(_all_level(n))


@lru_cache(maxsize=None)
def _h_level(n):
    if n <= 1:
        return (Graph.empty(n),)
    return tuple(_grow(_h_level(n - 1), in_H))


def members_of_H(n):
    """All isomorphism classes in H on ``n`` vertices, grown one vertex at a time
    (H is hereditary, so every member extends a smaller member)."""
    if not 0 <= n <= 9:
        raise DomainError("members_of_H supports 0 <= n <= 9")
    return list(_h_level(n))


def split_graphs(n):
    """One canonical graph per class of split graphs on ``n`` vertices."""
    seen = {}
    for c in range(n + 1):
        s = n - c
        subsets = range(1 << c)
        for choice in combinations_with_replacement(subsets, s):
            a = np.zeros((n, n), dtype=bool)
            a[:c, :c] = True
            np.fill_diagonal(a, False)
            for i, mask in enumerate(choice):
                for v in range(c):
                    if mask >> v & 1:
                        a[c + i, v] = a[v, c + i] = True
            g = Graph(a)
            key = canonical_form(g)
            if key not in seen:
                seen[key] = canonical_graph(g)
    return [seen[k] for k in sorted(seen)]


def enumerate_prime_in_H(n, method="grow"):
    """Prime members of H on ``n`` vertices, canonical and sorted.

    ``method``: ``"grow"`` (hereditary growth inside H), ``"all"`` (filter
    every graph, n <= 7) or ``"split"`` (filter split graphs only).
    """
    if not 0 <= n <= 8:
        raise DomainError("n must be at most 8")
    if method == "grow":
        pool = members_of_H(n)
    elif method == "all":
        if n > 7:
            raise DomainError("method 'all' is limited to n <= 7")
        pool = all_graphs(n)
    elif method == "split":
        pool = split_graphs(n)
    else:
        raise DomainError(f"unknown method {method!r}")
    found = [g for g in pool if (n >= 3 and is_prime(g) and in_H(g))]
    return sorted(found, key=canonical_form)


def catalog_text(graphs):
    return serialize_many(sorted(graphs, key=canonical_form))


def doubling_chain(start, steps):
    """Grow a prime member of H by two vertices per step: one adjacent to all
    current vertices and a new leaf at the neighbour ``u`` of the current leaf."""
    if not (is_prime(start) and in_H(start)):
        raise DomainError("start must be prime and in H")
    ones = np.flatnonzero(start.degrees == 1)
    if len(ones) == 0:
        raise DomainError("start has no vertex of degree one")
    leaf = int(ones[0])
    u = int(start.neighbours(leaf)[0])
    out = [start]
    g = start
    for _ in range(steps):
        n = g.n
        a = np.zeros((n + 2, n + 2), dtype=bool)
        a[:n, :n] = g.adj
        a[n, :n] = a[:n, n] = True
        a[n + 1, u] = a[u, n + 1] = True
        g = Graph(a)
        out.append(g)
    return out


def monotone_path(k) -> OrderedGraph:
    if k < 1:
        raise DomainError("k >= 1")
    return OrderedGraph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def fig2_family(k):
    """The construction of a path with ``k`` vertices, a leaf at each, plus an
    isolated vertex; labels follow the figure's numbering.

    Returns ``(graph, labels, order)``: vertex ``i`` of ``graph`` carries label
    ``labels[i]``; ``order`` is the displayed linear order as a vertex list
    (b-side by decreasing label, then a-side by increasing label).
    """
    if k < 1:
        raise DomainError("k >= 1")
    path_nums = [4 * (t // 2) + 2 + (t % 2) for t in range(k)]
    nums = sorted({1, *path_nums, *(p + 2 for p in path_nums)})
    idx = {x: i for i, x in enumerate(nums)}

    def side(x):
        return "a" if x != 1 and x % 4 in (1, 2) else "b"

    edges = set()
    for t, p in enumerate(path_nums):
        edges.add((p, p + 2))
        if t + 1 < k:
            edges.add((p, path_nums[t + 1]))
    a_side = [x for x in nums if side(x) == "a"]
    b_side = [x for x in nums if side(x) == "b"]
    edges |= set(combinations(a_side, 2))
    edges |= {(ai, bj) for ai in a_side for bj in b_side if ai >= bj + 4}
    g = Graph.from_edges(len(nums), [(idx[u], idx[v]) for u, v in edges])
    order = [idx[x] for x in sorted(b_side, reverse=True)] + [idx[x] for x in a_side]
    return g, tuple(nums), tuple(order)


def fig2_ordered(k) -> OrderedGraph:
    g, _, order = fig2_family(k)
    return OrderedGraph(Graph(g.adj[np.ix_(order, order)]))


# ------------------------------------------------------------------ fixtures


def _fixture_text(name):
    return resources.files("ehgraphs.fixtures").joinpath(name).read_text(encoding="utf-8")


def fixture_checksums():
    out = {}
    for line in _fixture_text("checksums.sha256").splitlines():
        digest, name = line.split()
        out[name] = digest
    return out


def load_fixture(name):
    """Parse a fixture after checking its sha256 against the recorded value."""
    text = _fixture_text(name)
    want = fixture_checksums().get(name)
    got = hashlib.sha256(text.encode("utf-8")).hexdigest()
    if want != got:
        raise DomainError(f"fixture {name} checksum mismatch")
    return parse_many(text)


def fig1_fixtures():
    return load_fixture("fig1.txt")


def fig2_fixture():
    return load_fixture("fig2.txt")[0]


def fig3_fixtures():
    return load_fixture("fig3.txt")


def fig4_fixtures():
    return load_fixture("fig4.txt")
