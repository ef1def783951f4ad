"""Immutable graphs, ordered graphs and tournaments on vertices ``0..n-1``.

Adjacency is a read-only ``n x n`` boolean numpy array.  For an
:class:`OrderedGraph` the linear order is the index order, so the first
vertex is ``0`` and the last is ``n - 1``.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import factorial

import numpy as np

from .errors import DomainError, InputError


def _frozen_matrix(a, n=None):
    arr = np.array(a, dtype=bool, copy=True)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise InputError(f"adjacency must be square, got shape {arr.shape}")
    if n is not None and arr.shape[0] != n:
        raise InputError("adjacency size mismatch")
    arr.setflags(write=False)
    return arr


def _check_vertices(n, vertices):
    out = []
    for v in vertices:
        v = int(v)
        if not 0 <= v < n:
            raise InputError(f"vertex {v} out of range for n={n}")
        out.append(v)
    if len(set(out)) != len(out):
        raise InputError("repeated vertex in vertex set")
    return sorted(out)


def _masks(adj):
    n = adj.shape[0]
    weights = [1 << j for j in range(n)]
    return tuple(sum(w for w, b in zip(weights, row) if b) for row in adj.tolist())


@dataclass(frozen=True, eq=False)
class Graph:
    adj: np.ndarray

    def __post_init__(self):
        adj = _frozen_matrix(self.adj)
        if adj.diagonal().any():
            raise InputError("self-loop in adjacency")
        if not np.array_equal(adj, adj.T):
            raise InputError("adjacency is not symmetric")
        object.__setattr__(self, "adj", adj)

    @classmethod
    def from_edges(cls, n, edges=()):
        a = np.zeros((n, n), dtype=bool)
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise InputError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise InputError(f"self-loop at {u}")
            a[u, v] = a[v, u] = True
        return cls(a)

    @classmethod
    def empty(cls, n):
        return cls(np.zeros((n, n), dtype=bool))

    @classmethod
    def complete(cls, n):
        return cls(~np.eye(n, dtype=bool))

    @property
    def n(self):
        return self.adj.shape[0]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return type(other) is type(self) and self.n == other.n and np.array_equal(self.adj, other.adj)

    def __hash__(self):
        return hash((type(self).__name__, self.n, self.adj.tobytes()))

    def __repr__(self):
        return f"{type(self).__name__}(n={self.n}, edges={self.edges()})"

    @cached_property
    def masks(self):
        """Neighbourhoods as Python int bitmasks."""
        return _masks(self.adj)

    @cached_property
    def degrees(self):
        d = self.adj.sum(axis=1)
        d.setflags(write=False)
        return d

    def edges(self):
        us, vs = np.nonzero(np.triu(self.adj, 1))
        return [(int(u), int(v)) for u, v in zip(us, vs)]

    def num_edges(self):
        return int(np.triu(self.adj, 1).sum())

    def neighbours(self, v):
        return [int(u) for u in np.flatnonzero(self.adj[v])]

    def complement(self):
        return type(self)(~self.adj & ~np.eye(self.n, dtype=bool))

    def induced(self, vertices):
        vs = _check_vertices(self.n, vertices)
        return type(self)(self.adj[np.ix_(vs, vs)])


@dataclass(frozen=True, eq=False)
class OrderedGraph:
    """A graph whose vertex order is the index order."""

    graph: Graph

    def __post_init__(self):
        if not isinstance(self.graph, Graph):
            raise InputError("OrderedGraph wraps a Graph")

    @classmethod
    def from_edges(cls, n, edges=()):
        return cls(Graph.from_edges(n, edges))

    @property
    def adj(self):
        return self.graph.adj

    @property
    def n(self):
        return self.graph.n

    @property
    def masks(self):
        return self.graph.masks

    @property
    def degrees(self):
        return self.graph.degrees

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return type(other) is OrderedGraph and self.graph == other.graph

    def __hash__(self):
        return hash(("OrderedGraph", hash(self.graph)))

    def __repr__(self):
        return f"OrderedGraph(n={self.n}, edges={self.edges()})"

    def edges(self):
        return self.graph.edges()

    def num_edges(self):
        return self.graph.num_edges()

    def neighbours(self, v):
        return self.graph.neighbours(v)

    def complement(self):
        return OrderedGraph(self.graph.complement())

    def induced(self, vertices):
        return OrderedGraph(self.graph.induced(vertices))

    def reverse(self):
        return OrderedGraph(Graph(self.adj[::-1, ::-1]))


@dataclass(frozen=True, eq=False)
class Tournament:
    """``out[u, v]`` is True iff the arc goes ``u -> v``."""

    out: np.ndarray

    def __post_init__(self):
        out = _frozen_matrix(self.out)
        if out.diagonal().any():
            raise InputError("tournament has a loop")
        off = ~np.eye(out.shape[0], dtype=bool)
        if not np.array_equal((out ^ out.T) & off, off) or (out & out.T).any():
            raise InputError("not a tournament: every pair needs exactly one arc")
        object.__setattr__(self, "out", out)

    @classmethod
    def from_arcs(cls, n, arcs):
        a = np.zeros((n, n), dtype=bool)
        for u, v in arcs:
            if not (0 <= u < n and 0 <= v < n) or u == v:
                raise InputError(f"bad arc ({u}, {v})")
            a[u, v] = True
        return cls(a)

    @classmethod
    def transitive(cls, n):
        return cls(np.triu(np.ones((n, n), dtype=bool), 1))

    @property
    def n(self):
        return self.out.shape[0]

    def __len__(self):
        return self.n

    def __eq__(self, other):
        return type(other) is Tournament and self.n == other.n and np.array_equal(self.out, other.out)

    def __hash__(self):
        return hash(("Tournament", self.n, self.out.tobytes()))

    def __repr__(self):
        return f"Tournament(n={self.n}, arcs={self.arcs()})"

    @cached_property
    def masks(self):
        return _masks(self.out)

    def arcs(self):
        us, vs = np.nonzero(self.out)
        return sorted(((int(u), int(v)) for u, v in zip(us, vs)), key=lambda a: (min(a), max(a)))

    def out_degrees(self):
        return self.out.sum(axis=1)

    def in_degrees(self):
        return self.out.sum(axis=0)

    def induced(self, vertices):
        vs = _check_vertices(self.n, vertices)
        return Tournament(self.out[np.ix_(vs, vs)])

    def reverse_arcs(self):
        return Tournament(self.out.T.copy())


def complement(g):
    return g.complement()


def induced(g, vertices):
    return g.induced(vertices)


def reverse_order(g: OrderedGraph) -> OrderedGraph:
    return g.reverse()


def _substitution_matrix(a1, v, a2):
    n1, n2 = a1.shape[0], a2.shape[0]
    if not 0 <= v < n1:
        raise InputError(f"vertex {v} out of range for n={n1}")
    # h2 occupies positions v .. v+n2-1; the rest of h1 keeps its relative order
    old = [u for u in range(n1) if u != v]
    pos1 = [u if u < v else u + n2 - 1 for u in old]
    n = n1 + n2 - 1
    a = np.zeros((n, n), dtype=bool)
    a[np.ix_(pos1, pos1)] = a1[np.ix_(old, old)]
    block = list(range(v, v + n2))
    a[np.ix_(block, block)] = a2
    for p, u in zip(pos1, old):
        a[block, p] = a1[v, u]
        a[p, block] = a1[u, v]
    return a


def substitute(h1, v, h2):
    """Replace vertex ``v`` of ``h1`` by a copy of ``h2``.

    Works for graphs and tournaments.  The copy of ``h2`` takes the index
    block starting at ``v``.
    """
    if isinstance(h1, Tournament):
        if not isinstance(h2, Tournament):
            raise InputError("substitute a tournament into a tournament")
        return Tournament(_substitution_matrix(h1.out, v, h2.out))
    if isinstance(h1, OrderedGraph) or isinstance(h2, OrderedGraph):
        raise InputError("use substitute_ordered for ordered graphs")
    return Graph(_substitution_matrix(h1.adj, v, h2.adj))


def substitute_ordered(h1: OrderedGraph, v, h2: OrderedGraph) -> OrderedGraph:
    return OrderedGraph(Graph(_substitution_matrix(h1.adj, v, h2.adj)))


# ---------------------------------------------------------------- canonical form


def _refined_colours(masks, n):
    colours = [bin(m).count("1") for m in masks]
    while True:
        sig = [
            (colours[v], tuple(sorted(colours[u] for u in range(n) if masks[v] >> u & 1)))
            for v in range(n)
        ]
        rank = {s: i for i, s in enumerate(sorted(set(sig)))}
        new = [rank[s] for s in sig]
        if len(rank) == len(set(colours)):
            return new
        colours = new


def _twin_classes(masks, n):
    label = list(range(n))
    for v in range(n):
        for u in range(v):
            if label[u] != u:
                continue
            if masks[u] & ~(1 << v) == masks[v] & ~(1 << u):
                label[v] = u
                break
    return label


def _multiset_perms(items):
    counts = {}
    for it in items:
        counts[it] = counts.get(it, 0) + 1
    keys = sorted(counts)
    out = []
    cur = []

    def rec(k):
        if k == 0:
            out.append(tuple(cur))
            return
        for key in keys:
            if counts[key]:
                counts[key] -= 1
                cur.append(key)
                rec(k - 1)
                cur.pop()
                counts[key] += 1

    rec(len(items))
    return out


def canonical_labeling(g):
    """Vertex order under which ``g`` takes its canonical adjacency.

    Vertices are split into refined colour cells (canonically ranked); inside
    each cell every arrangement is tried, with twins treated as identical.
    The lexicographically least upper-triangle bit string wins.
    """
    a = g.adj
    n = a.shape[0]
    if n > 12:
        raise DomainError("canonical form is exhaustive; intended for n <= 12")
    if n == 0:
        return ()
    masks = g.masks
    colours = _refined_colours(masks, n)
    twins = _twin_classes(masks, n)
    cells = {}
    for v in range(n):
        cells.setdefault(colours[v], []).append(v)
    per_cell = []
    for c in sorted(cells):
        members = cells[c]
        by_class = {}
        for v in members:
            by_class.setdefault(twins[v], []).append(v)
        arrangements = []
        for pattern in _multiset_perms([twins[v] for v in members]):
            pools = {k: iter(vs) for k, vs in by_class.items()}
            arrangements.append(tuple(next(pools[k]) for k in pattern))
        per_cell.append(arrangements)
    total = 1
    for arr in per_cell:
        total *= len(arr)
    if total > factorial(10):
        raise DomainError(f"too many labelings to search ({total})")
    perms = np.array([sum(choice, ()) for choice in product(*per_cell)], dtype=np.intp)
    iu, ju = np.triu_indices(n, 1)
    bits = a[perms[:, iu], perms[:, ju]]
    alive = np.arange(len(perms))
    for col in range(bits.shape[1]):
        column = bits[alive, col]
        if column.all() or not column.any():
            continue
        alive = alive[~column]
        if len(alive) == 1:
            break
    return tuple(int(v) for v in perms[alive[0]])


def canonical_form(g):
    """Hashable isomorphism-class key ``(n, bytes)`` of a graph."""
    if isinstance(g, OrderedGraph):
        return ("o", g.n, np.packbits(g.adj[np.triu_indices(g.n, 1)]).tobytes())
    perm = canonical_labeling(g)
    n = g.n
    iu, ju = np.triu_indices(n, 1)
    p = np.array(perm, dtype=np.intp)
    bits = g.adj[p[iu], p[ju]] if n else np.zeros(0, dtype=bool)
    return (n, np.packbits(bits).tobytes())


def canonical_graph(g: Graph) -> Graph:
    perm = list(canonical_labeling(g))
    return Graph(g.adj[np.ix_(perm, perm)])


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    """Canonical forms up to 12 vertices, networkx VF2 above that."""
    if g1.n != g2.n or g1.num_edges() != g2.num_edges():
        return False
    if g1.n <= 12:
        return canonical_form(g1) == canonical_form(g2)
    import networkx as nx

    return nx.is_isomorphic(nx.from_numpy_array(np.asarray(g1.adj)), nx.from_numpy_array(np.asarray(g2.adj)))


# ---------------------------------------------------------------- named graphs


def path(k):
    return Graph.from_edges(k, [(i, i + 1) for i in range(k - 1)])


def cycle(k):
    return Graph.from_edges(k, [(i, (i + 1) % k) for i in range(k)])


def bull():
    # triangle 1-2-3 with pendants 0 (at 1) and 4 (at 3)
    return Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (1, 3), (3, 4)])


def star(leaves):
    return Graph.from_edges(leaves + 1, [(0, i) for i in range(1, leaves + 1)])
