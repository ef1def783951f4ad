"""Recognition of the classes J, H (unordered) and K, L (ordered).

Membership is decided by reverse construction: peel a vertex that the
forward operations could have added last, or collapse a module and recurse
into both halves.  Each class is hereditary and closed under the peel /
collapse steps, so the order of peeling never changes the answer.

The build sequence returned on success is a tree whose leaves are single
vertices (named by their original index); :func:`replay` rebuilds the graph
and re-checks every step's precondition.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations

import numpy as np

from .decomposition import find_module, is_prime, quotient
from .errors import DomainError
from .graph import Graph, OrderedGraph


# ----------------------------------------------------------- build sequences


@dataclass(frozen=True)
class Empty:
    pass


@dataclass(frozen=True)
class Base:
    vertex: int


@dataclass(frozen=True)
class AddLeaf:
    inner: object
    vertex: int
    target: int | None  # None: the new vertex is isolated


@dataclass(frozen=True)
class AddCodominating:
    inner: object
    vertex: int
    avoided: int


@dataclass(frozen=True)
class AddEndLeaf:
    inner: object
    vertex: int
    end: str  # "first" or "last"
    target: int | None


@dataclass(frozen=True)
class Substitute:
    outer: object
    vertex: int
    inner: object


BuildSequence = Empty | Base | AddLeaf | AddCodominating | AddEndLeaf | Substitute


def steps(seq):
    """Flatten a build tree into post-order steps (bases first)."""
    out = []

    def walk(node):
        if isinstance(node, Substitute):
            walk(node.outer)
            walk(node.inner)
        elif isinstance(node, (AddLeaf, AddCodominating, AddEndLeaf)):
            walk(node.inner)
        out.append(node)

    walk(seq)
    return out


def replay(seq, cls="J"):
    """Rebuild the graph described by ``seq``; raise :class:`DomainError` if a
    step's precondition fails.  ``cls`` selects the rules (J, H or K).

    Returns a :class:`Graph` (``OrderedGraph`` for K) on the sorted labels.
    """
    labels, edges = _replay(seq, cls)
    index = {v: i for i, v in enumerate(labels)}
    g = Graph.from_edges(len(labels), [(index[u], index[v]) for u, v in edges])
    return OrderedGraph(g) if cls == "K" else g


def _deg(v, edges):
    return sum(1 for e in edges if v in e)


def _replay(node, cls):
    if isinstance(node, Empty):
        return [], set()
    if isinstance(node, Base):
        return [node.vertex], set()
    if isinstance(node, (AddLeaf, AddEndLeaf)):
        labels, edges = _replay(node.inner, cls)
        if node.vertex in labels:
            raise DomainError(f"vertex {node.vertex} added twice")
        t = node.target
        if t is not None and t not in labels:
            raise DomainError(f"leaf target {t} not present")
        if isinstance(node, AddLeaf):
            if cls == "K":
                raise DomainError("unordered leaf step in an ordered sequence")
            if cls == "H" and (t is None or _deg(t, edges) < len(labels) - 2):
                raise DomainError(f"leaf target {t} is not almost dominating")
        else:
            if cls != "K":
                raise DomainError("end-leaf step outside an ordered sequence")
            ok = node.vertex < min(labels) if node.end == "first" else node.vertex > max(labels)
            if not ok:
                raise DomainError(f"vertex {node.vertex} is not at the {node.end} end")
        new = set(edges)
        if t is not None:
            new.add(frozenset((t, node.vertex)))
        return sorted(labels + [node.vertex]), new
    if isinstance(node, AddCodominating):
        labels, edges = _replay(node.inner, cls)
        if cls != "H":
            raise DomainError("co-leaf step outside an H sequence")
        a = node.avoided
        if a not in labels or _deg(a, edges) > 1:
            raise DomainError(f"avoided vertex {a} must be present with degree at most one")
        new = set(edges) | {frozenset((u, node.vertex)) for u in labels if u != a}
        return sorted(labels + [node.vertex]), new
    if isinstance(node, Substitute):
        ol, oe = _replay(node.outer, cls)
        il, ie = _replay(node.inner, cls)
        v = node.vertex
        if v not in ol or v not in il or set(ol) & set(il) != {v}:
            raise DomainError("substitution parts must share exactly the substituted vertex")
        nbrs = [u for u in ol if frozenset((u, v)) in oe]
        edges = {e for e in oe if v not in e} | set(ie)
        edges |= {frozenset((x, m)) for x in nbrs for m in il}
        labels = sorted(set(ol) | set(il))
        if cls == "K":
            pos = [labels.index(m) for m in il]
            if max(pos) - min(pos) + 1 != len(il):
                raise DomainError("ordered substitution block is not contiguous")
        return labels, edges
    raise DomainError(f"unknown step {node!r}")


# ---------------------------------------------------------- reverse peeling


def _collapse(g, labels, builder):
    m = find_module(g)
    if m is None:
        return None
    outer_g, kept = quotient(g, m.vertices)
    inner_g = g.induced(m.vertices)
    outer = builder(outer_g, [labels[u] for u in kept])
    if outer is None:
        return None
    inner = builder(inner_g, [labels[u] for u in m.vertices])
    if inner is None:
        return None
    return Substitute(outer, labels[min(m.vertices)], inner)


def _minus(g, labels, v):
    rest = [u for u in range(g.n) if u != v]
    return g.induced(rest), [labels[u] for u in rest]


def _build_J(g, labels):
    if g.n == 1:
        return Base(labels[0])
    deg = g.degrees
    for v in range(g.n):
        if deg[v] <= 1:
            inner = _build_J(*_minus(g, labels, v))
            if inner is None:
                return None
            nb = g.neighbours(v)
            return AddLeaf(inner, labels[v], labels[nb[0]] if len(nb) else None)
    return _collapse(g, labels, _build_J)


def _build_H(g, labels):
    k = g.n
    if k == 1:
        return Base(labels[0])
    deg = g.degrees
    for v in range(k):
        if deg[v] == 1:
            t = int(g.neighbours(v)[0])
            if deg[t] - 1 >= k - 3:
                inner = _build_H(*_minus(g, labels, v))
                return None if inner is None else AddLeaf(inner, labels[v], labels[t])
        if deg[v] == k - 2:
            a = next(u for u in range(k) if u != v and not g.adj[v, u])
            if deg[a] <= 1:
                inner = _build_H(*_minus(g, labels, v))
                return None if inner is None else AddCodominating(inner, labels[v], labels[a])
    return _collapse(g, labels, _build_H)


def _build_K(g, labels):
    k = g.n
    if k == 1:
        return Base(labels[0])
    deg = g.degrees
    for v, end in ((0, "first"), (k - 1, "last")):
        if deg[v] <= 1:
            inner = _build_K(*_minus(g, labels, v))
            if inner is None:
                return None
            nb = g.neighbours(v)
            return AddEndLeaf(inner, labels[v], end, labels[nb[0]] if len(nb) else None)
    return _collapse(g, labels, _build_K)


def _start(g, builder):
    if g.n == 0:
        return Empty()
    return builder(g, list(range(g.n)))


def _unordered(g):
    if isinstance(g, OrderedGraph):
        raise DomainError("expected an unordered graph")
    return g


def _ordered(g):
    if not isinstance(g, OrderedGraph):
        raise DomainError("expected an ordered graph")
    return g


def build_J(g):
    """Build sequence witnessing ``g`` in J, or None."""
    return _start(_unordered(g), _build_J)


def build_H(g):
    return _start(_unordered(g), _build_H)


def build_K(g):
    return _start(_ordered(g), _build_K)


def in_J(g) -> bool:
    return build_J(g) is not None


def in_H(g, method="peel") -> bool:
    """Membership in H.

    ``method``: ``"peel"`` (reverse construction with the H operations),
    ``"J"`` (g and its complement both in J) or ``"characterization"``
    (every prime induced subgraph on at least 3 vertices has a vertex of
    degree 1 and one of degree ``|H'| - 2``).
    """
    _unordered(g)
    if method == "peel":
        return build_H(g) is not None
    if method == "J":
        return in_J(g) and in_J(g.complement())
    if method == "characterization":
        return _characterized(g, lambda sub: _has_deg(sub, 1) and _has_deg(sub, sub.n - 2))
    raise DomainError(f"unknown method {method!r}")


def in_J_characterization(g) -> bool:
    return _characterized(_unordered(g), lambda sub: bool((sub.degrees <= 1).any()))


def in_K(g) -> bool:
    return build_K(g) is not None


def in_K_characterization(g) -> bool:
    _ordered(g)
    return _characterized(g, lambda sub: sub.degrees[0] <= 1 or sub.degrees[-1] <= 1)


def in_L(g) -> bool:
    """L membership as K for both ``g`` and its complement."""
    return in_K(g) and in_K(_ordered(g).complement())


def _has_deg(g, d):
    return bool((g.degrees == d).any())


def _characterized(g, ok, max_n=14):
    """Every prime induced subgraph on >= 3 vertices passes ``ok``."""
    if g.n > max_n:
        raise DomainError(f"characterization check is exhaustive; n={g.n} > {max_n}")
    for k in range(3, g.n + 1):
        for s in combinations(range(g.n), k):
            sub = g.induced(s)
            if is_prime(sub) and not ok(sub):
                return False
    return True


# ------------------------------------------------------ L by its operations


def _l_peel_ok(g, z, a, adjacent):
    """Check one of the four L growth steps in reverse, with ``z`` the new vertex."""
    n = g.n
    adj = g.adj if adjacent else (~g.adj & ~np.eye(n, dtype=bool))
    want = [u for u in range(n) if u not in (z, a)]
    if sorted(np.flatnonzero(adj[z]).tolist()) != want:
        return False
    rest = [u for u in range(n) if u != z]
    other_end = rest[-1] if a == rest[0] else rest[0]
    return np.flatnonzero(adj[a]).tolist() == [other_end]


def in_L_constructive(g) -> bool:
    """Search for a derivation with the L operations (substitution plus the
    four end-vertex steps).  Base: every ordered graph on at most 2 vertices."""
    _ordered(g)

    @lru_cache(maxsize=None)
    def rec(key):
        n, raw = key
        h = OrderedGraph(Graph(np.frombuffer(raw, dtype=bool).reshape(n, n)))
        if n <= 2:
            return True
        m = find_module(h)
        if m is not None:
            outer, _ = quotient(h, m.vertices)
            if rec(_key(outer)) and rec(_key(h.induced(m.vertices))):
                return True
        for z, a in ((n - 1, 0), (0, n - 1)):
            for adjacent in (True, False):
                if _l_peel_ok(h, z, a, adjacent):
                    rest = [u for u in range(n) if u != z]
                    if rec(_key(h.induced(rest))):
                        return True
        return False

    return rec(_key(g))


def _key(g):
    return g.n, np.ascontiguousarray(g.adj).tobytes()


# ------------------------------------------------------------------ ordering


def order_into_K(f):
    """An order of ``f`` (a member of J) under which it lies in K.

    Leaves are placed at alternating ends; a substituted part keeps a
    contiguous block at the position of the vertex it replaces.
    Returns ``(ordered_graph, order)`` with ``order[i]`` the original vertex
    placed at position ``i``.
    """
    seq = build_J(_unordered(f))
    if seq is None:
        raise DomainError("graph is not in J")
    flip = [False]

    def walk(node):
        if isinstance(node, Empty):
            return []
        if isinstance(node, Base):
            return [node.vertex]
        if isinstance(node, AddLeaf):
            inner = walk(node.inner)
            flip[0] = not flip[0]
            return inner + [node.vertex] if flip[0] else [node.vertex] + inner
        if isinstance(node, Substitute):
            outer = walk(node.outer)
            inner = walk(node.inner)
            i = outer.index(node.vertex)
            return outer[:i] + inner + outer[i + 1:]
        raise DomainError(f"unexpected step {node!r}")

    order = walk(seq)
    og = OrderedGraph(Graph(f.adj[np.ix_(order, order)]))
    if not in_K(og):  # pragma: no cover - guarded by tests
        raise DomainError("ordering step failed to land in K")
    return og, tuple(order)


# --------------------------------------------------------------- split graphs


def is_split(g) -> bool:
    """Exhaustive clique / stable-set bipartition search."""
    n = g.n
    masks = g.masks
    for s in range(1 << n):
        clique = [v for v in range(n) if s >> v & 1]
        stable = [v for v in range(n) if not s >> v & 1]
        cm = s
        if all((masks[v] | (1 << v)) & cm == cm for v in clique) and all(
            masks[v] & ~cm == 0 for v in stable
        ):
            return True
    return False


def is_split_degrees(g) -> bool:
    """Degree-sequence test for split graphs (Hammer and Simeone)."""
    d = sorted(g.degrees.tolist(), reverse=True)
    m = max((i for i in range(1, len(d) + 1) if d[i - 1] >= i - 1), default=0)
    return sum(d[:m]) == m * (m - 1) + sum(d[m:])


def char_consistency(n) -> bool:
    """H membership agrees with J on the graph and its complement, for every
    graph on at most ``n`` vertices (one per isomorphism class)."""
    from .enumeration import all_graphs

    if n > 8:
        raise DomainError("n must be at most 8")
    for k in range(n + 1):
        for g in all_graphs(k):
            if in_H(g) != (in_J(g) and in_J(g.complement())):
                return False
    return True
