"""Buildable tournaments, backedge graphs and transitive-set extraction."""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations

import numpy as np

from .classes import in_K
from .decomposition import find_module, quotient
from .errors import CertificateError, DomainError
from .graph import Graph, OrderedGraph, Tournament


@dataclass(frozen=True)
class BackedgePair:
    tournament: Tournament
    numbering: tuple
    backedge: OrderedGraph


def _check_numbering(n, numbering):
    nums = tuple(int(v) for v in numbering)
    if sorted(nums) != list(range(n)):
        raise DomainError("numbering must be a permutation of the vertices")
    return nums


def backedge(t: Tournament, numbering=None) -> BackedgePair:
    """Backedge ordered graph: positions ``i < j`` are adjacent iff the arc
    goes from ``numbering[j]`` back to ``numbering[i]``."""
    nums = _check_numbering(t.n, range(t.n) if numbering is None else numbering)
    p = np.array(nums, dtype=np.intp)
    back = t.out[np.ix_(p, p)].T  # back[i, j] = out[v_j, v_i]
    adj = np.triu(back, 1)
    return BackedgePair(t, nums, OrderedGraph(Graph(adj | adj.T)))


def from_backedge(g: OrderedGraph, numbering=None) -> Tournament:
    n = g.n
    nums = _check_numbering(n, range(n) if numbering is None else numbering)
    out = np.zeros((n, n), dtype=bool)
    for i in range(n):
        for j in range(i + 1, n):
            vi, vj = nums[i], nums[j]
            if g.adj[i, j]:
                out[vj, vi] = True
            else:
                out[vi, vj] = True
    return Tournament(out)


def is_transitive(t: Tournament, vertices=None) -> bool:
    """A tournament is transitive iff its out-degrees are exactly 0..k-1."""
    sub = t if vertices is None else t.induced(vertices)
    return sorted(sub.out_degrees().tolist()) == list(range(sub.n))


# --------------------------------------------------------------- recognition


def _q_order(t, labels):
    """Numbering (as original labels) whose backedge graph lies in K, or None."""
    n = t.n
    if n <= 1:
        return list(labels)
    ins, outs = t.in_degrees(), t.out_degrees()
    for v in range(n):
        if ins[v] <= 1 or outs[v] <= 1:
            rest = [u for u in range(n) if u != v]
            inner = _q_order(t.induced(rest), [labels[u] for u in rest])
            if inner is None:
                return None
            # in-degree <= 1: going first leaves at most one backedge at v
            return [labels[v]] + inner if ins[v] <= 1 else inner + [labels[v]]
    m = find_module(t)
    if m is None:
        return None
    outer_t, kept = quotient(t, m.vertices)
    outer = _q_order(outer_t, [labels[u] for u in kept])
    inner = _q_order(t.induced(m.vertices), [labels[u] for u in m.vertices])
    if outer is None or inner is None:
        return None
    rep = labels[min(m.vertices)]
    i = outer.index(rep)
    return outer[:i] + inner + outer[i + 1:]


def q_numbering(q: Tournament):
    """A numbering of ``q`` whose backedge ordered graph is in K, or None if ``q``
    is not buildable."""
    order = _q_order(q, list(range(q.n)))
    return None if order is None else tuple(order)


def in_Q(t: Tournament) -> bool:
    """Buildable: peel vertices of in- or out-degree at most one, collapse modules."""
    return q_numbering(t) is not None


def in_Q_by_numberings(t: Tournament, max_n=7) -> bool:
    """Exhaustive: some numbering gives a backedge ordered graph in K."""
    if t.n > max_n:
        raise DomainError(f"numbering search is capped at n={max_n}")
    return any(in_K(backedge(t, p).backedge) for p in permutations(range(t.n)))


# ------------------------------------------------------------ named examples


def paley(p=7) -> Tournament:
    """Quadratic-residue tournament on ``p`` vertices (p = 3 mod 4 prime)."""
    qr = {(x * x) % p for x in range(1, p)}
    out = np.zeros((p, p), dtype=bool)
    for u in range(p):
        for v in range(p):
            if u != v and (v - u) % p in qr:
                out[u, v] = True
    return Tournament(out)


def cyclic_triangle() -> Tournament:
    return Tournament.from_arcs(3, [(0, 1), (1, 2), (2, 0)])


def prime_Q_member(n=5) -> Tournament:
    """Lexicographically first prime buildable tournament on ``n`` vertices
    (arc sets enumerated as bitmasks over the pairs ``i < j``)."""
    from .decomposition import is_prime

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    for mask in range(1 << len(pairs)):
        out = np.zeros((n, n), dtype=bool)
        for b, (i, j) in enumerate(pairs):
            if mask >> b & 1:
                out[j, i] = True
            else:
                out[i, j] = True
        t = Tournament(out)
        if is_prime(t) and in_Q(t):
            return t
    raise DomainError(f"no prime buildable tournament on {n} vertices")


# ---------------------------------------------------------------- extraction


@dataclass(frozen=True)
class TransitiveResult:
    vertices: tuple
    kind: str  # "backward" (clique of backedges) or "forward" (stable)
    eh: object


def transitive_extract(q: Tournament, t: Tournament, seed=0, **kwargs) -> TransitiveResult:
    """Transitive set of ``t`` from a clique or stable set of its backedge graph.

    ``H`` is a K-backedge graph of ``q`` and ``J`` its reversal; both are in K,
    and ``t`` being ``q``-free makes the backedge host free of ``H`` and of the
    complement of ``J``.
    """
    from .extraction.driver import eh_extract

    nums = q_numbering(q)
    if nums is None:
        raise DomainError("pattern tournament is not buildable")
    h = backedge(q, nums).backedge
    j = h.reverse()
    host = backedge(t).backedge
    res = eh_extract(h, j, host, seed=seed, **kwargs)
    s = tuple(sorted(res.vertices))
    if not is_transitive(t, s):
        raise CertificateError("extracted set is not transitive")
    kind = "backward" if res.kind == "clique" else "forward"
    return TransitiveResult(s, kind, res)
