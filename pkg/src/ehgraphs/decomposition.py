"""Modules (homogeneous sets), primeness and cographs.

A module of an ordered graph must also be an interval of the order: ordered
substitution puts the substituted block contiguously, so collapsing a
non-interval homogeneous set does not invert any substitution.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy.sparse.csgraph import connected_components

from .graph import OrderedGraph


@dataclass(frozen=True)
class ModuleWitness:
    vertices: tuple

    def __len__(self):
        return len(self.vertices)

    def verify(self, g) -> bool:
        s = set(self.vertices)
        if not 2 <= len(s) < g.n:
            return False
        mask = sum(1 << v for v in s)
        masks = g.masks
        for w in range(g.n):
            if w in s:
                continue
            seen = masks[w] & mask
            if seen and seen != mask:
                return False
        if isinstance(g, OrderedGraph) and max(s) - min(s) + 1 != len(s):
            return False
        return True


def _bits(mask):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _fill(mask):
    lo = (mask & -mask).bit_length() - 1
    hi = mask.bit_length() - 1
    return ((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1)


def module_closure(masks, n, seed, interval=False):
    """Smallest module (optionally an interval) containing the vertex bitmask ``seed``."""
    full = (1 << n) - 1
    m = seed
    while True:
        if interval:
            m = _fill(m)
        grown = m
        for w in _bits(full & ~m):
            seen = masks[w] & grown
            if seen and seen != grown:
                grown |= 1 << w
        if grown == m:
            return m
        m = grown


def _is_interval_kind(g):
    return isinstance(g, OrderedGraph)


def find_module(g):
    """Smallest nontrivial module, lexicographically least among those; None if prime.

    Every minimum-size module is the closure of any pair inside it, so the
    pair closures cover all candidates.
    """
    n = g.n
    if n <= 2:
        return None
    masks = g.masks
    interval = _is_interval_kind(g)
    full = (1 << n) - 1
    best = None
    for u in range(n):
        for v in range(u + 1, n):
            if interval and v != u + 1:
                # an interval module through u and v contains u, u+1
                continue
            m = module_closure(masks, n, (1 << u) | (1 << v), interval)
            if m == full:
                continue
            key = (bin(m).count("1"), tuple(_bits(m)))
            if best is None or key < best:
                best = key
                if key[0] == 2 and key[1] == (0, 1):
                    return ModuleWitness(key[1])
    return None if best is None else ModuleWitness(best[1])


def is_prime(g) -> bool:
    return find_module(g) is None


def quotient(g, module):
    """Collapse ``module`` to its least vertex.  Returns (quotient, kept vertices)."""
    s = set(module)
    rep = min(s)
    kept = [v for v in range(g.n) if v not in s or v == rep]
    return g.induced(kept), kept


# ------------------------------------------------------------------ cographs


def _components(adj):
    if adj.shape[0] == 0:
        return []
    k, labels = connected_components(adj, directed=False)
    return [np.flatnonzero(labels == i) for i in range(k)]


def is_cograph(g) -> bool:
    """True iff ``g`` has no induced P4 (recursive component / co-component split)."""
    adj = np.asarray(g.adj, dtype=bool)
    stack = [np.arange(adj.shape[0])]
    while stack:
        vs = stack.pop()
        if len(vs) <= 1:
            continue
        sub = adj[np.ix_(vs, vs)]
        comps = _components(sub)
        if len(comps) == 1:
            co = ~sub & ~np.eye(len(vs), dtype=bool)
            comps = _components(co)
            if len(comps) == 1:
                return False
        stack.extend(vs[c] for c in comps)
    return True


def cograph_clique_and_stable(g):
    """Maximum clique and maximum stable set of a cograph, as sorted tuples."""
    adj = np.asarray(g.adj, dtype=bool)

    def rec(vs):
        if len(vs) == 1:
            return [int(vs[0])], [int(vs[0])]
        sub = adj[np.ix_(vs, vs)]
        comps = _components(sub)
        if len(comps) > 1:
            parts = [rec(vs[c]) for c in comps]
            clique = max((p[0] for p in parts), key=lambda c: (len(c), [-x for x in c]))
            stable = sorted(x for p in parts for x in p[1])
            return clique, stable
        co = ~sub & ~np.eye(len(vs), dtype=bool)
        comps = _components(co)
        if len(comps) == 1:
            raise ValueError("not a cograph")
        parts = [rec(vs[c]) for c in comps]
        clique = sorted(x for p in parts for x in p[0])
        stable = max((p[1] for p in parts), key=lambda s: (len(s), [-x for x in s]))
        return clique, stable

    if adj.shape[0] == 0:
        return (), ()
    c, s = rec(np.arange(adj.shape[0]))
    return tuple(sorted(c)), tuple(sorted(s))

