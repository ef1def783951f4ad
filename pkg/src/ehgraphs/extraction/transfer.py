"""From blockades to low-density sets via layouts, and back.

A layout is a cograph ``J`` with one vertex set per cograph vertex.  It is
refined by substituting a stable set (or clique) for its largest part
whenever a blockade of that part is short; a long blockade instead yields a
low-density union of sampled block subsets.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import ceil, comb, floor, isqrt

import numpy as np

from ..decomposition import cograph_clique_and_stable, is_cograph
from ..errors import BlockadeError, CertificateError, DomainError
from ..graph import Graph, substitute
from .outcomes import Blockade, LowDensitySet
from .restricted import side_matrix, sparse_side
from .verify import check_blockade, check_density, check_restricted

SAMPLE_TRIES = 64


@dataclass(frozen=True)
class Layout:
    cograph: Graph
    parts: tuple

    def __post_init__(self):
        if len(self.parts) != self.cograph.n:
            raise DomainError("one part per cograph vertex")
        seen = set()
        for p in self.parts:
            if seen & set(p):
                raise DomainError("layout parts overlap")
            seen |= set(p)
        if not is_cograph(self.cograph):
            raise DomainError("layout graph is not a cograph")

    def decided_pairs(self, n):
        return comb(n, 2) - sum(comb(len(p), 2) for p in self.parts)

    def wrong_pairs(self, g):
        a = np.asarray(g.adj, dtype=bool)
        j = self.cograph.adj
        wrong = 0
        for s in range(len(self.parts)):
            for t in range(s + 1, len(self.parts)):
                ps, pt = list(self.parts[s]), list(self.parts[t])
                if not ps or not pt:
                    continue
                e = int(a[np.ix_(ps, pt)].sum())
                wrong += len(ps) * len(pt) - e if j[s, t] else e
        return wrong

    def satisfies(self, g, eps, d, x):
        n = g.n
        floor_size = Fraction(eps) ** (6 * d) * n
        if any(len(p) < floor_size for p in self.parts):
            return False
        if sum(len(p) ** (1 / d) for p in self.parts) < n ** (1 / d) * (1 - 1e-12):
            return False
        return self.wrong_pairs(g) <= Fraction(x) * self.decided_pairs(n)


def _validate(g, blk, part, x, d):
    s = set(part)
    if not isinstance(blk, Blockade):
        raise BlockadeError("provider returned no blockade", part)
    k = blk.length
    if not 2 <= k <= 1 / Fraction(x) or Fraction(blk.x) > x:
        raise BlockadeError(f"blockade length {k} or sparsity {blk.x} out of range", part)
    if any(not set(b) <= s for b in blk.blocks):
        raise BlockadeError("blockade leaves the part", part)
    if blk.width < Fraction(len(part), k ** d):
        raise BlockadeError(f"blockade width {blk.width} below |F|/k^d", part)
    try:
        check_blockade(g, blk)
    except CertificateError as err:
        raise BlockadeError(f"invalid blockade: {err}", part) from err


def _many_parts_exit(g, layout, eps, d):
    clique, stable = cograph_clique_and_stable(layout.cograph)
    if len(stable) >= len(clique):
        members, side = stable, "graph"
    else:
        members, side = clique, "complement"
    size = ceil(Fraction(eps) ** (6 * d) * g.n)
    chosen = []
    for i in members:
        chosen.extend(sorted(layout.parts[i])[:size])
    return tuple(sorted(chosen)), side


def _cross(a, ci, cj):
    return int(a[np.ix_(ci, cj)].sum())


def _sample(g, blk, side, eps, x, d, part_size, rng):
    nn = ceil(2 / Fraction(eps))
    k = blk.length
    w = ceil(Fraction(part_size, k ** d))
    blocks = [sorted(b) for b in blk.blocks[:nn]]
    a = np.asarray(side_matrix(g, range(g.n), side))
    cap = Fraction(x) * nn * nn * w * w / 2
    for attempt in range(SAMPLE_TRIES):
        cs = [sorted(int(v) for v in rng.choice(b, size=w, replace=False)) for b in blocks]
        if all(_cross(a, cs[i], cs[j]) <= cap for i in range(nn) for j in range(i + 1, nn)):
            return cs, f"sampled:{attempt + 1}"
    cs = []
    for b in blocks:
        taken = [v for c in cs for v in c]
        cost = a[np.ix_(b, taken)].sum(axis=1) if taken else np.zeros(len(b), dtype=int)
        pick = sorted(range(len(b)), key=lambda i: (int(cost[i]), b[i]))[:w]
        cs.append(sorted(b[i] for i in pick))
    return cs, "greedy"


def blockade_to_sparse_set(g, eps, d, provider, seed=0, initial_layout=None):
    """A set ``S`` on one side of which ``g[S]`` has at most ``eps C(|S|,2)`` edges.

    ``provider(F)`` must return an ``x``-sparse or ``(1-x)``-dense blockade of
    ``g[F]`` (labels of ``g``) of length in ``[2, 1/x]`` and width at least
    ``|F|/k^d``, where ``x = eps^(12 d)``.  ``initial_layout`` seeds the
    layout search (the default is the one-part layout).
    """
    eps = Fraction(eps)
    if not 0 < eps < Fraction(1, 2):
        raise DomainError("eps must lie in (0, 1/2)")
    if d < 1:
        raise DomainError("d must be at least 1")
    x = eps ** (12 * d)
    n = g.n
    everything = tuple(range(n))
    if n == 0:
        raise DomainError("empty host")
    side = sparse_side(g, everything, eps)
    if side is not None and initial_layout is None:
        return LowDensitySet(everything, side, eps, (("route", "whole"),))
    layout = initial_layout or Layout(Graph.empty(1), (everything,))
    rng = np.random.default_rng(seed)
    refinements = 0
    while True:
        if layout.cograph.n * eps * eps >= 4:
            s, side = _many_parts_exit(g, layout, eps, d)
            route = "many_parts"
            break
        big = max(range(len(layout.parts)), key=lambda i: (len(layout.parts[i]), -i))
        part = tuple(sorted(layout.parts[big]))
        blk = provider(part)
        _validate(g, blk, part, x, d)
        side = "graph" if blk.kind == "sparse" else "complement"
        k = blk.length
        if k * eps <= 2:
            inner = Graph.empty(k) if side == "graph" else Graph.complete(k)
            parts = layout.parts[:big] + tuple(tuple(b) for b in blk.blocks) + layout.parts[big + 1:]
            nxt = Layout(substitute(layout.cograph, big, inner), parts)
            if not nxt.satisfies(g, eps, d, x):
                raise BlockadeError("refined layout breaks a layout bound", part)
            layout = nxt
            refinements += 1
            continue
        cs, route = _sample(g, blk, side, eps, x, d, len(part), rng)
        s = tuple(sorted(v for c in cs for v in c))
        break
    out = LowDensitySet(s, side, eps, (("route", route), ("refinements", refinements), ("x", x)))
    check_density(g, s, side, eps)
    return out


def blockade_length(x):
    """``ceil(x^(-1/2))`` in exact arithmetic."""
    x = Fraction(x)
    q = 1 / x
    k = isqrt(ceil(q))
    while k * k < q:
        k += 1
    while k > 1 and (k - 1) * (k - 1) >= q:
        k -= 1
    return k


def restricted_to_blockade(g, S, x, side=None):
    """Cut an ``x^2``-restricted set into ``ceil(x^(-1/2))`` blocks of size
    ``floor(2 x |S|)``; the blockade is sparse or dense as ``S`` is."""
    x = Fraction(x)
    vs = tuple(sorted(int(v) for v in S))
    if not vs:
        raise DomainError("empty set")
    sides = ("graph", "complement") if side is None else (side,)
    for s in sides:
        try:
            check_restricted(g, vs, s, x * x)
            side = s
            break
        except CertificateError:
            continue
    else:
        raise DomainError("S is not x^2-restricted")
    k = blockade_length(x)
    size = floor(2 * x * len(vs))
    if size < 1 or k * size > len(vs):
        raise DomainError(f"S too small: {k} blocks of size {size} from {len(vs)} vertices")
    blocks = tuple(vs[i * size:(i + 1) * size] for i in range(k))
    kind = "sparse" if side == "graph" else "dense"
    return Blockade(blocks, kind, x)
