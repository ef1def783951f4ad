"""Restricted-subset search and degree pruning."""
from __future__ import annotations

from fractions import Fraction
from math import comb, floor

import numpy as np

from .. import kernels
from ..errors import DomainError
from .outcomes import RestrictedSet

EXHAUSTIVE_MAX = 20
SIDES = ("graph", "complement")


def side_matrix(g, vertices, side):
    vs = np.asarray(vertices, dtype=np.intp)
    a = np.asarray(g.adj, dtype=bool)[np.ix_(vs, vs)]
    if side == "complement":
        a = ~a & ~np.eye(len(vs), dtype=bool)
    return a


def _edges(g, vs, side):
    return int(np.triu(side_matrix(g, vs, side), 1).sum()) if vs else 0


def allowed_table(n, eps):
    eps = Fraction(eps)
    return np.array([floor(eps * s) for s in range(n + 1)], dtype=np.int64)


def _best_on_side(g, vs, side, allowed):
    a = side_matrix(g, vs, side)
    if len(vs) <= EXHAUSTIVE_MAX:
        masks = [sum(1 << j for j in np.flatnonzero(row)) for row in a]
        bits = kernels.exhaustive_restricted(masks, allowed)
        keep = [j for j in range(len(vs)) if bits >> j & 1]
    else:
        keep = kernels.peel(a, allowed)
    return tuple(vs[j] for j in keep)


def restricted_subset_search(g, eps, min_size=1, vertices=None):
    """Largest ``eps``-restricted subset found, or ``None`` below ``min_size``.

    Exhaustive up to 20 vertices, greedy peeling on both sides beyond that.
    A ``None`` result is a search failure, not a proof that none exists.
    """
    eps = Fraction(eps)
    if not 0 < eps < Fraction(1, 2):
        raise DomainError("eps must lie in (0, 1/2)")
    vs = tuple(range(g.n)) if vertices is None else tuple(sorted(int(v) for v in vertices))
    if not vs:
        return None
    allowed = allowed_table(len(vs), eps)
    found = [(_best_on_side(g, vs, s, allowed), s) for s in SIDES]
    # fewer edges on the reported side breaks set ties, so complementing the
    # host swaps the reported side
    best, side = min(found, key=lambda t: (-len(t[0]), t[0], _edges(g, t[0], t[1]), SIDES.index(t[1])))
    if len(best) < max(1, min_size):
        return None
    return RestrictedSet(best, side, eps, (("route", "search"),))


def sparse_side(g, vertices, eps):
    """First side (graph, then complement) with at most ``eps * C(|S|, 2)`` edges, or None."""
    vs = list(vertices)
    cap = Fraction(eps) * comb(len(vs), 2)
    for side in SIDES:
        if int(np.triu(side_matrix(g, vs, side), 1).sum()) <= cap:
            return side
    return None


def degree_prune(g, S, eps, side=None):
    """Keep the vertices of degree at most ``eps |S| / 2`` on the sparse side.

    Needs at most ``(eps / 4) C(|S|, 2)`` edges on that side; then at least
    half of ``S`` survives and the survivors form an ``eps``-restricted set.
    """
    eps = Fraction(eps)
    vs = tuple(sorted(int(v) for v in S))
    if not vs:
        raise DomainError("empty set")
    if side is None:
        side = sparse_side(g, vs, eps / 4)
        if side is None:
            raise DomainError("neither side has at most (eps/4) C(|S|,2) edges")
    else:
        a = side_matrix(g, vs, side)
        if int(np.triu(a, 1).sum()) > eps / 4 * comb(len(vs), 2):
            raise DomainError(f"side {side} has more than (eps/4) C(|S|,2) edges")
    deg = side_matrix(g, vs, side).sum(axis=1)
    keep = tuple(v for v, d in zip(vs, deg.tolist()) if d <= eps * len(vs) / 2)
    return RestrictedSet(keep, side, eps, (("route", "prune"),))
