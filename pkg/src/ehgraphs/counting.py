"""Exact induced-copy counts and the density functional ``mu``.

A copy is an injective map from pattern vertices to host vertices that
preserves adjacency and non-adjacency (and the order, for ordered graphs).
Counts are of maps, so ``count_copies(P4, P4) == 2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, perm

import numpy as np

from . import kernels
from .errors import DomainError, InputError
from .graph import Graph, OrderedGraph, Tournament

_INT64_CAP = (1 << 62)


def _kind(g):
    if isinstance(g, OrderedGraph):
        return "ordered"
    if isinstance(g, Tournament):
        return "tournament"
    if isinstance(g, Graph):
        return "graph"
    raise InputError(f"not a graph value: {type(g).__name__}")


def _matrix(g):
    return g.out if isinstance(g, Tournament) else g.adj


def _check_kinds(h, g):
    kh, kg = _kind(h), _kind(g)
    if kh != kg:
        raise InputError(f"pattern is {kh} but host is {kg}")
    return kh


def pattern_id(h) -> str:
    tag = {"graph": "g", "ordered": "og", "tournament": "t"}[_kind(h)]
    pairs = h.arcs() if isinstance(h, Tournament) else h.edges()
    return f"{tag}{h.n}:" + ",".join(f"{u}-{v}" for u, v in pairs)


def count_copies(h, g, limit=None) -> int:
    """``ind_h(g)``.  With ``limit`` set, counting stops once the total exceeds it
    and the returned value is then ``limit + 1``."""
    kind = _check_kinds(h, g)
    if h.n > g.n:
        return 0
    if limit is not None:
        limit = int(limit)
        if limit < 0:
            return 1 if h.n <= g.n else 0
        if limit >= perm(g.n, h.n) or limit >= _INT64_CAP:
            limit = None
    raw = kernels.count_induced(_matrix(h), _matrix(g), ordered=kind == "ordered", limit=-1 if limit is None else limit)
    return raw if limit is None else min(raw, limit + 1)


def exceeds(h, g, threshold) -> bool:
    """Exact test ``ind_h(g) > threshold`` for a rational threshold."""
    t = Fraction(threshold)
    if t < 0:
        return True
    return count_copies(h, g, limit=floor(t)) > t


def iter_copies(h, g, restrict_to=None, fixed=None):
    """Yield copies of ``h`` in ``g`` as tuples indexed by pattern vertex.

    ``restrict_to`` limits the image; ``fixed`` pre-assigns some pattern
    vertices (dict pattern vertex -> host vertex).  Pattern vertices are
    matched in index order, so ordered copies come out in lexicographic order.
    """
    kind = _check_kinds(h, g)
    ordered = kind == "ordered"
    hm = _matrix(h)
    n, k = g.n, h.n
    masks = g.masks
    full = (1 << n) - 1
    nonmasks = [full & ~m & ~(1 << v) for v, m in enumerate(masks)]
    allowed = full if restrict_to is None else sum(1 << int(v) for v in restrict_to)
    fixed = dict(fixed or {})
    img = [-1] * k

    def cands(i, used):
        c = allowed & ~used
        for j in range(i):
            c &= masks[img[j]] if hm[j, i] else nonmasks[img[j]]
        if ordered and i:
            c &= ~((1 << (img[i - 1] + 1)) - 1)
        if i in fixed:
            c &= 1 << fixed[i]
        return c

    def rec(i, used):
        if i == k:
            yield tuple(img)
            return
        c = cands(i, used)
        while c:
            low = c & -c
            img[i] = low.bit_length() - 1
            yield from rec(i + 1, used | low)
            c ^= low

    yield from rec(0, 0)


def is_copy(h, g, mapping) -> bool:
    """True iff ``mapping`` (tuple indexed by pattern vertex) is a copy of ``h`` in ``g``."""
    kind = _check_kinds(h, g)
    m = [int(v) for v in mapping]
    if len(m) != h.n or len(set(m)) != len(m) or any(not 0 <= v < g.n for v in m):
        return False
    hm, gm = _matrix(h), _matrix(g)
    for i in range(h.n):
        for j in range(h.n):
            if i != j and hm[i, j] != gm[m[i], m[j]]:
                return False
    if kind == "ordered" and m != sorted(m):
        return False
    return True


def count_extensions(j_copy, h_prime, vertex, g, restrict_to=None):
    """Extend a copy of ``h_prime - vertex`` to copies of ``h_prime``.

    ``j_copy`` lists host images of the remaining pattern vertices in
    increasing pattern-index order.  Returns ``(count, extension_set)``; each
    extension is fixed by the image of ``vertex``, so the two agree in size.
    """
    if not 0 <= vertex < h_prime.n:
        raise DomainError(f"vertex {vertex} not in pattern")
    rest = [p for p in range(h_prime.n) if p != vertex]
    j = h_prime.induced(rest)
    if not is_copy(j, g, j_copy):
        raise DomainError("j_copy is not a copy of the pattern minus the vertex")
    fixed = dict(zip(rest, j_copy))
    ext = frozenset(c[vertex] for c in iter_copies(h_prime, g, restrict_to=_with(restrict_to, j_copy), fixed=fixed))
    return len(ext), ext


def _with(restrict_to, extra):
    if restrict_to is None:
        return None
    return set(restrict_to) | set(extra)


@dataclass(frozen=True)
class MuReport:
    pattern: str
    count: int
    x: Fraction
    mu: Fraction
    family_mu: Fraction

    def lines(self):
        return [
            f"pattern: {self.pattern}",
            f"count: {self.count}",
            f"x: {self.x}",
            f"mu: {self.mu}",
            f"family_mu: {self.family_mu}",
        ]


def _mu_value(count, x, n, h):
    return Fraction(count) / (x * n) ** h


def mu(h, x, g) -> MuReport:
    """``mu_h(x, g) = ind_h(g) / (x |g|)^|h|`` as an exact fraction."""
    x = Fraction(x)
    if x <= 0:
        raise DomainError("x must be positive")
    if g.n < 1:
        raise DomainError("host must be non-empty")
    c = count_copies(h, g)
    m = _mu_value(c, x, g.n, h.n)
    return MuReport(pattern_id(h), c, x, m, m)


def mu_family(family, x, g) -> MuReport:
    """Report for the member attaining the maximum ``mu``; ties go to the earlier member."""
    family = list(family)
    if not family:
        raise DomainError("empty family")
    reports = [mu(h, x, g) for h in family]
    best = max(reports, key=lambda r: r.mu)
    return MuReport(best.pattern, best.count, best.x, best.mu, best.mu)


def subset_count_oracle(h, g) -> int:
    """Slow reference: vertex subsets inducing a copy, times automorphisms of ``h``.

    Kept in the library because tests and the ``verify`` command both use it.
    """
    from itertools import combinations, permutations

    kind = _check_kinds(h, g)
    hm, gm = np.asarray(_matrix(h)), np.asarray(_matrix(g))
    k = h.n

    def same(sub, perm_):
        return all(hm[i, j] == sub[perm_[i], perm_[j]] for i in range(k) for j in range(k) if i != j)

    ident = list(range(k))
    if kind == "ordered":
        return sum(1 for s in combinations(range(g.n), k) if same(gm[np.ix_(s, s)], ident))
    autos = sum(1 for p in permutations(range(k)) if same(hm, p))
    subsets = 0
    for s in combinations(range(g.n), k):
        sub = gm[np.ix_(s, s)]
        if any(same(sub, p) for p in permutations(range(k))):
            subsets += 1
    return subsets * autos
