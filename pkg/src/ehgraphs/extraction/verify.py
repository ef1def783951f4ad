"""Independent re-verification of extraction outcomes.

Nothing here touches the counting kernels or the producers: adjacency is
read into Python sets and copies are recounted by a separate backtracking
search, so a bug in the fast path cannot certify itself.
"""
from __future__ import annotations

from fractions import Fraction
from math import comb

from ..errors import CertificateError
from ..graph import OrderedGraph, Tournament
from .outcomes import (
    Blockade,
    BlockadeFound,
    CliqueOrStable,
    CopyWitness,
    LowDensitySet,
    RestrictedCandidate,
    RestrictedSet,
    SparsePair,
)


def _rows(g):
    m = g.out if isinstance(g, Tournament) else g.adj
    return [set(j for j, b in enumerate(row) if b) for row in m.tolist()]


def _side_rows(g, side):
    rows = _rows(g)
    if side == "graph":
        return rows
    if side == "complement":
        n = len(rows)
        return [set(range(n)) - r - {i} for i, r in enumerate(rows)]
    raise CertificateError(f"unknown side {side!r}")


def recount(pattern, g, host=None, stop_above=None):
    """Copies of ``pattern`` in ``g[host]`` by plain backtracking.

    With ``stop_above`` the search ends once the count exceeds it.
    """
    ordered = isinstance(g, OrderedGraph)
    prow = _rows(pattern)
    grow = _rows(g)
    verts = sorted(range(g.n) if host is None else set(int(v) for v in host))
    k = pattern.n
    img = []
    count = 0

    def fits(i, w):
        for j, u in enumerate(img):
            if u == w:
                return False
            if (j in prow[i]) != (u in grow[w]) or (i in prow[j]) != (w in grow[u]):
                return False
        return not (ordered and img and w < img[-1])

    def rec(i):
        nonlocal count
        if i == k:
            count += 1
            return stop_above is not None and count > stop_above
        for w in verts:
            if fits(i, w):
                img.append(w)
                done = rec(i + 1)
                img.pop()
                if done:
                    return True
        return False

    rec(0)
    return count


def max_side_degree(g, vertices, side):
    rows = _side_rows(g, side)
    s = set(vertices)
    return max((len(rows[v] & s) for v in s), default=0)


def side_edges(g, vertices, side):
    rows = _side_rows(g, side)
    s = set(vertices)
    return sum(len(rows[v] & s) for v in s) // 2


def check_restricted(g, vertices, side, eps):
    vs = list(vertices)
    if len(set(vs)) != len(vs) or not vs:
        raise CertificateError("restricted set is empty or repeats a vertex")
    top = max_side_degree(g, vs, side)
    if top > Fraction(eps) * len(vs):
        raise CertificateError(f"max degree {top} on side {side} exceeds {eps}*{len(vs)}")


def check_density(g, vertices, side, eps):
    e = side_edges(g, vertices, side)
    if e > Fraction(eps) * comb(len(set(vertices)), 2):
        raise CertificateError(f"{e} edges on side {side} exceed {eps}*C({len(vertices)},2)")


def check_blockade(g, blk: Blockade, min_length=None, min_width=None):
    side = {"sparse": "graph", "dense": "complement"}.get(blk.kind)
    if side is None:
        raise CertificateError(f"unknown blockade kind {blk.kind!r}")
    seen = set()
    for b in blk.blocks:
        if seen & set(b):
            raise CertificateError("blockade blocks overlap")
        seen |= set(b)
    rows = _side_rows(g, side)
    x = Fraction(blk.x)
    for i, bi in enumerate(blk.blocks):
        si = set(bi)
        for bj in blk.blocks[i + 1:]:
            for v in bj:
                if len(rows[v] & si) > x * len(si):
                    raise CertificateError(f"vertex {v} has too many {blk.kind} neighbours in an earlier block")
    if min_length is not None and blk.length < min_length:
        raise CertificateError(f"blockade length {blk.length} < {min_length}")
    if min_width is not None and blk.width < min_width:
        raise CertificateError(f"blockade width {blk.width} < {min_width}")


def check_sparse_pair(g, sp: SparsePair, min_a=None, min_b=None):
    a, b = set(sp.A), set(sp.B)
    if a & b:
        raise CertificateError("A and B overlap")
    rows = _rows(g)
    for v in b:
        if len(rows[v] & a) > Fraction(sp.x) * len(a):
            raise CertificateError(f"vertex {v} of B is not x-sparse to A")
    if min_a is not None and len(a) < min_a:
        raise CertificateError(f"|A| = {len(a)} < {min_a}")
    if min_b is not None and len(b) < min_b:
        raise CertificateError(f"|B| = {len(b)} < {min_b}")


def check_candidate(g, rc: RestrictedCandidate):
    got = recount(rc.pattern, g, rc.vertices, stop_above=int(rc.bound))
    if got != rc.count or got > rc.bound:
        raise CertificateError(f"candidate recount {got} vs claimed {rc.count}, bound {rc.bound}")


def check_witness(g, w: CopyWitness):
    t = Fraction(w.threshold)
    floor_t = t.numerator // t.denominator
    got = recount(w.pattern, g, w.host, stop_above=max(floor_t, 0))
    if not got > t:
        raise CertificateError(f"witness recount {got} does not exceed {t}")


def check_clique_or_stable(g, cs: CliqueOrStable):
    side = {"stable": "graph", "clique": "complement"}.get(cs.kind)
    if side is None:
        raise CertificateError(f"unknown kind {cs.kind!r}")
    if cs.vertices and max_side_degree(g, cs.vertices, side) != 0:
        raise CertificateError(f"set is not a {cs.kind}")


def certify(g, outcome, **bounds):
    """Re-verify ``outcome`` against ``g``; raise :class:`CertificateError` on failure."""
    if isinstance(outcome, RestrictedSet):
        check_restricted(g, outcome.vertices, outcome.side, outcome.eps)
    elif isinstance(outcome, LowDensitySet):
        check_density(g, outcome.vertices, outcome.side, outcome.eps)
    elif isinstance(outcome, BlockadeFound):
        check_blockade(g, outcome.blockade, **bounds)
    elif isinstance(outcome, Blockade):
        check_blockade(g, outcome, **bounds)
    elif isinstance(outcome, SparsePair):
        check_sparse_pair(g, outcome, **bounds)
    elif isinstance(outcome, RestrictedCandidate):
        check_candidate(g, outcome)
    elif isinstance(outcome, CopyWitness):
        check_witness(g, outcome)
    elif isinstance(outcome, CliqueOrStable):
        check_clique_or_stable(g, outcome)
    else:
        raise CertificateError(f"cannot certify {type(outcome).__name__}")
    return True
