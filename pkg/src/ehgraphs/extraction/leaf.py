"""Sparse pairs and sparse blockades from a pattern with a degree-one end vertex."""
from __future__ import annotations

from fractions import Fraction
from math import ceil, floor

from ..counting import count_copies, count_extensions, iter_copies
from ..errors import CertificateError, DomainError
from ..graph import OrderedGraph
from .outcomes import Blockade, BlockadeFound, CopyWitness, RestrictedCandidate, SparsePair


def end_leaf(h: OrderedGraph):
    """The end vertex of degree one (last preferred), or ``None``."""
    if h.n < 2:
        return None
    deg = h.degrees
    for v in (h.n - 1, 0):
        if deg[v] == 1:
            return v
    return None


def _check_common(h, x, y, a):
    if not isinstance(h, OrderedGraph):
        raise DomainError("pattern must be an ordered graph")
    if h.n < 2:
        raise DomainError("pattern needs at least two vertices")
    v = end_leaf(h)
    if v is None:
        raise DomainError("pattern has no end vertex of degree one")
    x, y = Fraction(x), Fraction(y)
    if not 0 < x <= y:
        raise DomainError("need 0 < x <= y")
    if int(a) != a or a < 2:
        raise DomainError("a must be an integer >= 2")
    return v, x, y, int(a)


def _max_degree(g, vs):
    if len(vs) < 2:
        return 0
    return int(g.induced(vs).degrees.max())


def _sparse_pair(h, g, vs, v, x, y, a):
    n = len(vs)
    k = h.n
    head = ceil(y * n)
    S = vs[:head] if v == k - 1 else vs[n - head:]
    hp = h.induced([p for p in range(k) if p != v])
    bound = y ** (a - 2) * Fraction(len(S)) ** (k - 1)
    c = count_copies(hp, g.induced(S), limit=floor(bound))
    if c <= bound:
        return RestrictedCandidate(tuple(S), hp, bound, c)

    need_b = (1 - k * y) * n
    if y ** a * n < 1:
        # floor(y^a n) = 0, so the pair holds with A empty; try a one-vertex A
        deg = g.induced(S).degrees.tolist() if len(S) > 1 else [0] * len(S)
        pick = S[min(range(len(S)), key=lambda i: (deg[i], i))]
        nb = set(g.neighbours(pick))
        B = tuple(w for w in vs if w != pick and w not in nb)
        if len(B) >= need_b:
            return SparsePair((pick,), B, x, clamped=True)
        return SparsePair((), tuple(vs), x)

    u = h.neighbours(v)[0]
    u_in_hp = u if u < v else u - 1
    j = hp.induced([p for p in range(k - 1) if p != u_in_hp])
    in_s = set(S)
    outside = [w for w in vs if w not in in_s]
    big = y ** a * n
    size_a = ceil(big)
    for phi in iter_copies(j, g, restrict_to=S):
        cnt, ext = count_extensions(phi, hp, u_in_hp, g, restrict_to=S)
        if cnt < big:
            continue
        A = tuple(sorted(ext)[:size_a])
        aset = set(A)
        p_nb = set()
        for p in phi:
            p_nb.update(g.neighbours(p))
        B = tuple(
            w for w in outside
            if w not in p_nb and sum(1 for q in g.neighbours(w) if q in aset) <= x * len(A)
        )
        if len(B) >= need_b:
            return SparsePair(A, B, x)

    threshold = x ** (2 * a + k) * Fraction(n) ** k
    total = count_copies(h, g.induced(vs), limit=floor(threshold))
    if total > threshold:
        return CopyWitness(h, tuple(vs), total, threshold)
    raise CertificateError("sparse pair: no outcome could be certified")


def sparse_pair(h, g, x, y, a, vertices=None):
    """One of three outcomes for a host of maximum degree at most ``y |g|``.

    * :class:`CopyWitness`: more than ``x^(2a+h) |g|^h`` copies of ``h``;
    * :class:`RestrictedCandidate`: the first ``ceil(y |g|)`` vertices hold at
      most ``y^(a-2) |S|^(h-1)`` copies of ``h`` minus its end leaf;
    * :class:`SparsePair`: ``|A| >= floor(y^a |g|)``, ``|B| >= (1 - h y)|g|``
      and ``B`` is ``x``-sparse to ``A``.

    ``vertices`` restricts the host to an induced subgraph (labels kept).
    """
    v, x, y, a = _check_common(h, x, y, a)
    if y > Fraction(1, 2 * h.n):
        raise DomainError("need y <= 1/(2h)")
    vs = tuple(range(g.n)) if vertices is None else tuple(sorted(int(w) for w in vertices))
    if not vs:
        raise DomainError("empty host")
    if _max_degree(g, vs) > y * len(vs):
        raise DomainError("host maximum degree exceeds y|g|")
    return _sparse_pair(h, g, vs, v, x, y, a)


def grow_blockade(h, g, x, y, a):
    """Iterate :func:`sparse_pair` on the residual set to build an ``x``-sparse
    blockade of length ``ceil(1/y)``.

    Needs maximum degree at most ``y^2 |g|`` and ``x <= y <= 4^-h``.  A
    witness or candidate from any round is returned unchanged; each round's
    ``A`` becomes a block and the final residual closes the blockade.
    """
    v, x, y, a = _check_common(h, x, y, a)
    if y > Fraction(1, 4 ** h.n):
        raise DomainError("need y <= 4^-h")
    n = g.n
    if n == 0:
        raise DomainError("empty host")
    if _max_degree(g, tuple(range(n))) > y * y * n:
        raise DomainError("host maximum degree exceeds y^2|g|")
    length = ceil(1 / y)
    if length > n + 1:
        raise DomainError(f"blockade length {length} exceeds the host size")
    blocks = []
    rest = tuple(range(n))
    clamped = False
    while len(blocks) + 1 < length:
        if _max_degree(g, rest) > y * len(rest):
            raise CertificateError("residual block lost the degree bound")
        out = _sparse_pair(h, g, rest, v, x, y, a)
        if not isinstance(out, SparsePair):
            return out
        blocks.append(out.A)
        rest = out.B
        clamped = clamped or out.clamped
    blocks.append(rest)
    return BlockadeFound(Blockade(tuple(blocks), "sparse", x, clamped))
