"""The recursive extraction driver.

``viral_extract`` follows the induction for a pattern pair ``{H, complement
of J}`` with ``H, J`` in K:

1. too many copies of a family member gives a :class:`CopyWitness`;
2. a pattern on at most two vertices forces low density on one side, and
   degree pruning finishes;
3. a non-prime pattern is split at a module and the two smaller families are
   tried, the second one inside extension sets of copies of the first;
4. a prime pair starts the nested sequence with a ``c^2``-restricted set,
   then alternates blockade growth with recursion into the shortened pair.

Whenever a stage cannot certify anything at the current scale (size floors
below one, a provider failing, a recursion returning a witness), the driver
falls back to a direct restricted-set search.  The return value is always
re-verified before it leaves the module.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import ceil, floor

from ..classes import in_J, in_K, order_into_K
from ..counting import count_copies, count_extensions, iter_copies
from ..decomposition import find_module, quotient
from ..errors import BlockadeError, CertificateError, DomainError
from ..graph import Graph, OrderedGraph
from .leaf import end_leaf, grow_blockade
from .outcomes import BlockadeFound, CliqueOrStable, CopyWitness, RestrictedSet
from .params import Params
from .restricted import degree_prune, restricted_subset_search
from .transfer import blockade_to_sparse_set, restricted_to_blockade
from .verify import certify, check_clique_or_stable

MAX_EXTENSION_TRIES = 256


@dataclass
class _Ctx:
    params: Params
    seed: int
    full: bool
    trace: list = field(default_factory=list)
    calls: int = 0

    def log(self, depth, text):
        self.trace.append(f"{'  ' * depth}{text}")


def _key(p: OrderedGraph):
    return (p.n, p.adj.tobytes())


def _flip(out):
    if isinstance(out, RestrictedSet):
        side = "complement" if out.side == "graph" else "graph"
        return RestrictedSet(out.vertices, side, out.eps, out.meta)
    if isinstance(out, CopyWitness):
        return CopyWitness(out.pattern.complement(), out.host, out.count, out.threshold)
    return out


def _restricted(g, vs, eps):
    """The side on which ``vs`` is already ``eps``-restricted, or ``None``."""
    if not vs:
        return None
    sub = g.induced(vs).adj
    n = len(vs)
    best = None
    for side in ("graph", "complement"):
        top = int(sub.sum(axis=1).max()) if side == "graph" else int((n - 1 - sub.sum(axis=1)).max())
        if top <= eps * n:
            edges = int(sub.sum()) // 2 if side == "graph" else n * (n - 1) // 2 - int(sub.sum()) // 2
            if best is None or edges < best[0]:
                best = (edges, side)
    return None if best is None else best[1]


def _fallback(g, vs, eps, ctx, depth, reason):
    ctx.log(depth, f"fallback search ({reason})")
    r = restricted_subset_search(g, eps, vertices=vs)
    return RestrictedSet(r.vertices, r.side, eps, (("route", "fallback"), ("reason", reason)))


def _viral(H, J, g, gc, vs, eps, ctx, depth):
    """Restricted set of ``g[vs]`` or a witness, for the family ``{H, complement of J}``."""
    d = ctx.params.d
    n = len(vs)
    scale = eps ** d * n
    sub = g.induced(vs)
    jbar = J.complement()
    members = sorted([(H, H), (J, jbar)], key=lambda t: _key(t[0]))
    for _, p in members:
        thr = scale ** p.n
        c = count_copies(p, sub, limit=floor(thr))
        if c > thr:
            ctx.log(depth, f"witness: {c} copies of a {p.n}-vertex member > {float(thr):.3g}")
            return CopyWitness(p, tuple(vs), c, thr)

    side = _restricted(g, vs, eps)
    if side is not None:
        return RestrictedSet(tuple(vs), side, eps, (("route", "whole"),))

    if H.n <= 2 or J.n <= 2:
        small = [(base, p) for base, p in members if base.n <= 2]
        _, p = small[0]
        side = "graph" if p.num_edges() else "complement"
        try:
            out = degree_prune(g, vs, eps, side)
        except DomainError as err:
            return _fallback(g, vs, eps, ctx, depth, f"base case: {err}")
        ctx.log(depth, f"base case: pruned to {len(out.vertices)} on side {side}")
        return out

    for base, _ in members:
        m = find_module(base)
        if m is None:
            continue
        if base is H:
            return _substitution(H, J, m, g, gc, vs, eps, ctx, depth)
        return _flip(_substitution(J, H, m, gc, g, vs, eps, ctx, depth))

    return _prime(H, J, g, gc, vs, eps, ctx, depth)


def _substitution(H, J, module, g, gc, vs, eps, ctx, depth):
    """``H = H1`` with ``H2`` substituted at ``v``: try ``{H1, J}``, then ``{H2, J}``
    inside the extension sets of copies of ``H1 - v``."""
    mod = list(module.vertices)
    h1, kept = quotient(H, mod)
    v = kept.index(min(mod))
    h2 = H.induced(mod)
    ctx.log(depth, f"split {H.n}-vertex pattern into {h1.n} + {h2.n}")
    first = _viral(h1, J, g, gc, vs, eps, ctx, depth + 1)
    if isinstance(first, RestrictedSet):
        return first
    d = ctx.params.d
    need = eps ** (d * h1.n + 1) * len(vs)
    rest = [p for p in range(h1.n) if p != v]
    h1v = h1.induced(rest)
    tries = 0
    for phi in iter_copies(h1v, g, restrict_to=vs):
        cnt, ext = count_extensions(phi, h1, v, g, restrict_to=vs)
        if cnt < need or not ext:
            continue
        tries += 1
        second = _viral(h2, J, g, gc, tuple(sorted(ext)), eps, ctx, depth + 1)
        if isinstance(second, RestrictedSet):
            ctx.log(depth, f"restricted set inside an extension set of size {len(ext)}")
            return second
        if tries >= MAX_EXTENSION_TRIES:
            break
    return _fallback(g, vs, eps, ctx, depth, "substitution recursion exhausted")


def _divisive_blockade(H, J, g, gc, vs, x, ctx, depth):
    """Blockade of ``g[vs]`` via the nested restricted sequence, or BlockadeError."""
    p = ctx.params
    c, d, a = p.c, p.d, p.a
    cur = restricted_subset_search(g, c * c, vertices=vs)
    y = c
    while y > x:
        side = _restricted(g, cur.vertices, y * y)
        if side is None:
            raise BlockadeError("sequence set lost its restriction", vs)
        host, pat = (g, H) if side == "graph" else (gc, J)
        if end_leaf(pat) is None:
            raise BlockadeError("pattern has no end leaf", vs)
        try:
            res = grow_blockade(pat, host.induced(cur.vertices), x, y, a)
        except DomainError as err:
            raise BlockadeError(f"blockade growth: {err}", vs) from err
        lab = cur.vertices
        if isinstance(res, BlockadeFound):
            blk = res.blockade
            blocks = tuple(tuple(lab[i] for i in b) for b in blk.blocks)
            kind = "sparse" if side == "graph" else "dense"
            return type(blk)(blocks, kind, blk.x, blk.clamped)
        if isinstance(res, CopyWitness):
            raise BlockadeError("too many copies inside the sequence set", vs)
        cand = tuple(lab[i] for i in res.vertices)
        nxt = y ** (2 * d)
        # the candidate certifies its own shortened family, so that one goes first
        f1 = ("F1", _drop_leaf(H), J)
        f2 = ("F2", H, _drop_leaf(J))
        for name, hh, jj in ((f1, f2) if side == "graph" else (f2, f1)):
            if hh is None or jj is None:
                continue
            out = _viral(hh, jj, g, gc, cand, nxt, ctx, depth + 1)
            if isinstance(out, RestrictedSet):
                ctx.log(depth, f"sequence step via {name}: {len(out.vertices)} vertices")
                cur = out
                break
        else:
            raise BlockadeError("neither shortened family produced a set", vs)
        y = nxt
    side = _restricted(g, cur.vertices, x * x)
    try:
        return restricted_to_blockade(g, cur.vertices, x, side)
    except DomainError as err:
        raise BlockadeError(f"final blockade: {err}", vs) from err


def _drop_leaf(p):
    v = end_leaf(p)
    if v is None:
        return None
    return p.induced([q for q in range(p.n) if q != v])


def _prime(H, J, g, gc, vs, eps, ctx, depth):
    p = ctx.params
    first = restricted_subset_search(g, p.c * p.c, vertices=vs)
    target = ceil(eps ** p.d * len(vs))
    if not ctx.full and len(first.vertices) >= target:
        ctx.log(depth, f"first sequence set: {len(first.vertices)} vertices, already {eps}-restricted")
        return RestrictedSet(first.vertices, first.side, eps, (("route", "sequence"),))
    dt = p.d + 1
    weak = eps / 4
    x = weak ** (12 * dt)
    sub = g.induced(vs)

    def provider(part):
        labels = tuple(vs[i] for i in part)
        blk = _divisive_blockade(H, J, g, gc, labels, x, ctx, depth + 1)
        pos = {w: i for i, w in enumerate(vs)}
        return type(blk)(tuple(tuple(pos[w] for w in b) for b in blk.blocks), blk.kind, blk.x, blk.clamped)

    ctx.calls += 1
    try:
        low = blockade_to_sparse_set(sub, weak, dt, provider, seed=ctx.seed + ctx.calls)
        out = degree_prune(sub, low.vertices, eps, low.side)
    except (BlockadeError, DomainError, CertificateError) as err:
        return _fallback(g, vs, eps, ctx, depth, f"blockade route: {err}")
    ctx.log(depth, f"blockade route: {len(out.vertices)} vertices")
    return RestrictedSet(tuple(vs[i] for i in out.vertices), out.side, eps, (("route", "blockade"),))


def _default_params(h, j, params):
    if params is not None:
        return params
    return Params(h=max(h.n, j.n, 4))


def viral_extract(h, j, g, eps, params=None, seed=0, full=False, trace=None):
    """Restricted set or copy witness for ``g`` and the family ``{h, complement of j}``.

    ``full=True`` runs the blockade route even when the first sequence set
    already answers.  Events are appended to ``trace`` when a list is given.
    """
    for p in (h, j):
        if not isinstance(p, OrderedGraph):
            raise DomainError("patterns must be ordered graphs")
        if not in_K(p):
            raise DomainError("pattern is not in K")
    if not isinstance(g, OrderedGraph):
        raise DomainError("host must be an ordered graph")
    eps = Fraction(eps)
    if not 0 < eps < Fraction(1, 2):
        raise DomainError("eps must lie in (0, 1/2)")
    if g.n == 0:
        raise DomainError("empty host")
    ctx = _Ctx(_default_params(h, j, params), int(seed), bool(full))
    out = _viral(h, j, g, g.complement(), tuple(range(g.n)), eps, ctx, 0)
    if trace is not None:
        trace.extend(ctx.trace)
    certify(g, out)
    return out


def unordered_extract(h1, h2, g, eps, params=None, seed=0, full=False, trace=None):
    """Family ``{h1, complement of h2}`` with ``h1, h2`` in J, on an unordered host.

    The host is taken in index order and the patterns are ordered into K; a
    witness for an ordered pattern is re-counted for its underlying graph.
    """
    for p in (h1, h2):
        if not isinstance(p, Graph) or not in_J(p):
            raise DomainError("patterns must be graphs in J")
    if not isinstance(g, Graph):
        raise DomainError("host must be a graph")
    oh, _ = order_into_K(h1)
    oj, _ = order_into_K(h2)
    out = viral_extract(oh, oj, OrderedGraph(g), eps, params, seed, full, trace)
    if isinstance(out, CopyWitness):
        under = out.pattern.graph
        cnt = count_copies(under, g.induced(out.host), limit=floor(out.threshold))
        out = CopyWitness(under, out.host, cnt, out.threshold)
        certify(g, out)
    return out


def _uniform(g, vs):
    """``"clique"``, ``"stable"``, ``"both"`` (at most one vertex) or ``None``."""
    if len(vs) <= 1:
        return "both"
    e = g.induced(vs).num_edges()
    if e == 0:
        return "stable"
    if e == len(vs) * (len(vs) - 1) // 2:
        return "clique"
    return None


def eh_extract(h, j, g, seed=0, eps0=Fraction(1, 4), params=None, full=False, c_exponent=None, trace=None):
    """Clique or stable set, by restricting with ``eps`` halving from ``eps0``.

    Works on graphs (patterns in J) or ordered graphs (patterns in K).  A
    witness round falls back to a plain restricted-set search and is noted in
    the schedule.  With ``c_exponent`` the schedule records whether the result
    reaches ``|g|^c``.
    """
    if isinstance(g, OrderedGraph):
        step = viral_extract
    elif isinstance(g, Graph):
        step = unordered_extract
    else:
        raise DomainError("host must be a graph or an ordered graph")
    vs = tuple(range(g.n))
    eps = Fraction(eps0)
    schedule = []
    last = "graph"
    while True:
        kind = _uniform(g, vs)
        if kind is not None:
            break
        sub = g.induced(vs)
        out = step(h, j, sub, eps, params, seed, full, trace)
        if isinstance(out, CopyWitness):
            schedule.append(("witness", str(eps), out.count))
            out = restricted_subset_search(sub, eps)
        route = dict(out.meta).get("route", "search")
        vs = tuple(vs[i] for i in out.vertices)
        last = out.side
        schedule.append(("round", str(eps), len(vs), out.side, route))
        eps /= 2
    if kind == "both":
        kind = "stable" if last == "graph" else "clique"
    if c_exponent is not None:
        need = Fraction(g.n) ** Fraction(c_exponent) if g.n else 0
        schedule.append(("exponent", str(c_exponent), len(vs) >= need))
    res = CliqueOrStable(vs, kind, tuple(schedule))
    check_clique_or_stable(g, res)
    return res
