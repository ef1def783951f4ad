"""Hot loops: induced-copy backtracking, greedy peeling, exhaustive restricted search.

Each kernel has an ``@njit`` body and a pure-numpy twin.  Which one runs is
decided by :mod:`ehgraphs._accel` (``EHGRAPHS_PURE_NUMPY``).  Both paths
return identical results.
"""
from __future__ import annotations

import numpy as np

from ._accel import HAVE_NUMBA, njit

def pack_rows(a):
    """Pack a boolean ``r x n`` matrix into ``r x W`` little-endian uint64 words."""
    a = np.asarray(a, dtype=bool)
    n = a.shape[1]
    words = max(1, (n + 63) // 64)
    padded = np.zeros((a.shape[0], words * 64), dtype=bool)
    padded[:, :n] = a
    packed = np.packbits(padded, axis=1, bitorder="little")
    return np.ascontiguousarray(packed).view(np.uint64).reshape(a.shape[0], words)


def full_words(n):
    return pack_rows(np.ones((1, n), dtype=bool))[0] if n else np.zeros(1, dtype=np.uint64)


# ------------------------------------------------------------- copy counting


@njit(cache=True)
def _ctz(x):
    n = 0
    if x & np.uint64(0xFFFFFFFF) == 0:
        n += 32
        x >>= np.uint64(32)
    if x & np.uint64(0xFFFF) == 0:
        n += 16
        x >>= np.uint64(16)
    if x & np.uint64(0xFF) == 0:
        n += 8
        x >>= np.uint64(8)
    if x & np.uint64(0xF) == 0:
        n += 4
        x >>= np.uint64(4)
    if x & np.uint64(0x3) == 0:
        n += 2
        x >>= np.uint64(2)
    if x & np.uint64(0x1) == 0:
        n += 1
    return n


@njit(cache=True)
def _range_word(w, lo, hi):
    # bits b of word w with lo < 64*w + b < hi
    start = lo + 1 - 64 * w
    end = hi - 64 * w
    if start < 0:
        start = 0
    if end > 64:
        end = 64
    if end <= start:
        return np.uint64(0)
    if end == 64:
        upper = np.uint64(0xFFFFFFFFFFFFFFFF)
    else:
        upper = (np.uint64(1) << np.uint64(end)) - np.uint64(1)
    lower = (np.uint64(1) << np.uint64(start)) - np.uint64(1)
    return upper & ~lower


@njit(cache=True)
def _count_nb(adjw, nadjw, fullw, n, rel, gt, ordered, limit):
    h = rel.shape[0]
    if h == 0:
        return 1
    words = adjw.shape[1]
    cand = np.zeros((h, words), dtype=np.uint64)
    cur = np.zeros(h, dtype=np.uint64)
    wi = np.zeros(h, dtype=np.int64)
    mapped = np.zeros(h, dtype=np.int64)
    for w in range(words):
        cand[0, w] = fullw[w]
    cur[0] = cand[0, 0]
    level = 0
    count = 0
    while level >= 0:
        c = cur[level]
        while c == 0 and wi[level] < words - 1:
            wi[level] += 1
            c = cand[level, wi[level]]
        if c == 0:
            level -= 1
            continue
        low = c & (~c + np.uint64(1))
        cur[level] = c ^ low
        v = wi[level] * 64 + _ctz(low)
        mapped[level] = v
        if level == h - 1:
            count += 1
            if limit >= 0 and count > limit:
                return count
            continue
        nl = level + 1
        lo = -1
        hi = n
        if ordered:
            for j in range(nl):
                if gt[nl, j]:
                    if mapped[j] > lo:
                        lo = mapped[j]
                else:
                    if mapped[j] < hi:
                        hi = mapped[j]
        for w in range(words):
            x = fullw[w]
            for j in range(nl):
                if rel[nl, j]:
                    x &= adjw[mapped[j], w]
                else:
                    x &= nadjw[mapped[j], w]
            if ordered:
                x &= _range_word(w, lo, hi)
            cand[nl, w] = x
        wi[nl] = 0
        cur[nl] = cand[nl, 0]
        level = nl
    return count


class _Stop(Exception):
    pass


def _count_np(adj, nadj, n, rel, gt, ordered, limit):
    h = rel.shape[0]
    if h == 0:
        return 1
    mapped = np.zeros(h, dtype=np.int64)
    total = [0]
    idx = np.arange(n)

    def rec(level, cand):
        for v in np.flatnonzero(cand):
            mapped[level] = v
            if level == h - 1:
                total[0] += 1
                if 0 <= limit < total[0]:
                    raise _Stop
                continue
            nl = level + 1
            nxt = np.ones(n, dtype=bool)
            for j in range(nl):
                nxt &= adj[mapped[j]] if rel[nl, j] else nadj[mapped[j]]
            if ordered:
                lo = max([mapped[j] for j in range(nl) if gt[nl, j]], default=-1)
                hi = min([mapped[j] for j in range(nl) if not gt[nl, j]], default=n)
                nxt &= (idx > lo) & (idx < hi)
            if nxt.any():
                rec(nl, nxt)

    try:
        rec(0, np.ones(n, dtype=bool))
    except _Stop:
        pass
    return total[0]


def pattern_plan(pattern_adj, ordered):
    """Match order for a pattern plus relation tables in that order.

    Highest degree first, then the vertex with most links to those already
    placed; ties go to the lower index.
    """
    p = np.asarray(pattern_adj, dtype=bool)
    h = p.shape[0]
    sym = p | p.T
    deg = sym.sum(axis=1)
    order = []
    left = list(range(h))
    while left:
        def key(v):
            links = sum(1 for u in order if sym[u, v])
            return (-links, -int(deg[v]), v)

        v = min(left, key=key) if order else min(left, key=lambda v: (-int(deg[v]), v))
        order.append(v)
        left.remove(v)
    rel = np.zeros((h, h), dtype=np.int8)
    gt = np.zeros((h, h), dtype=np.int8)
    for k in range(h):
        for j in range(k):
            rel[k, j] = 1 if p[order[j], order[k]] else 0
            gt[k, j] = 1 if order[k] > order[j] else 0
    return order, rel, gt


def count_induced(pattern_adj, host_adj, ordered=False, limit=-1):
    """Number of induced copies (injective maps) of a pattern in a host.

    ``pattern_adj`` / ``host_adj`` may be directed (tournament out-matrices).
    With ``limit >= 0`` the search stops as soon as the count exceeds it.
    """
    host = np.asarray(host_adj, dtype=bool)
    n = host.shape[0]
    h = np.asarray(pattern_adj).shape[0]
    if h > n:
        return 0
    _, rel, gt = pattern_plan(pattern_adj, ordered)
    nadj = ~host & ~np.eye(n, dtype=bool)
    if HAVE_NUMBA:
        if n == 0:
            return 1 if h == 0 else 0
        return int(_count_nb(pack_rows(host), pack_rows(nadj), full_words(n), n, rel, gt, bool(ordered), int(limit)))
    return int(_count_np(host, nadj, n, rel, gt, bool(ordered), int(limit)))


# ------------------------------------------------------------- greedy peeling


@njit(cache=True)
def _peel_nb(adj, allowed):
    n = adj.shape[0]
    deg = np.zeros(n, dtype=np.int64)
    for i in range(n):
        for j in range(n):
            if adj[i, j]:
                deg[i] += 1
    alive = np.ones(n, dtype=np.bool_)
    order = np.zeros(n, dtype=np.int64)
    size = n
    removed = 0
    while size > 0:
        best = -1
        bestdeg = -1
        for v in range(n):
            if alive[v] and deg[v] > bestdeg:
                bestdeg = deg[v]
                best = v
        if bestdeg <= allowed[size]:
            return order, removed
        alive[best] = False
        order[removed] = best
        removed += 1
        size -= 1
        for u in range(n):
            if alive[u] and adj[best, u]:
                deg[u] -= 1
    return order, removed


def _peel_np(adj, allowed):
    n = adj.shape[0]
    deg = adj.sum(axis=1).astype(np.int64)
    alive = np.ones(n, dtype=bool)
    order = np.zeros(n, dtype=np.int64)
    size = n
    removed = 0
    while size > 0:
        masked = np.where(alive, deg, -1)
        best = int(np.argmax(masked))
        if masked[best] <= allowed[size]:
            break
        alive[best] = False
        order[removed] = best
        removed += 1
        size -= 1
        deg -= adj[best].astype(np.int64)
    return order, removed


def peel(adj, allowed):
    """Remove max-degree vertices (lowest index on ties) until every remaining
    degree is at most ``allowed[size]``.  Returns the kept vertex indices."""
    a = np.ascontiguousarray(np.asarray(adj, dtype=np.bool_))
    allowed = np.ascontiguousarray(np.asarray(allowed, dtype=np.int64))
    fn = _peel_nb if HAVE_NUMBA else _peel_np
    order, removed = fn(a, allowed)
    gone = set(int(v) for v in order[:removed])
    return [v for v in range(a.shape[0]) if v not in gone]


# ------------------------------------------------- exhaustive restricted search


@njit(cache=True)
def _popcount(x):
    c = 0
    while x:
        x &= x - 1
        c += 1
    return c


@njit(cache=True)
def _exhaustive_nb(masks, allowed):
    n = masks.shape[0]
    best = 0
    bestsize = 0
    for mask in range(1, 1 << n):
        s = _popcount(mask)
        if s < bestsize:
            continue
        ok = True
        rest = mask
        while rest:
            low = rest & (-rest)
            v = _popcount(low - 1)
            rest ^= low
            if _popcount(masks[v] & mask) > allowed[s]:
                ok = False
                break
        if not ok:
            continue
        if s > bestsize:
            best = mask
            bestsize = s
        else:
            diff = mask ^ best
            if diff & (-diff) & mask:
                best = mask
    return best


def _exhaustive_np(masks, allowed):
    n = masks.shape[0]
    all_masks = np.arange(1 << n, dtype=np.int64)
    sizes = np.bitwise_count(all_masks).astype(np.int64)
    limit = allowed[sizes]
    ok = np.ones(all_masks.shape, dtype=bool)
    for v in range(n):
        member = (all_masks >> v) & 1
        deg = np.bitwise_count(all_masks & masks[v]).astype(np.int64)
        ok &= ~((member == 1) & (deg > limit))
    ok[0] = False
    if not ok.any():
        return 0
    top = sizes[ok].max()
    cands = all_masks[ok & (sizes == top)]
    rev = np.zeros_like(cands)
    for v in range(n):
        rev |= ((cands >> v) & 1) << (n - 1 - v)
    return int(cands[np.argmax(rev)])


def exhaustive_restricted(masks, allowed):
    """Largest vertex set whose induced degrees are all ``<= allowed[size]``,
    lexicographically least among the largest.  Returns a bitmask."""
    m = np.asarray(masks, dtype=np.int64)
    allowed = np.asarray(allowed, dtype=np.int64)
    if m.shape[0] == 0:
        return 0
    fn = _exhaustive_nb if HAVE_NUMBA else _exhaustive_np
    return int(fn(m, allowed))
