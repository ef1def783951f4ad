"""Acceptance criteria 1-9.

Each criterion is one test.  The outcome line for every criterion is
collected and printed in the pytest terminal summary; running this file as
a script prints the same lines.
"""
from __future__ import annotations

import hashlib
import json
import math
import subprocess
import sys
import time
from collections import Counter
from itertools import combinations, permutations, product
from pathlib import Path

import numpy as np
import pytest

from ehgraphs import Graph, OrderedGraph, Tournament, complement
from ehgraphs import classes
from ehgraphs.counting import count_copies
from ehgraphs.decomposition import is_prime
from ehgraphs.enumeration import (
    all_graphs, enumerate_prime_in_H, fig1_fixtures, fig2_fixture, fig2_ordered, fig3_fixtures, fig4_fixtures,
)
from ehgraphs.extraction import BlockadeFound, CopyWitness, RestrictedCandidate, SparsePair, certify, eh_extract
from ehgraphs.extraction import grow_blockade, sparse_pair
from ehgraphs.generators import random_bull_free, random_graph, random_small_pieces_tournament
from ehgraphs.graph import bull, canonical_form, is_isomorphic, path, star
from ehgraphs.tournaments import backedge, from_backedge, prime_Q_member, transitive_extract

sys.path.insert(0, str(Path(__file__).parent))
from _instances import blockade_instance, sparse_pair_instance  # noqa: E402

try:
    from conftest import ACCEPTANCE_LINES, ACCEPTANCE_TABLE
except ImportError:  # pragma: no cover - script use without pytest
    ACCEPTANCE_LINES, ACCEPTANCE_TABLE = {}, []

SIZE_TABLE = []


def record(num, ok, detail):
    line = f"criterion {num}: {'PASS' if ok else 'FAIL'}  {detail}"
    ACCEPTANCE_LINES[num] = line
    print(line)
    return ok


# ---------------------------------------------------------------- oracles


def automorphisms(h):
    k = h.n
    a = h.adj
    return sum(1 for p in permutations(range(k)) if all(a[i, j] == a[p[i], p[j]] for i in range(k) for j in range(k)))


def subset_counts(g, k, ordered):
    """Histogram of induced k-subsets: canonical forms, or exact adjacency bytes when ordered."""
    hist = Counter()
    for s in combinations(range(g.n), k):
        sub = g.adj[np.ix_(s, s)]
        hist[sub.tobytes() if ordered else canonical_form(Graph(sub))] += 1
    return hist


def labelled_graphs(k):
    pairs = list(combinations(range(k), 2))
    for bits in product((0, 1), repeat=len(pairs)):
        yield Graph.from_edges(k, [p for p, b in zip(pairs, bits) if b])


def split_by_search(g):
    n = g.n
    for c in range(1 << n):
        clique = [v for v in range(n) if c >> v & 1]
        stable = [v for v in range(n) if not c >> v & 1]
        if all(g.adj[u, v] for u, v in combinations(clique, 2)) and not any(
            g.adj[u, v] for u, v in combinations(stable, 2)
        ):
            return True
    return False


# -------------------------------------------------------------- criteria


def test_criterion_1_catalog():
    t0 = time.perf_counter()
    got = {n: enumerate_prime_in_H(n) for n in range(4, 8)}
    elapsed = time.perf_counter() - t0
    fig1 = fig1_fixtures()
    six = sorted(canonical_form(g) for g in fig1 if g.n == 6)
    seven = [g for g in fig1 if g.n == 7]
    ok = (
        len(got[4]) == 1 and is_isomorphic(got[4][0], path(4))
        and len(got[5]) == 1 and is_isomorphic(got[5][0], bull())
        and len(got[6]) == 2 and sorted(canonical_form(g) for g in got[6]) == six
        and len(got[7]) >= 1 and len(seven) == 1
        and any(is_isomorphic(g, seven[0]) for g in got[7])
        and elapsed < 300
    )
    counts = ", ".join(f"n={n}: {len(v)}" for n, v in got.items())
    assert record(1, ok, f"{counts}; catalog fixtures matched; {elapsed:.1f}s (limit 300s)")


def test_criterion_2_char_equivalence():
    t0 = time.perf_counter()
    total = exceptions = 0
    sizes = []
    for n in range(7):
        gs = all_graphs(n)
        sizes.append(len(gs))
        for g in gs:
            total += 1
            if classes.in_H(g) != (classes.in_J(g) and classes.in_J(complement(g))):
                exceptions += 1
    elapsed = time.perf_counter() - t0
    ok = exceptions == 0 and sizes[6] == 156 and elapsed < 60
    assert record(2, ok, f"{total} classes (156 at n=6), {exceptions} exceptions, {elapsed:.1f}s (limit 60s)")


def test_criterion_3_split():
    checked = exceptions = 0
    per_n = []
    for n in range(3, 9):
        gs = enumerate_prime_in_H(n)
        per_n.append(f"{n}:{len(gs)}")
        for g in gs:
            checked += 1
            if not (split_by_search(g) and classes.is_split(g) and classes.is_split_degrees(g)):
                exceptions += 1
    ok = exceptions == 0 and checked > 0
    assert record(3, ok, f"{checked} prime members of H ({' '.join(per_n)}), {exceptions} not split")


def test_criterion_4_figures():
    f2 = fig2_fixture()
    o2 = fig2_ordered(6)
    f4 = fig4_fixtures()
    f3 = fig3_fixtures()
    in_l = [i + 1 for i, g in enumerate(f4) if classes.in_L(g)]
    checks = {
        "fig2 in H": classes.in_H(f2),
        "fig2 order in L and prime": classes.in_L(o2) and is_prime(o2) and is_isomorphic(o2.graph, f2),
        "fig4 seven prime": len(f4) == 7 and all(is_prime(g) for g in f4),
        "fig4 L positions": in_l == [1, 5, 7],
        "fig3 four outside H": len(f3) == 4 and not any(classes.in_H(g) for g in f3),
    }
    bad = [k for k, v in checks.items() if not v]
    assert record(4, not bad, f"L positions {in_l}; failed checks: {bad or 'none'}")


def test_criterion_5_counting_oracle():
    rng = np.random.default_rng(2024)
    plain = [g for k in range(1, 5) for g in all_graphs(k)]
    ordered = [OrderedGraph(g) for k in range(1, 5) for g in labelled_graphs(k)]
    auts = {canonical_form(h): automorphisms(h) for h in plain}
    comparisons = mismatches = 0
    for i in range(200):
        n = int(rng.integers(1, 9))
        g = random_graph(n, float(rng.uniform(0.1, 0.9)), seed=5000 + i)
        og = OrderedGraph(g)
        hist = {k: subset_counts(g, k, False) for k in range(1, 5)}
        ohist = {k: subset_counts(g, k, True) for k in range(1, 5)}
        for h in plain:
            key = canonical_form(h)
            want = hist[h.n].get(key, 0) * auts[key] if h.n <= n else 0
            comparisons += 1
            mismatches += count_copies(h, g) != want
        for h in ordered:
            want = ohist[h.n].get(np.asarray(h.adj).tobytes(), 0) if h.n <= n else 0
            comparisons += 1
            mismatches += count_copies(h, og) != want
    ok = mismatches == 0
    assert record(5, ok, f"{len(plain)} graph + {len(ordered)} ordered patterns x 200 hosts: "
                         f"{comparisons} comparisons, {mismatches} mismatches")


def test_criterion_6_trichotomy():
    variants = Counter()
    failures = 0
    for s in range(1000):
        if s < 800:
            h, g, x, y, a = sparse_pair_instance(s)
            out = sparse_pair(h, g, x, y, a)
            allowed = (CopyWitness, RestrictedCandidate, SparsePair)
        else:
            h, g, x, y, a = blockade_instance(s - 800)
            out = grow_blockade(h, g, x, y, a)
            allowed = (CopyWitness, RestrictedCandidate, BlockadeFound)
        n = g.n
        try:
            if sum(isinstance(out, t) for t in allowed) != 1:
                raise AssertionError(f"unexpected outcome {type(out).__name__}")
            if isinstance(out, SparsePair):
                certify(g, out, min_a=math.floor(y ** a * n), min_b=(1 - h.n * y) * n)
            elif isinstance(out, BlockadeFound):
                certify(g, out, min_length=math.ceil(1 / y))
            else:
                certify(g, out)
        except Exception:  # noqa: BLE001 - any failure counts against the criterion
            failures += 1
        variants[type(out).__name__] += 1
    ok = failures == 0
    mix = ", ".join(f"{k} {v}" for k, v in sorted(variants.items()))
    assert record(6, ok, f"1000 instances ({mix}); {failures} certificate failures")


def test_criterion_7_end_to_end():
    rng = np.random.default_rng(77)
    failures = 0
    SIZE_TABLE.clear()
    for s in range(100):
        n = int(rng.integers(200, 501))
        g = random_bull_free(n, seed=s)
        try:
            res = eh_extract(bull(), bull(), g, seed=s)
            certify(g, res)
            SIZE_TABLE.append((n, res.size, res.kind))
        except Exception:  # noqa: BLE001
            failures += 1
    ok = failures == 0 and len(SIZE_TABLE) == 100
    ACCEPTANCE_TABLE[:] = size_table_lines()
    buckets = {}
    for n, size, _ in SIZE_TABLE:
        buckets.setdefault((n // 100) * 100, []).append(size / math.log(n))
    table = "; ".join(f"n {b}-{b + 99}: mean size/ln n {np.mean(v):.1f} ({len(v)})" for b, v in sorted(buckets.items()))
    sizes = [s for _, s, _ in SIZE_TABLE]
    detail = (f"100 bull-free hosts, {failures} failures, sizes {min(sizes)}-{max(sizes)}; {table}; "
              "no exponent asserted") if sizes else f"{failures} failures"
    assert record(7, ok, detail)


def test_criterion_8_tournaments():
    q = prime_Q_member(5)
    failures = 0
    sizes = []
    for s in range(50):
        n = 20 + (280 * s) // 49
        t = random_small_pieces_tournament(n, seed=s)
        try:
            if count_copies(q, t, limit=0) != 0:
                raise AssertionError("host contains the pattern")
            r = transitive_extract(q, t, seed=s)
            sub = t.induced(r.vertices)
            if sorted(sub.out_degrees().tolist()) != list(range(sub.n)):
                raise AssertionError("not transitive")
            sizes.append(len(r.vertices))
        except Exception:  # noqa: BLE001
            failures += 1
    round_trips = bad = 0
    for n in range(7):
        pairs = list(combinations(range(n), 2))
        for bits in product((0, 1), repeat=len(pairs)):
            t = Tournament.from_arcs(n, [(i, j) if b else (j, i) for (i, j), b in zip(pairs, bits)])
            g = backedge(t).backedge
            round_trips += 1
            bad += from_backedge(g) != t or backedge(from_backedge(g)).backedge != g
    perms_checked = 0
    for n in range(1, 7):
        t = Tournament(random_small_pieces_tournament(n, seed=n).out)
        for p in permutations(range(n)):
            perms_checked += 1
            bad += from_backedge(backedge(t, p).backedge, p) != t
    ok = failures == 0 and bad == 0
    assert record(8, ok, f"50 q-free tournaments (n 20-300), {failures} failures, transitive sizes "
                  f"{min(sizes) if sizes else 0}-{max(sizes) if sizes else 0}; backedge round trip: "
                  f"{round_trips} tournaments + {perms_checked} numberings, {bad} mismatches")


DUALITY_SCRIPT = r"""
import hashlib, json, sys
sys.path.insert(0, sys.argv[1])
from test_acceptance import duality_suite
rows = duality_suite()
print(hashlib.sha256(json.dumps(rows).encode()).hexdigest())
"""


def duality_suite():
    rows = []
    for s in range(50):
        n = 40 + (s % 10) * 8
        if s % 2 == 0:
            g, h, j = random_bull_free(n, seed=s), bull(), bull()
        else:
            g, h, j = random_graph(n, 0.5, seed=s), path(4), star(3)
        a = eh_extract(h, j, g, seed=s)
        b = eh_extract(j, h, complement(g), seed=s)
        rows.append([s, list(a.vertices), a.kind, list(b.vertices), b.kind])
    return rows


def test_criterion_9_duality():
    rows = duality_suite()
    swapped = sum(1 for r in rows if r[1] == r[3] and {r[2], r[4]} == {"clique", "stable"})
    digest = hashlib.sha256(json.dumps(rows).encode()).hexdigest()
    again = hashlib.sha256(json.dumps(duality_suite()).encode()).hexdigest()
    res = subprocess.run(
        [sys.executable, "-c", DUALITY_SCRIPT, str(Path(__file__).parent)],
        capture_output=True, text=True, env={"PYTHONHASHSEED": "12345", **_env()},
    )
    fresh = res.stdout.strip()
    ok = swapped == 50 and digest == again == fresh
    assert record(9, ok, f"{swapped}/50 swapped kinds on the same vertex set; digest {digest[:16]} "
                         f"{'reproduced' if digest == again == fresh else 'NOT reproduced'} in-process and in a fresh process")


def size_table_lines():
    out = ["end-to-end sizes (criterion 7): n, size, kind, size / ln n"]
    for n, size, kind in sorted(SIZE_TABLE):
        out.append(f"  {n:<4} {size:<4} {kind:<7} {size / math.log(n):.2f}")
    return out


def _env():
    import os

    env = dict(os.environ)
    env.pop("PYTHONHASHSEED", None)
    return env


if __name__ == "__main__":
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                pass
    print("\n".join(size_table_lines()))
