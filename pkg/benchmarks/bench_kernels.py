"""Numba kernels against their pure-numpy fallbacks.

Runs each kernel pair on the same seeded inputs in one process, checks the
results agree, and prints median wall times.  Usage::

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json out.json]
"""
from __future__ import annotations

import argparse
import json
import statistics
import time

import numpy as np

from ehgraphs import kernels
from ehgraphs._accel import HAVE_NUMBA
from ehgraphs.extraction.restricted import allowed_table
from ehgraphs.generators import random_graph
from ehgraphs.graph import bull, path


def _time(fn, repeat):
    out = fn()  # warm-up, includes JIT compilation on first call
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        times.append(time.perf_counter() - t0)
    return out, statistics.median(times)


def count_case(n, pattern, ordered):
    g = random_graph(n, 0.3, seed=n)
    host = np.asarray(g.adj)
    nadj = ~host & ~np.eye(n, dtype=bool)
    _, rel, gt = kernels.pattern_plan(pattern.adj, ordered)
    words, nwords, full = kernels.pack_rows(host), kernels.pack_rows(nadj), kernels.full_words(n)
    nb = lambda: int(kernels._count_nb(words, nwords, full, n, rel, gt, ordered, -1))  # noqa: E731
    np_ = lambda: int(kernels._count_np(host, nadj, n, rel, gt, ordered, -1))  # noqa: E731
    return nb, np_


def peel_case(n):
    g = random_graph(n, 0.2, seed=n)
    a = np.ascontiguousarray(g.adj)
    allowed = allowed_table(n, 0.05)

    def run(fn):
        order, removed = fn(a, allowed)
        return order[:removed].tolist()

    return (lambda: run(kernels._peel_nb)), (lambda: run(kernels._peel_np))


def exhaustive_case(n):
    g = random_graph(n, 0.5, seed=n)
    m = np.array(g.masks, dtype=np.int64)
    allowed = allowed_table(n, 0.25)
    return (lambda: int(kernels._exhaustive_nb(m, allowed))), (lambda: int(kernels._exhaustive_np(m, allowed)))


CASES = [
    ("count P4 in G(60, .3)", lambda: count_case(60, path(4), False)),
    ("count bull in G(80, .3)", lambda: count_case(80, bull(), False)),
    ("count ordered P3 in G(120, .3)", lambda: count_case(120, path(3), True)),
    ("peel G(400, .2)", lambda: peel_case(400)),
    ("peel G(1500, .2)", lambda: peel_case(1500)),
    ("exhaustive search n=14", lambda: exhaustive_case(14)),
    ("exhaustive search n=17", lambda: exhaustive_case(17)),
]


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json")
    args = ap.parse_args(argv)
    if not HAVE_NUMBA:
        raise SystemExit("numba is not importable (or EHGRAPHS_PURE_NUMPY is set); nothing to compare")
    rows = []
    print(f"{'case':<34} {'numba s':>10} {'numpy s':>10} {'speedup':>8}  agree")
    for name, build in CASES:
        nb, np_ = build()
        a, t_nb = _time(nb, args.repeat)
        b, t_np = _time(np_, max(1, args.repeat // 2))
        rows.append({"case": name, "numba_s": t_nb, "numpy_s": t_np, "agree": a == b})
        print(f"{name:<34} {t_nb:>10.4f} {t_np:>10.4f} {t_np / max(t_nb, 1e-9):>8.1f}  {a == b}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(rows, fh, indent=2)
    if not all(r["agree"] for r in rows):
        raise SystemExit("backends disagree")


if __name__ == "__main__":
    main()
