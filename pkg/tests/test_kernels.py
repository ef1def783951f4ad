import json
import os
import subprocess
import sys

import numpy as np
import pytest

from ehgraphs import kernels
from ehgraphs._accel import HAVE_NUMBA
from ehgraphs.generators import random_graph, random_tournament

SCRIPT = r"""
import json
import numpy as np
from ehgraphs import backend, kernels
from ehgraphs.counting import count_copies
from ehgraphs.extraction import restricted_subset_search
from ehgraphs.generators import random_graph
from ehgraphs.graph import path, bull
from ehgraphs import OrderedGraph

out = {"backend": backend(), "counts": [], "peel": [], "search": []}
for s in range(6):
    g = random_graph(14, 0.4, seed=s)
    out["counts"].append([count_copies(path(4), g), count_copies(bull(), g),
                          count_copies(OrderedGraph(path(3)), OrderedGraph(g))])
    allowed = np.array([k // 3 for k in range(15)], dtype=np.int64)
    out["peel"].append(kernels.peel(g.adj, allowed))
    r = restricted_subset_search(g, 1 / 4)
    out["search"].append([list(r.vertices), r.side])
print(json.dumps(out))
"""


def run_backend(pure):
    env = dict(os.environ)
    env.pop("EHGRAPHS_PURE_NUMPY", None)
    if pure:
        env["EHGRAPHS_PURE_NUMPY"] = "1"
    res = subprocess.run([sys.executable, "-c", SCRIPT], env=env, capture_output=True, text=True, check=True)
    return json.loads(res.stdout)


def test_backends_agree_across_processes():
    pure = run_backend(True)
    fast = run_backend(False)
    assert pure["backend"] == "numpy"
    assert fast["backend"] == ("numba" if HAVE_NUMBA else "numpy")
    for key in ("counts", "peel", "search"):
        assert pure[key] == fast[key]


@pytest.mark.skipif(not HAVE_NUMBA, reason="numba not importable")
def test_count_kernels_agree_in_process():
    for s in range(10):
        g = random_graph(12, 0.5, seed=s)
        for pat in (random_graph(4, 0.5, seed=100 + s), random_graph(3, 0.5, seed=200 + s)):
            for ordered in (False, True):
                _, rel, gt = kernels.pattern_plan(pat.adj, ordered)
                host = np.asarray(g.adj)
                nadj = ~host & ~np.eye(12, dtype=bool)
                a = kernels._count_nb(kernels.pack_rows(host), kernels.pack_rows(nadj), kernels.full_words(12), 12, rel, gt, ordered, -1)
                b = kernels._count_np(host, nadj, 12, rel, gt, ordered, -1)
                assert a == b


@pytest.mark.skipif(not HAVE_NUMBA, reason="numba not importable")
def test_exhaustive_kernels_agree_in_process():
    for s in range(8):
        g = random_graph(11, 0.5, seed=s)
        allowed = np.array([k // 4 for k in range(12)], dtype=np.int64)
        m = np.array(g.masks, dtype=np.int64)
        assert kernels._exhaustive_nb(m, allowed) == kernels._exhaustive_np(m, allowed)


def test_count_limit_stops_early():
    g = random_graph(10, 0.5, seed=1)
    full = kernels.count_induced(random_graph(3, 1.0).adj, g.adj)
    capped = kernels.count_induced(random_graph(3, 1.0).adj, g.adj, limit=2)
    assert full > 2
    assert capped == 3


def test_directed_patterns():
    from math import comb

    from ehgraphs import Tournament
    from ehgraphs.tournaments import cyclic_triangle

    for s in range(5):
        t = random_tournament(9, seed=s)
        cyc = comb(9, 3) - sum(comb(int(d), 2) for d in t.out_degrees())
        assert kernels.count_induced(cyclic_triangle().out, t.out) == 3 * cyc
        assert kernels.count_induced(Tournament.transitive(3).out, t.out) == comb(9, 3) - cyc


def test_pack_rows_multiword():
    a = np.zeros((70, 70), dtype=bool)
    a[0, 69] = a[69, 0] = True
    w = kernels.pack_rows(a)
    assert w.shape == (70, 2)
    assert w[0, 1] == 1 << 5
