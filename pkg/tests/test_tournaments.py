from itertools import combinations, product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ehgraphs import CertificateError, DomainError, Graph, OrderedGraph, Tournament
from ehgraphs.classes import in_K
from ehgraphs.counting import count_copies
from ehgraphs.decomposition import is_prime
from ehgraphs.generators import random_small_pieces_tournament, random_tournament
from ehgraphs.tournaments import (
    backedge, cyclic_triangle, from_backedge, in_Q, in_Q_by_numberings, is_transitive, paley,
    prime_Q_member, q_numbering, transitive_extract,
)


def acyclic(t, vs):
    """Transitive iff no directed triangle inside ``vs``."""
    o = t.out
    return not any(
        (o[a, b] and o[b, c] and o[c, a]) or (o[a, c] and o[c, b] and o[b, a]) for a, b, c in combinations(vs, 3)
    )


def all_tournaments(n):
    pairs = list(combinations(range(n), 2))
    for bits in product((0, 1), repeat=len(pairs)):
        yield Tournament.from_arcs(n, [(i, j) if b else (j, i) for (i, j), b in zip(pairs, bits)])


def test_backedge_round_trip_small():
    for n in range(1, 5):
        for t in all_tournaments(n):
            assert from_backedge(backedge(t).backedge) == t


@settings(max_examples=40, deadline=None)
@given(st.integers(0, 10_000), st.integers(1, 8))
def test_backedge_round_trip_with_numbering(seed, n):
    t = random_tournament(n, seed=seed)
    p = tuple(np.random.default_rng(seed).permutation(n).tolist())
    pair = backedge(t, p)
    assert from_backedge(pair.backedge, p) == t


def test_bad_numbering():
    with pytest.raises(DomainError):
        backedge(cyclic_triangle(), (0, 0, 1))


def test_transitive_checks_agree():
    for s in range(30):
        t = random_tournament(6, seed=s)
        for vs in combinations(range(6), 4):
            assert is_transitive(t, vs) == acyclic(t, vs)


def test_q_numbering_lands_in_K():
    for n in range(1, 6):
        for t in all_tournaments(n):
            nums = q_numbering(t)
            if nums is not None:
                assert in_K(backedge(t, nums).backedge)


def test_in_Q_agrees_with_numbering_search():
    for n in range(1, 6):
        for t in all_tournaments(n):
            assert in_Q(t) == in_Q_by_numberings(t)


def test_paley_is_not_buildable():
    assert not in_Q(paley(7))


def test_prime_member():
    q = prime_Q_member(5)
    assert q.n == 5 and is_prime(q) and in_Q(q)


def test_small_pieces_are_q_free():
    q = prime_Q_member(5)
    for s in range(3):
        t = random_small_pieces_tournament(40, seed=s)
        assert count_copies(q, t, limit=0) == 0


def test_transitive_extract():
    q = prime_Q_member(5)
    for s in range(4):
        t = random_small_pieces_tournament(80, seed=s)
        r = transitive_extract(q, t, seed=s)
        assert acyclic(t, r.vertices)
        assert r.kind in ("backward", "forward")
        assert len(r.vertices) >= 2


def test_transitive_extract_rejects_unbuildable():
    with pytest.raises(DomainError):
        transitive_extract(paley(7), random_tournament(10, seed=0))
