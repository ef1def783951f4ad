import pytest

from ehgraphs import DomainError
from ehgraphs import classes
from ehgraphs.decomposition import is_prime
from ehgraphs.enumeration import (
    all_graphs, catalog_text, doubling_chain, enumerate_prime_in_H, fig1_fixtures, fig2_family,
    fig2_ordered, fixture_checksums, members_of_H, monotone_path, split_graphs,
)
from ehgraphs.graph import bull, canonical_form, is_isomorphic, path
from ehgraphs.textio import parse_many

# graphs on n vertices up to isomorphism (OEIS A000088)
GRAPH_COUNTS = [1, 1, 2, 4, 11, 34, 156]
# split graphs up to isomorphism (OEIS A048194)
SPLIT_COUNTS = [1, 1, 2, 4, 9, 21, 56]


@pytest.mark.parametrize("n", range(7))
def test_all_graphs_counts(n):
    assert len(all_graphs(n)) == GRAPH_COUNTS[n]


@pytest.mark.parametrize("n", range(7))
def test_split_graph_counts(n):
    assert len(split_graphs(n)) == SPLIT_COUNTS[n]


def test_members_of_H_are_hereditary_closure():
    for n in range(1, 7):
        want = {canonical_form(g) for g in all_graphs(n) if classes.in_H(g)}
        assert {canonical_form(g) for g in members_of_H(n)} == want


def test_methods_agree():
    for n in range(3, 7):
        base = [canonical_form(g) for g in enumerate_prime_in_H(n)]
        assert base == [canonical_form(g) for g in enumerate_prime_in_H(n, method="all")]
        assert base == [canonical_form(g) for g in enumerate_prime_in_H(n, method="split")]


def test_small_catalog():
    assert len(enumerate_prime_in_H(3)) == 0
    (p4,) = enumerate_prime_in_H(4)
    assert is_isomorphic(p4, path(4))
    (b,) = enumerate_prime_in_H(5)
    assert is_isomorphic(b, bull())


def test_fig1_matches_catalog():
    figs = fig1_fixtures()
    six = {canonical_form(g) for g in enumerate_prime_in_H(6)}
    seven = {canonical_form(g) for g in enumerate_prime_in_H(7)}
    assert {canonical_form(g) for g in figs if g.n == 6} == six
    assert any(canonical_form(g) in seven for g in figs if g.n == 7)


def test_catalog_text_parses_back():
    gs = enumerate_prime_in_H(6)
    back = parse_many(catalog_text(gs))
    assert [canonical_form(g) for g in back] == [canonical_form(g) for g in gs]


def test_doubling_chain_stays_prime_in_H():
    chain = doubling_chain(bull(), 2)
    assert [g.n for g in chain] == [5, 7, 9]
    for g in chain:
        assert is_prime(g) and classes.in_H(g)
    with pytest.raises(DomainError):
        doubling_chain(path(3), 1)


def test_fig2_family_shapes():
    for k in range(2, 6):
        g, labels, order = fig2_family(k)
        assert g.n == 2 * k + 1
        assert sorted(order) == list(range(g.n))
        assert classes.in_H(g)
        assert classes.in_L(fig2_ordered(k))


def test_monotone_path():
    p = monotone_path(4)
    assert p.edges() == [(0, 1), (1, 2), (2, 3)]


def test_fixture_checksums_present():
    assert set(fixture_checksums()) >= {"fig1.txt", "fig2.txt", "fig3.txt", "fig4.txt"}


def test_bounds():
    with pytest.raises(DomainError):
        enumerate_prime_in_H(9)
    with pytest.raises(DomainError):
        enumerate_prime_in_H(8, method="all")
