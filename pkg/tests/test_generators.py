from ehgraphs.counting import count_copies
from ehgraphs.decomposition import is_cograph
from ehgraphs.generators import (
    random_bull_free, random_capped, random_cograph, random_graph, random_small_pieces_tournament, random_tournament,
)
from ehgraphs.graph import bull


def test_seeded_reproducibility():
    assert random_graph(20, 0.3, seed=5) == random_graph(20, 0.3, seed=5)
    assert random_graph(20, 0.3, seed=5) != random_graph(20, 0.3, seed=6)
    assert random_tournament(9, seed=1) == random_tournament(9, seed=1)
    assert random_bull_free(60, seed=2) == random_bull_free(60, seed=2)


def test_capped_degrees():
    for cap in (0, 1, 3, 7):
        g = random_capped(50, cap, seed=cap)
        assert g.degrees.max() <= cap


def test_cographs():
    for s in range(10):
        assert is_cograph(random_cograph(25, seed=s))


def test_bull_free():
    for s in range(5):
        g = random_bull_free(45, seed=s)
        assert count_copies(bull(), g, limit=0) == 0


def test_small_pieces_tournament_sizes():
    t = random_small_pieces_tournament(33, seed=1)
    assert t.n == 33
