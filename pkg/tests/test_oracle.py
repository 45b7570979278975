import random

import pytest

from cooc import BoundaryModel, CoocGraph, CountingAssumption, DistanceModel, count_all, load_alignment, tokenize
from cooc.errors import IsolatedVertex, TooLarge
from cooc.oracle import brute_count_all, brute_edge_cover, brute_matching, brute_vertex_cover, subset_edge_cover
from helpers import complete_graph, random_distance_bitext, random_graph, without_isolated

PATH3 = CoocGraph((0, 1), (0, 1), frozenset({(0, 0), (1, 0), (1, 1)}))


def test_k23():
    g = complete_graph(2, 3)
    assert (brute_matching(g), brute_edge_cover(g), brute_vertex_cover(g)) == (2, 3, 2)


def test_k33():
    g = complete_graph(3, 3)
    assert (brute_matching(g), brute_edge_cover(g), brute_vertex_cover(g)) == (3, 3, 3)


def test_path_and_single_edge():
    assert brute_matching(PATH3) == 2
    single = CoocGraph((0,), (0,), frozenset({(0, 0)}))
    assert brute_edge_cover(single) == brute_vertex_cover(single) == 1


def test_empty():
    g = CoocGraph((), ())
    assert brute_matching(g) == 0 == brute_vertex_cover(g) == brute_edge_cover(g)


def test_limits():
    with pytest.raises(TooLarge):
        brute_matching(complete_graph(11, 10))
    with pytest.raises(IsolatedVertex):
        brute_edge_cover(CoocGraph((0, 1), (0,), frozenset({(0, 0)})))


def test_edge_cover_search_agrees_with_subset_enumeration():
    rng = random.Random(31)
    for _ in range(200):
        g = without_isolated(random_graph(rng, max_side=4))
        assert brute_edge_cover(g) == subset_edge_cover(g.edges)


def test_count_all_equivalence(backend):
    rng = random.Random(13)
    for _ in range(60):
        half1, half2, bmap = random_distance_bitext(rng, vocab=rng.randint(6, 12), max_tokens=5)
        model = DistanceModel(bmap, rng.choice([3, 8, 15]))
        for assumption in CountingAssumption:
            assert brute_count_all(model, half1, half2, assumption) == count_all(model, half1, half2, assumption)


def test_worked_example_and_empty():
    h1, h2 = tokenize("u u u"), tokenize("v v v")
    model = BoundaryModel(load_alignment([([0], [0])], (h1, h2)))
    assert brute_count_all(model, h1, h2, "naive").entries == {("u", "v"): 9}
    empty = tokenize("")
    model = BoundaryModel(load_alignment([], (empty, empty)))
    assert len(brute_count_all(model, empty, empty, "at_least_one")) == 0


def test_token_cap():
    h = tokenize(" ".join(["w"] * 201))
    model = BoundaryModel(load_alignment([([0], [0])], (h, h)))
    with pytest.raises(TooLarge):
        brute_count_all(model, h, h, "naive")
