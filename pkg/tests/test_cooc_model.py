import math
import random

import pytest

from cooc import (
    BitextSpace,
    BoundaryModel,
    CombinedModel,
    DistanceModel,
    candidate_edges,
    co_occurs,
    load_alignment,
    load_map,
    load_pretokenized,
    map_distance,
    tokenize,
)
from helpers import random_distance_bitext, random_half, random_monotone_map


def exhaustive_edges(model, half1, half2):
    return [(s.token_index, t.token_index) for s in half1 for t in half2 if co_occurs(model, s, t)]


class TestFigures:
    """Map (0,0)-(100,100), delta 5, blocks [({0},{0}), ({1},{1})]."""

    def test_distance_values(self):
        bmap = load_map([], BitextSpace(100, 100))
        assert map_distance(bmap, (50, 80)) == pytest.approx(30 / math.sqrt(2))
        assert map_distance(bmap, (50, 52)) == pytest.approx(2 / math.sqrt(2))

    def test_configurations(self):
        s, t1, t2, dist, boundary = _figure_tokens()
        combined = CombinedModel(dist, boundary)
        assert (co_occurs(dist, s, t1), co_occurs(dist, s, t2)) == (False, True)
        assert (co_occurs(boundary, s, t1), co_occurs(boundary, s, t2)) == (True, False)
        assert (co_occurs(combined, s, t1), co_occurs(combined, s, t2)) == (False, False)


def _figure_tokens():
    from cooc.corpus import SegmentAlignment, Token

    s = Token("s", (49, 51), 0, 0)
    t1 = Token("t1", (79, 81), 1, 0)
    t2 = Token("t2", (51, 53), 0, 1)
    dist = DistanceModel(load_map([], BitextSpace(100, 100)), 5)
    boundary = BoundaryModel(SegmentAlignment(((frozenset({0}), frozenset({0})), (frozenset({1}), frozenset({1})))))
    return s, t1, t2, dist, boundary


def test_zero_delta_has_no_edges(backend):
    half = tokenize("a b c")
    model = DistanceModel(load_map([], BitextSpace(half.length, half.length)), 0)
    assert candidate_edges(model, half, half) == []


def test_delta_is_required_nonnegative():
    with pytest.raises(ValueError):
        DistanceModel(load_map([], BitextSpace(1, 1)), -1)


def test_single_block_is_complete():
    half1 = tokenize("a b c\nd e")
    half2 = tokenize("x y\nz w v u")
    model = BoundaryModel(load_alignment([([0, 1], [0, 1])], (half1, half2)))
    assert candidate_edges(model, half1, half2) == [(i, j) for i in range(5) for j in range(6)]


def test_strict_threshold():
    half1 = tokenize("a")  # midpoint 0.5
    half2 = tokenize("   b")  # midpoint 3.5
    bmap = load_map([(0, 3), (1, 4)], BitextSpace(1, 4))
    assert map_distance(bmap, (0.5, 3.5)) == 0
    bmap = load_map([], BitextSpace(1, 4))
    d = map_distance(bmap, (0.5, 3.5))
    assert not co_occurs(DistanceModel(bmap, d), half1[0], half2[0])
    assert co_occurs(DistanceModel(bmap, d + 1e-9), half1[0], half2[0])


def test_band_sweep_matches_exhaustive_200x200(backend):
    rng = random.Random(11)
    half1 = random_half(rng, 200, 30, "a", per_line=rng.randint(3, 15))
    half2 = random_half(rng, 200, 30, "b", per_line=rng.randint(3, 15))
    assert len(half1) == len(half2) == 200
    for delta in (3, 15.5, 40):
        bmap = random_monotone_map(rng, half1.length, half2.length, 8)
        model = DistanceModel(bmap, delta)
        assert candidate_edges(model, half1, half2) == exhaustive_edges(model, half1, half2)


def test_band_sweep_is_sound_on_steep_maps(backend):
    """A vertical map run far from the map's y at the token's own x."""
    half1 = tokenize("a" * 49 + " b")  # b midpoint 50.5
    half2 = tokenize(" " * 30 + "c" + " " * 69)  # c midpoint 30.5
    bmap = load_map([(51, 0), (51, 100)], BitextSpace(half1.length, 100))
    model = DistanceModel(bmap, 1)
    assert co_occurs(model, half1[1], half2[0])
    assert candidate_edges(model, half1, half2) == exhaustive_edges(model, half1, half2) == [(1, 0)]


def test_random_models_match_exhaustive(backend):
    rng = random.Random(5)
    for _ in range(60):
        half1, half2, bmap = random_distance_bitext(rng)
        delta = rng.choice([0.5, 2, 7, 20])
        dist = DistanceModel(bmap, delta)
        n1, n2 = half1.segment_count, half2.segment_count
        k = min(n1, n2)
        blocks = [([s], [s]) for s in range(k) if rng.random() < 0.7]
        boundary = BoundaryModel(load_alignment(blocks, (half1, half2)))
        for model in (dist, boundary, CombinedModel(dist, boundary)):
            assert candidate_edges(model, half1, half2) == exhaustive_edges(model, half1, half2)


def test_tokens_units():
    half1 = tokenize("aaaa b cc")
    half2 = tokenize("x yyyyyyy z")
    bmap = load_map([], BitextSpace(3, 3, "tokens"))
    model = DistanceModel(bmap, 0.1)
    assert candidate_edges(model, half1, half2) == [(0, 0), (1, 1), (2, 2)]


def test_delta_monotonicity():
    rng = random.Random(3)
    for _ in range(40):
        half1, half2, bmap = random_distance_bitext(rng)
        deltas = sorted(rng.uniform(0, 30) for _ in range(3))
        sets = [set(candidate_edges(DistanceModel(bmap, d), half1, half2)) for d in deltas]
        assert sets[0] <= sets[1] <= sets[2]


def test_combined_is_intersection():
    rng = random.Random(4)
    for _ in range(40):
        half1, half2, bmap = random_distance_bitext(rng)
        dist = DistanceModel(bmap, rng.uniform(1, 20))
        k = min(half1.segment_count, half2.segment_count)
        boundary = BoundaryModel(load_alignment([([s], [s]) for s in range(k)], (half1, half2)))
        combined = set(candidate_edges(CombinedModel(dist, boundary), half1, half2))
        assert combined == set(candidate_edges(dist, half1, half2)) & set(candidate_edges(boundary, half1, half2))


def test_non_transitive_witness():
    # s1 ~ t1, s2 ~ t1, s2 ~ t2, but not s1 ~ t2
    half1 = tokenize("u   u")  # midpoints 0.5, 4.5
    half2 = tokenize("  v   v")  # midpoints 2.5, 6.5
    bmap = load_map([], BitextSpace(5, 7))
    model = DistanceModel(bmap, 2.5)
    s1, s2 = half1
    t1, t2 = half2
    assert co_occurs(model, s1, t1) and co_occurs(model, s2, t1) and co_occurs(model, s2, t2)
    assert not co_occurs(model, s1, t2)
