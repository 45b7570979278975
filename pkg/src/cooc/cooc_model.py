"""Boolean co-occurrence predicates over token pairs.

Three models are provided: distance to an interpolated bitext map,
membership in an aligned block of segments, and their conjunction.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

import numpy as np

from . import kernels
from .corpus import SegmentAlignment, Token, TokenizedHalf
from .geometry import BitextMap, map_distance

Edge = tuple[int, int]


@dataclass(frozen=True)
class DistanceModel:
    map: BitextMap
    delta: float

    def __post_init__(self):
        if not self.delta >= 0:
            raise ValueError(f"delta must be nonnegative, got {self.delta}")

    @property
    def units(self):
        return self.map.space.units


@dataclass(frozen=True)
class BoundaryModel:
    alignment: SegmentAlignment

    def same_block(self, seg1: int, seg2: int) -> bool:
        for side1, side2 in self.alignment.blocks:
            if seg1 in side1:
                return seg2 in side2
        return False


@dataclass(frozen=True)
class CombinedModel:
    distance: DistanceModel
    boundary: BoundaryModel


CoocModel = Union[DistanceModel, BoundaryModel, CombinedModel]


def co_occurs(model: CoocModel, s: Token, t: Token) -> bool:
    """Whether side-1 token ``s`` and side-2 token ``t`` co-occur."""
    if isinstance(model, DistanceModel):
        point = (s.coordinate(model.units), t.coordinate(model.units))
        return map_distance(model.map, point) < model.delta
    if isinstance(model, BoundaryModel):
        return model.same_block(s.segment_index, t.segment_index)
    if isinstance(model, CombinedModel):
        return co_occurs(model.boundary, s, t) and co_occurs(model.distance, s, t)
    raise TypeError(f"not a co-occurrence model: {model!r}")


def _distance_arrays(model: DistanceModel, half1: TokenizedHalf, half2: TokenizedHalf):
    units = model.units
    bmap = model.map
    return kernels.band_edges(
        np.asarray(half1.coordinates(units), dtype=np.float64),
        np.asarray(half2.coordinates(units), dtype=np.float64),
        np.asarray(bmap.xs, dtype=np.float64),
        np.asarray(bmap.ys, dtype=np.float64),
        model.delta,
    )


def _boundary_arrays(model: BoundaryModel, half1: TokenizedHalf, half2: TokenizedHalf):
    segs1 = half1.segment_tokens()
    segs2 = half2.segment_tokens()
    parts_i = [np.zeros(0, dtype=np.int64)]
    parts_j = [np.zeros(0, dtype=np.int64)]
    for side1, side2 in model.alignment.blocks:
        toks1 = np.array([i for s in sorted(side1) for i in segs1[s]], dtype=np.int64)
        toks2 = np.array([j for s in sorted(side2) for j in segs2[s]], dtype=np.int64)
        parts_i.append(np.repeat(toks1, toks2.size))
        parts_j.append(np.tile(toks2, toks1.size))
    return np.concatenate(parts_i), np.concatenate(parts_j)


def _token_blocks(alignment: SegmentAlignment, half: TokenizedHalf, side: int):
    blocks = alignment.block_index(side, half.segment_count)
    return np.array([blocks[t.segment_index] for t in half.tokens], dtype=np.int64)


def candidate_arrays(model: CoocModel, half1: TokenizedHalf, half2: TokenizedHalf):
    """Co-occurring pairs as two int64 arrays, lexicographically sorted."""
    if isinstance(model, DistanceModel):
        return _distance_arrays(model, half1, half2)
    if isinstance(model, BoundaryModel):
        return _boundary_arrays(model, half1, half2)
    if isinstance(model, CombinedModel):
        ii, jj = _distance_arrays(model.distance, half1, half2)
        if ii.size == 0:
            return ii, jj
        alignment = model.boundary.alignment
        b1 = _token_blocks(alignment, half1, 1)[ii]
        b2 = _token_blocks(alignment, half2, 2)[jj]
        keep = (b1 >= 0) & (b1 == b2)
        return ii[keep], jj[keep]
    raise TypeError(f"not a co-occurrence model: {model!r}")


def candidate_edges(model: CoocModel, half1: TokenizedHalf, half2: TokenizedHalf) -> list[Edge]:
    """Every co-occurring ``(token_index_1, token_index_2)``, lexicographically sorted.

    The distance model is enumerated by a band sweep along the map rather
    than by testing all token pairs.
    """
    ii, jj = candidate_arrays(model, half1, half2)
    return list(zip(ii.tolist(), jj.tolist()))
