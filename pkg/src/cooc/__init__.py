"""Word-type co-occurrence counting for bitexts.

Token pairs co-occur when they lie near an interpolated bitext map
(distance model), inside the same aligned block of segments (boundary
model), or both (combined model). Counts per word-type pair follow one of
three assumptions: ``naive`` (edge count), ``at_most_one`` (maximum
matching) or ``at_least_one`` (minimum edge cover).
"""
from .cooc_model import BoundaryModel, CombinedModel, DistanceModel, candidate_edges, co_occurs
from .corpus import (
    SegmentAlignment,
    SegmentPairStats,
    Token,
    TokenizedHalf,
    attach_pos,
    load_alignment,
    load_pretokenized,
    tokenize,
)
from .counting import (
    CoocGraph,
    CoocTable,
    CountingAssumption,
    count_all,
    count_segment_pair,
    max_matching,
    min_edge_cover,
    min_vertex_cover,
)
from .filters import CognateRule, FilterSet, Mrbd, PosCompat, apply_exclusive, apply_filter_set, apply_pos, lcsr
from .geometry import AnchorPoint, BitextMap, BitextSpace, Units, load_map, map_distance
from .kernels import BACKEND as KERNEL_BACKEND

__version__ = "0.1.0"
