"""Co-occurrence counts per word-type pair.

Under the naive assumption a pair's count is the number of co-occurring
token pairs; under "at most one" it is the size of a maximum matching of
the pair's bipartite co-occurrence graph; under "at least one" it is the
size of a minimum edge cover of that graph. On one aligned segment pair
these reduce to ``e*f``, ``min(e, f)`` and ``max(e, f)``.
"""
from __future__ import annotations

import enum
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import kernels
from .cooc_model import BoundaryModel, CoocModel, candidate_arrays, candidate_edges
from .corpus import SegmentPairStats, TokenizedHalf
from .errors import InvariantError


class CountingAssumption(str, enum.Enum):
    NAIVE = "naive"
    AT_MOST_ONE = "at_most_one"
    AT_LEAST_ONE = "at_least_one"

    @classmethod
    def parse(cls, value) -> "CountingAssumption":
        if isinstance(value, cls):
            return value
        return cls(str(value).replace("-", "_"))


@dataclass(frozen=True)
class CoocGraph:
    """Bipartite graph between the tokens of two word types.

    ``left`` and ``right`` are token indices in half 1 and half 2; ``edges``
    holds ``(left_pos, right_pos)`` positions into those tuples.
    """

    left: tuple[int, ...]
    right: tuple[int, ...]
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self):
        object.__setattr__(self, "left", tuple(self.left))
        object.__setattr__(self, "right", tuple(self.right))
        object.__setattr__(self, "edges", frozenset(self.edges))
        nl, nr = len(self.left), len(self.right)
        for a, b in self.edges:
            if not (0 <= a < nl and 0 <= b < nr):
                raise ValueError(f"edge ({a}, {b}) outside a {nl}x{nr} graph")

    @classmethod
    def from_token_edges(cls, token_edges: Iterable[tuple[int, int]]) -> "CoocGraph":
        token_edges = set(token_edges)
        left = sorted({i for i, _ in token_edges})
        right = sorted({j for _, j in token_edges})
        lpos = {t: k for k, t in enumerate(left)}
        rpos = {t: k for k, t in enumerate(right)}
        return cls(tuple(left), tuple(right), frozenset((lpos[i], rpos[j]) for i, j in token_edges))

    @property
    def vertex_count(self) -> int:
        return len(self.left) + len(self.right)

    def non_isolated(self) -> tuple[set[int], set[int]]:
        return {a for a, _ in self.edges}, {b for _, b in self.edges}

    def csr(self) -> tuple[list[int], list[int]]:
        """Adjacency of left positions, neighbours in increasing order."""
        indptr = [0] * (len(self.left) + 1)
        ordered = sorted(self.edges)
        for a, _ in ordered:
            indptr[a + 1] += 1
        for k in range(len(self.left)):
            indptr[k + 1] += indptr[k]
        return indptr, [b for _, b in ordered]


def count_segment_pair(stats: SegmentPairStats, assumption) -> int:
    e, f = stats.e_u, stats.f_v
    if e == 0 or f == 0:
        return 0
    assumption = CountingAssumption.parse(assumption)
    if assumption is CountingAssumption.NAIVE:
        return e * f
    if assumption is CountingAssumption.AT_MOST_ONE:
        return min(e, f)
    return max(e, f)


def maximum_matching(graph: CoocGraph) -> list[tuple[int, int]]:
    """One maximum matching as ``(left_pos, right_pos)`` pairs.

    Deterministic: augmenting paths are searched from the lowest left
    position, neighbours in increasing order.
    """
    if not graph.edges:
        return []
    indptr, indices = graph.csr()
    match = kernels.hopcroft_karp(len(graph.left), len(graph.right), indptr, indices)
    return [(a, int(b)) for a, b in enumerate(match.tolist()) if b >= 0]


def max_matching(graph: CoocGraph) -> int:
    return len(maximum_matching(graph))


def min_edge_cover(graph: CoocGraph) -> int:
    """Size of a minimum edge cover of the non-isolated part of ``graph``."""
    if not graph.edges:
        return 0
    lefts, rights = graph.non_isolated()
    return len(lefts) + len(rights) - max_matching(graph)


def konig_vertex_cover(graph: CoocGraph) -> tuple[set[int], set[int]]:
    """Minimum vertex cover ``(left_positions, right_positions)``.

    Built from a maximum matching: vertices reachable from unmatched left
    vertices by alternating paths are ``Z``; the cover is
    ``(L - Z) | (R & Z)``.
    """
    matching = maximum_matching(graph)
    match_l = {a: b for a, b in matching}
    match_r = {b: a for a, b in matching}
    adj: dict[int, list[int]] = defaultdict(list)
    for a, b in sorted(graph.edges):
        adj[a].append(b)
    seen_l = {a for a in range(len(graph.left)) if a not in match_l}
    seen_r: set[int] = set()
    frontier = list(seen_l)
    while frontier:
        a = frontier.pop()
        for b in adj[a]:
            if b in seen_r or match_l.get(a) == b:
                continue
            seen_r.add(b)
            a2 = match_r.get(b)
            if a2 is not None and a2 not in seen_l:
                seen_l.add(a2)
                frontier.append(a2)
    cover_l = set(range(len(graph.left))) - seen_l
    cover_r = seen_r
    if any(a not in cover_l and b not in cover_r for a, b in graph.edges):
        raise InvariantError("Konig construction produced a non-cover")
    if len(cover_l) + len(cover_r) != len(matching):
        raise InvariantError("Konig cover size differs from matching size")
    return cover_l, cover_r


def min_vertex_cover(graph: CoocGraph) -> int:
    cover_l, cover_r = konig_vertex_cover(graph)
    return len(cover_l) + len(cover_r)


def graph_count(graph: CoocGraph, assumption) -> int:
    assumption = CountingAssumption.parse(assumption)
    if assumption is CountingAssumption.NAIVE:
        return len(graph.edges)
    if assumption is CountingAssumption.AT_MOST_ONE:
        return max_matching(graph)
    return min_edge_cover(graph)


class CoocTable:
    """Counts keyed by ``(type_u, type_v)``; only positive counts are kept.

    Iteration order is count descending, then ``(u, v)`` ascending.
    """

    def __init__(self, entries: dict[tuple[str, str], int] | None = None):
        self._entries = {k: int(v) for k, v in (entries or {}).items() if v > 0}

    @property
    def entries(self) -> dict[tuple[str, str], int]:
        return dict(self._entries)

    def __getitem__(self, key):
        return self._entries.get(key, 0)

    def __contains__(self, key):
        return key in self._entries

    def __len__(self):
        return len(self._entries)

    def __eq__(self, other):
        if not isinstance(other, CoocTable):
            return NotImplemented
        return self._entries == other._entries

    def __repr__(self):
        return f"CoocTable({len(self)} pairs)"

    def items(self) -> list[tuple[tuple[str, str], int]]:
        return sorted(self._entries.items(), key=lambda kv: (-kv[1], kv[0]))

    def __iter__(self):
        return iter(self.items())

    def total(self) -> int:
        return sum(self._entries.values())

    def to_tsv(self) -> str:
        return "".join(f"{u}\t{v}\t{c}\n" for (u, v), c in self.items())

    def first_difference(self, other: "CoocTable"):
        """First ``(key, mine, theirs)`` in table order where counts differ, or None."""
        keys = sorted(set(self._entries) | set(other._entries), key=lambda k: (-max(self[k], other[k]), k))
        for k in keys:
            if self[k] != other[k]:
                return k, self[k], other[k]
        return None


def group_edges(edges: Iterable[tuple[int, int]], half1: TokenizedHalf, half2: TokenizedHalf):
    """Bucket token edges by ``(type_u, type_v)``, preserving input order."""
    types1 = half1.type_ids
    types2 = half2.type_ids
    groups: dict[tuple[str, str], list[tuple[int, int]]] = defaultdict(list)
    for i, j in edges:
        groups[(types1[i], types2[j])].append((i, j))
    return groups


def build_graphs(edges, half1, half2) -> dict[tuple[str, str], CoocGraph]:
    return {key: CoocGraph.from_token_edges(es) for key, es in group_edges(edges, half1, half2).items()}


def _type_codes(half: TokenizedHalf):
    type_ids = half.type_ids
    names = sorted(set(type_ids))
    index = {name: k for k, name in enumerate(names)}
    return names, np.fromiter((index[t] for t in type_ids), dtype=np.int64, count=len(type_ids))


def _local_ids(group_start, key_sorted_values):
    """Dense ids of ``key_sorted_values`` within each group, restarting at 0."""
    n = len(key_sorted_values)
    new = group_start.copy()
    new[1:] |= key_sorted_values[1:] != key_sorted_values[:-1]
    run = np.cumsum(new) - 1
    start_idx = np.flatnonzero(group_start)
    gid = np.cumsum(group_start) - 1
    return run - run[start_idx][gid] if n else run


def count_edge_arrays(ii, jj, half1: TokenizedHalf, half2: TokenizedHalf, assumption) -> dict[tuple[str, str], int]:
    """Vectorized per-type-pair counts for edges given as index arrays."""
    assumption = CountingAssumption.parse(assumption)
    ii = np.asarray(ii, dtype=np.int64)
    jj = np.asarray(jj, dtype=np.int64)
    if ii.size == 0:
        return {}
    names1, codes1 = _type_codes(half1)
    names2, codes2 = _type_codes(half2)
    n2 = len(names2)
    keys = codes1[ii] * n2 + codes2[jj]

    order = np.lexsort((jj, ii, keys))
    keys, ii, jj = keys[order], ii[order], jj[order]
    keep = np.ones(keys.size, dtype=bool)
    keep[1:] = (ii[1:] != ii[:-1]) | (jj[1:] != jj[:-1])
    keys, ii, jj = keys[keep], ii[keep], jj[keep]

    group_start = np.ones(keys.size, dtype=bool)
    group_start[1:] = keys[1:] != keys[:-1]
    starts = np.flatnonzero(group_start)
    group_keys = keys[starts]
    n_edges = np.diff(np.append(starts, keys.size))

    if assumption is CountingAssumption.NAIVE:
        values = n_edges
    else:
        left = _local_ids(group_start, ii)
        by_right = np.lexsort((jj, keys))
        right = np.empty_like(left)
        right[by_right] = _local_ids(group_start, jj[by_right])
        gid = np.cumsum(group_start) - 1
        n_left = np.zeros(starts.size, dtype=np.int64)
        n_right = np.zeros(starts.size, dtype=np.int64)
        np.maximum.at(n_left, gid, left + 1)
        np.maximum.at(n_right, gid, right + 1)
        # a star (one vertex on either side) is matched by any single edge
        matched = np.ones(starts.size, dtype=np.int64)
        hard = np.flatnonzero((n_left > 1) & (n_right > 1))
        if hard.size:
            sel = np.isin(gid, hard)
            edge_ptr = np.zeros(hard.size + 1, dtype=np.int64)
            edge_ptr[1:] = np.cumsum(n_edges[hard])
            matched[hard] = kernels.matching_sizes(edge_ptr, n_left[hard], n_right[hard], left[sel], right[sel])
        if assumption is CountingAssumption.AT_MOST_ONE:
            values = matched
        else:
            values = n_left + n_right - matched
    return {
        (names1[k // n2], names2[k % n2]): int(v)
        for k, v in zip(group_keys.tolist(), values.tolist())
    }


def count_edges(
    edges: Sequence[tuple[int, int]],
    half1: TokenizedHalf,
    half2: TokenizedHalf,
    assumption,
    consumed: Iterable[tuple[int, int]] = (),
) -> CoocTable:
    """Count an explicit edge set; each consumed link adds 1 to its pair."""
    arr = np.asarray(list(edges), dtype=np.int64).reshape(-1, 2)
    counts = count_edge_arrays(arr[:, 0], arr[:, 1], half1, half2, assumption)
    return CoocTable(_add_consumed(counts, consumed, half1, half2))


def _add_consumed(counts, consumed, half1, half2):
    types1 = half1.type_ids
    types2 = half2.type_ids
    for i, j in consumed:
        key = (types1[i], types2[j])
        counts[key] = counts.get(key, 0) + 1
    return counts


def count_boundary_closed_form(model: BoundaryModel, half1: TokenizedHalf, half2: TokenizedHalf, assumption) -> CoocTable:
    """Sum the per-block segment-pair formula over all alignment blocks."""
    assumption = CountingAssumption.parse(assumption)
    segs1 = half1.segment_tokens()
    segs2 = half2.segment_tokens()
    types1 = half1.type_ids
    types2 = half2.type_ids
    counts: Counter = Counter()
    for side1, side2 in model.alignment.blocks:
        freq1 = Counter(types1[i] for s in side1 for i in segs1[s])
        freq2 = Counter(types2[j] for s in side2 for j in segs2[s])
        for u, e in freq1.items():
            for v, f in freq2.items():
                counts[(u, v)] += count_segment_pair(SegmentPairStats(e, f), assumption)
    return CoocTable(counts)


def count_all(
    model: CoocModel,
    half1: TokenizedHalf,
    half2: TokenizedHalf,
    assumption,
    filters=None,
    method: str = "auto",
) -> CoocTable:
    """Co-occurrence table for every word-type pair of the bitext.

    ``method`` is ``"graph"``, ``"closed_form"`` (pure boundary model without
    filters only) or ``"auto"``, which prefers the closed form when allowed.
    """
    assumption = CountingAssumption.parse(assumption)
    closed_ok = isinstance(model, BoundaryModel) and not filters
    if method == "closed_form" and not closed_ok:
        raise ValueError("closed-form counting needs a pure boundary model and no filters")
    if method not in ("auto", "graph", "closed_form"):
        raise ValueError(f"unknown counting method {method!r}")
    if closed_ok and method != "graph":
        return count_boundary_closed_form(model, half1, half2, assumption)
    if not filters:
        ii, jj = candidate_arrays(model, half1, half2)
        return CoocTable(count_edge_arrays(ii, jj, half1, half2, assumption))
    from .filters import apply_filter_set

    edges = candidate_edges(model, half1, half2)
    consumed, edges = apply_filter_set(edges, (half1, half2), filters)
    return count_edges(edges, half1, half2, assumption, consumed)
