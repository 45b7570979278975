"""Exhaustive reference implementations for testing and ``cooc verify``.

Nothing here shares code with the production counting path except the
co-occurrence predicate itself, which is the definition being counted.
"""
from __future__ import annotations

from collections import defaultdict
from itertools import combinations

from .cooc_model import co_occurs
from .counting import CoocGraph, CoocTable, CountingAssumption
from .errors import IsolatedVertex, TooLarge

MAX_VERTICES = 20
MAX_TOKENS = 200


def _check_size(graph: CoocGraph, cap: int = MAX_VERTICES):
    if graph.vertex_count > cap:
        raise TooLarge(f"graph has {graph.vertex_count} vertices; the oracle handles at most {cap}")


def _adjacency(graph: CoocGraph) -> list[list[int]]:
    adj: list[list[int]] = [[] for _ in graph.left]
    for a, b in sorted(graph.edges):
        adj[a].append(b)
    return adj


def brute_matching(graph: CoocGraph) -> int:
    """Largest matching, by trying every partner (or none) for each left vertex."""
    _check_size(graph)
    adj = _adjacency(graph)
    n = len(adj)
    best = 0

    def search(a, used, size):
        nonlocal best
        if size + (n - a) <= best:
            return
        if a == n:
            best = size
            return
        for b in adj[a]:
            if b not in used:
                used.add(b)
                search(a + 1, used, size + 1)
                used.discard(b)
        search(a + 1, used, size)

    search(0, set(), 0)
    return best


def brute_vertex_cover(graph: CoocGraph) -> int:
    """Smallest vertex cover.

    Every subset of the smaller side is tried as the cover's share of that
    side; the other side must then contain every neighbour of the rest.
    """
    _check_size(graph)
    edges = sorted(graph.edges)
    flip = len(graph.left) > len(graph.right)
    if flip:
        edges = [(b, a) for a, b in edges]
    n_small = len(graph.right) if flip else len(graph.left)
    best = graph.vertex_count
    for mask in range(1 << n_small):
        forced = {b for a, b in edges if not mask >> a & 1}
        best = min(best, bin(mask).count("1") + len(forced))
    return best


def brute_edge_cover(graph: CoocGraph) -> int:
    """Smallest edge set touching every vertex (branch and bound).

    Branches over every edge at one uncovered vertex, so every cover is
    reachable. An edge covers at most one vertex per side, which bounds
    the remaining cost from below.
    """
    _check_size(graph)
    lefts, rights = graph.non_isolated()
    if len(lefts) < len(graph.left) or len(rights) < len(graph.right):
        raise IsolatedVertex("edge cover is undefined for a graph with isolated vertices")
    if not graph.edges:
        return 0
    nl, nr = len(graph.left), len(graph.right)
    adj_l: list[list[int]] = [[] for _ in range(nl)]
    adj_r: list[list[int]] = [[] for _ in range(nr)]
    for a, b in sorted(graph.edges):
        adj_l[a].append(b)
        adj_r[b].append(a)
    best = nl + nr

    def lowest(mask):
        return (mask & -mask).bit_length() - 1

    def search(unc_l, unc_r, size):
        nonlocal best
        cl, cr = bin(unc_l).count("1"), bin(unc_r).count("1")
        if size + max(cl, cr) >= best:
            return
        if cl == 0 and cr == 0:
            best = size
            return
        if cl >= cr:
            a = lowest(unc_l)
            # partners that are still uncovered first: finds good covers early
            for b in sorted(adj_l[a], key=lambda b: not unc_r >> b & 1):
                search(unc_l & ~(1 << a), unc_r & ~(1 << b), size + 1)
        else:
            b = lowest(unc_r)
            for a in sorted(adj_r[b], key=lambda a: not unc_l >> a & 1):
                search(unc_l & ~(1 << a), unc_r & ~(1 << b), size + 1)

    search((1 << nl) - 1, (1 << nr) - 1, 0)
    return best


def _components(token_edges):
    """Split a set of ``(i, j)`` token edges into connected components."""
    adj = defaultdict(set)
    for i, j in token_edges:
        adj[("L", i)].add(("R", j))
        adj[("R", j)].add(("L", i))
    seen = set()
    comps = []
    for start in sorted(adj):
        if start in seen:
            continue
        stack = [start]
        seen.add(start)
        members = []
        while stack:
            v = stack.pop()
            members.append(v)
            for w in adj[v]:
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        lefts = {k for side, k in members if side == "L"}
        comps.append([(i, j) for i, j in token_edges if i in lefts])
    return comps


def brute_count_all(
    model,
    half1,
    half2,
    assumption,
    filters=None,
    max_tokens: int = MAX_TOKENS,
    max_component: int = MAX_VERTICES,
) -> CoocTable:
    """Counts from exhaustive predicate evaluation and brute-force covers.

    Each type pair's graph is split into connected components and each
    component solved exhaustively. With ``filters`` the production filter
    stage is applied to the exhaustive edge set before counting.
    """
    for name, half in (("half 1", half1), ("half 2", half2)):
        if len(half) > max_tokens:
            raise TooLarge(f"{name} has {len(half)} tokens; the oracle handles at most {max_tokens}")
    assumption = CountingAssumption.parse(assumption)
    edges = [
        (s.token_index, t.token_index)
        for s in half1.tokens
        for t in half2.tokens
        if co_occurs(model, s, t)
    ]
    consumed = ()
    if filters:
        from .filters import apply_filter_set

        consumed, edges = apply_filter_set(edges, (half1, half2), filters)
    by_pair = defaultdict(list)
    for i, j in edges:
        by_pair[(half1[i].type_id, half2[j].type_id)].append((i, j))
    counts = defaultdict(int)
    for key, pair_edges in by_pair.items():
        for comp in _components(pair_edges):
            graph = CoocGraph.from_token_edges(comp)
            if graph.vertex_count > max_component:
                raise TooLarge(
                    f"pair {key} has a component with {graph.vertex_count} vertices "
                    f"(oracle limit {max_component})"
                )
            if assumption is CountingAssumption.NAIVE:
                counts[key] += len(graph.edges)
            elif assumption is CountingAssumption.AT_MOST_ONE:
                counts[key] += brute_matching(graph)
            else:
                counts[key] += brute_edge_cover(graph)
    for i, j in consumed:
        counts[(half1[i].type_id, half2[j].type_id)] += 1
    return CoocTable(dict(counts))


def subset_edge_cover(edges) -> int:
    """Edge cover by enumerating edge subsets in size order; tiny graphs only."""
    edges = sorted(set(edges))
    need_l, need_r = {a for a, _ in edges}, {b for _, b in edges}
    for k in range(len(edges) + 1):
        for subset in combinations(edges, k):
            if {a for a, _ in subset} == need_l and {b for _, b in subset} == need_r:
                return k
    return 0
