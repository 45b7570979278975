"""Pure-Python kernels; reference twin of ``_ckernels.pyx``.

Both modules implement the same algorithms in the same order, so they
return identical results (including which maximum matching is chosen).
"""
from bisect import bisect_left, bisect_right

import numpy as np

from .geometry import point_segment_distance

BACKEND = "python"


def band_edges(x1, y2, ax, ay, delta):
    """All ``(i, j)`` with distance from ``(x1[i], y2[j])`` to the polyline < delta.

    ``x1`` and ``y2`` are nondecreasing token coordinates, ``ax``/``ay`` the
    anchors of a monotonic polyline. Output is in lexicographic order.
    """
    x1 = np.asarray(x1, dtype=np.float64).tolist()
    y2 = np.asarray(y2, dtype=np.float64).tolist()
    ax = np.asarray(ax, dtype=np.float64).tolist()
    ay = np.asarray(ay, dtype=np.float64).tolist()
    delta = float(delta)
    out_i = []
    out_j = []
    n_anchor = len(ax)
    if delta <= 0.0 or not y2 or n_anchor == 0:
        return np.array(out_i, dtype=np.int64), np.array(out_j, dtype=np.int64)
    last = n_anchor - 1
    # one unit of slack keeps the window sound under rounding
    pad = delta + 1.0
    for i, px in enumerate(x1):
        k_lo = bisect_left(ax, px - pad) - 1
        if k_lo < 0:
            k_lo = 0
        k_hi = bisect_right(ax, px + pad)
        if k_hi > last:
            k_hi = last
        y_lo = ay[k_lo] - pad
        y_hi = ay[k_hi] + pad
        j = bisect_left(y2, y_lo)
        n2 = len(y2)
        while j < n2 and y2[j] <= y_hi:
            py = y2[j]
            if k_hi == k_lo:
                best = point_segment_distance(px, py, ax[k_lo], ay[k_lo], ax[k_lo], ay[k_lo])
            else:
                best = point_segment_distance(px, py, ax[k_lo], ay[k_lo], ax[k_lo + 1], ay[k_lo + 1])
                for k in range(k_lo + 1, k_hi):
                    d = point_segment_distance(px, py, ax[k], ay[k], ax[k + 1], ay[k + 1])
                    if d < best:
                        best = d
            if best < delta:
                out_i.append(i)
                out_j.append(j)
            j += 1
    return np.array(out_i, dtype=np.int64), np.array(out_j, dtype=np.int64)


def _hopcroft_karp(n_left, n_right, indptr, indices, base):
    """Maximum matching on the CSR graph stored at ``indices[base:]``.

    ``indptr`` holds offsets relative to ``base``. Returns the left match
    array (-1 for unmatched) and the matching size.
    """
    INF = n_left + n_right + 2
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    dist = [0] * n_left
    it = [0] * n_left
    size = 0
    while True:
        # BFS layering from free left vertices
        queue = []
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue.append(u)
            else:
                dist[u] = INF
        limit = INF
        head = 0
        while head < len(queue):
            u = queue[head]
            head += 1
            if dist[u] >= limit:
                continue
            for p in range(indptr[u], indptr[u + 1]):
                w = match_r[indices[base + p]]
                if w == -1:
                    if limit == INF:
                        limit = dist[u] + 1
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue.append(w)
        if limit == INF:
            break
        for u in range(n_left):
            it[u] = indptr[u]
        # layered DFS from each free left vertex, lowest index first
        for root in range(n_left):
            if match_l[root] != -1:
                continue
            stack = [root]
            path = []
            while stack:
                u = stack[-1]
                advanced = False
                while it[u] < indptr[u + 1]:
                    v = indices[base + it[u]]
                    it[u] += 1
                    w = match_r[v]
                    if w == -1:
                        if dist[u] + 1 == limit:
                            path.append(v)
                            for s, t in zip(stack, path):
                                match_l[s] = t
                                match_r[t] = s
                            size += 1
                            stack = []
                            advanced = True
                            break
                    elif dist[w] == dist[u] + 1:
                        path.append(v)
                        stack.append(w)
                        advanced = True
                        break
                if not advanced:
                    dist[u] = INF
                    stack.pop()
                    if path:
                        path.pop()
    return match_l, size


def hopcroft_karp(n_left, n_right, indptr, indices):
    """Maximum-cardinality matching of a bipartite CSR graph.

    Returns an int64 array mapping each left vertex to its partner, -1 if
    unmatched.
    """
    indptr = np.asarray(indptr, dtype=np.int64).tolist()
    indices = np.asarray(indices, dtype=np.int64).tolist()
    match_l, _ = _hopcroft_karp(int(n_left), int(n_right), indptr, indices, 0)
    return np.array(match_l, dtype=np.int64)


def matching_sizes(edge_ptr, n_lefts, n_rights, lefts, rights):
    """Matching size of each graph in a batch.

    Graph ``g`` owns edges ``edge_ptr[g]:edge_ptr[g + 1]`` of ``lefts`` and
    ``rights`` (local vertex ids, sorted by left id).
    """
    edge_ptr = np.asarray(edge_ptr, dtype=np.int64).tolist()
    n_lefts = np.asarray(n_lefts, dtype=np.int64).tolist()
    n_rights = np.asarray(n_rights, dtype=np.int64).tolist()
    lefts = np.asarray(lefts, dtype=np.int64).tolist()
    rights = np.asarray(rights, dtype=np.int64).tolist()
    sizes = []
    for g in range(len(n_lefts)):
        start, stop = edge_ptr[g], edge_ptr[g + 1]
        nl = n_lefts[g]
        indptr = [0] * (nl + 1)
        for p in range(start, stop):
            indptr[lefts[p] + 1] += 1
        for u in range(nl):
            indptr[u + 1] += indptr[u]
        _, size = _hopcroft_karp(nl, n_rights[g], indptr, rights, start)
        sizes.append(size)
    return np.array(sizes, dtype=np.int64)


def lcs_length(a, b):
    """Length of the longest common subsequence of two strings."""
    if len(a) < len(b):
        a, b = b, a
    prev = [0] * (len(b) + 1)
    for ca in a:
        cur = [0]
        for k, cb in enumerate(b):
            if ca == cb:
                cur.append(prev[k] + 1)
            else:
                cur.append(cur[k] if cur[k] > prev[k + 1] else prev[k + 1])
        prev = cur
    return prev[-1]
