# distutils: language = c++
"""Compiled kernels; see ``_pykernels`` for the reference semantics."""
from libc.math cimport sqrt
from libcpp.vector cimport vector

import numpy as np

BACKEND = "cython"


cdef inline double _seg_dist(double px, double py, double ax, double ay,
                             double bx, double by) noexcept nogil:
    # must match geometry.point_segment_distance operation for operation
    cdef double dx = bx - ax
    cdef double dy = by - ay
    cdef double l2 = dx * dx + dy * dy
    cdef double t, ex, ey
    if l2 == 0.0:
        ex = px - ax
        ey = py - ay
    else:
        t = ((px - ax) * dx + (py - ay) * dy) / l2
        if t < 0.0:
            t = 0.0
        elif t > 1.0:
            t = 1.0
        ex = px - (ax + t * dx)
        ey = py - (ay + t * dy)
    return sqrt(ex * ex + ey * ey)


cdef inline Py_ssize_t _bisect_left(const double[::1] a, double x) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = a.shape[0], mid
    while lo < hi:
        mid = (lo + hi) // 2
        if a[mid] < x:
            lo = mid + 1
        else:
            hi = mid
    return lo


cdef inline Py_ssize_t _bisect_right(const double[::1] a, double x) noexcept nogil:
    cdef Py_ssize_t lo = 0, hi = a.shape[0], mid
    while lo < hi:
        mid = (lo + hi) // 2
        if x < a[mid]:
            hi = mid
        else:
            lo = mid + 1
    return lo


def band_edges(x1, y2, ax, ay, double delta):
    cdef const double[::1] vx = np.ascontiguousarray(x1, dtype=np.float64)
    cdef const double[::1] vy = np.ascontiguousarray(y2, dtype=np.float64)
    cdef const double[::1] vax = np.ascontiguousarray(ax, dtype=np.float64)
    cdef const double[::1] vay = np.ascontiguousarray(ay, dtype=np.float64)
    cdef vector[Py_ssize_t] out_i, out_j
    cdef Py_ssize_t n1 = vx.shape[0], n2 = vy.shape[0], n_anchor = vax.shape[0]
    cdef Py_ssize_t i, j, k, k_lo, k_hi, last
    cdef double px, py, pad, y_lo, y_hi, best, d
    if delta > 0.0 and n2 > 0 and n_anchor > 0:
        last = n_anchor - 1
        pad = delta + 1.0
        with nogil:
            for i in range(n1):
                px = vx[i]
                k_lo = _bisect_left(vax, px - pad) - 1
                if k_lo < 0:
                    k_lo = 0
                k_hi = _bisect_right(vax, px + pad)
                if k_hi > last:
                    k_hi = last
                y_lo = vay[k_lo] - pad
                y_hi = vay[k_hi] + pad
                j = _bisect_left(vy, y_lo)
                while j < n2 and vy[j] <= y_hi:
                    py = vy[j]
                    if k_hi == k_lo:
                        best = _seg_dist(px, py, vax[k_lo], vay[k_lo], vax[k_lo], vay[k_lo])
                    else:
                        best = _seg_dist(px, py, vax[k_lo], vay[k_lo], vax[k_lo + 1], vay[k_lo + 1])
                        for k in range(k_lo + 1, k_hi):
                            d = _seg_dist(px, py, vax[k], vay[k], vax[k + 1], vay[k + 1])
                            if d < best:
                                best = d
                    if best < delta:
                        out_i.push_back(i)
                        out_j.push_back(j)
                    j += 1
    cdef Py_ssize_t m = out_i.size()
    res_i = np.empty(m, dtype=np.int64)
    res_j = np.empty(m, dtype=np.int64)
    cdef long long[::1] ri = res_i
    cdef long long[::1] rj = res_j
    for k in range(m):
        ri[k] = out_i[k]
        rj[k] = out_j[k]
    return res_i, res_j


cdef Py_ssize_t _hopcroft_karp(Py_ssize_t n_left, Py_ssize_t n_right,
                               const long long* indptr, const long long* indices,
                               long long* match_l, long long* match_r,
                               long long* dist, long long* it,
                               long long* queue, long long* stack,
                               long long* path) noexcept nogil:
    # indptr has n_left + 1 entries, relative to indices
    cdef long long INF = n_left + n_right + 2
    cdef long long limit, u, v, w, root
    cdef Py_ssize_t head, tail, top, s, p
    cdef Py_ssize_t size = 0
    cdef bint advanced
    for u in range(n_left):
        match_l[u] = -1
    for v in range(n_right):
        match_r[v] = -1
    while True:
        tail = 0
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                queue[tail] = u
                tail += 1
            else:
                dist[u] = INF
        limit = INF
        head = 0
        while head < tail:
            u = queue[head]
            head += 1
            if dist[u] >= limit:
                continue
            for p in range(indptr[u], indptr[u + 1]):
                w = match_r[indices[p]]
                if w == -1:
                    if limit == INF:
                        limit = dist[u] + 1
                elif dist[w] == INF:
                    dist[w] = dist[u] + 1
                    queue[tail] = w
                    tail += 1
        if limit == INF:
            break
        for u in range(n_left):
            it[u] = indptr[u]
        for root in range(n_left):
            if match_l[root] != -1:
                continue
            stack[0] = root
            top = 1  # stack size; path holds top - 1 entries until success
            while top > 0:
                u = stack[top - 1]
                advanced = False
                while it[u] < indptr[u + 1]:
                    v = indices[it[u]]
                    it[u] += 1
                    w = match_r[v]
                    if w == -1:
                        if dist[u] + 1 == limit:
                            path[top - 1] = v
                            for s in range(top):
                                match_l[stack[s]] = path[s]
                                match_r[path[s]] = stack[s]
                            size += 1
                            top = 0
                            advanced = True
                            break
                    elif dist[w] == dist[u] + 1:
                        path[top - 1] = v
                        stack[top] = w
                        top += 1
                        advanced = True
                        break
                if not advanced:
                    dist[u] = INF
                    top -= 1
    return size


def hopcroft_karp(n_left, n_right, indptr, indices):
    cdef Py_ssize_t nl = n_left, nr = n_right
    cdef const long long[::1] vptr = np.ascontiguousarray(indptr, dtype=np.int64)
    cdef const long long[::1] vidx = np.ascontiguousarray(indices, dtype=np.int64)
    match_l = np.empty(nl, dtype=np.int64)
    cdef long long[::1] ml = match_l
    cdef vector[long long] match_r, dist, it, queue, stack, path
    match_r.resize(nr + 1)
    dist.resize(nl + 1)
    it.resize(nl + 1)
    queue.resize(nl + 1)
    stack.resize(nl + 1)
    path.resize(nl + 1)
    if nl == 0:
        return match_l
    _hopcroft_karp(nl, nr, &vptr[0], &vidx[0] if vidx.shape[0] else NULL,
                   &ml[0], match_r.data(), dist.data(), it.data(),
                   queue.data(), stack.data(), path.data())
    return match_l


def matching_sizes(edge_ptr, n_lefts, n_rights, lefts, rights):
    cdef const long long[::1] vptr = np.ascontiguousarray(edge_ptr, dtype=np.int64)
    cdef const long long[::1] vnl = np.ascontiguousarray(n_lefts, dtype=np.int64)
    cdef const long long[::1] vnr = np.ascontiguousarray(n_rights, dtype=np.int64)
    cdef const long long[::1] vl = np.ascontiguousarray(lefts, dtype=np.int64)
    cdef const long long[::1] vr = np.ascontiguousarray(rights, dtype=np.int64)
    cdef Py_ssize_t n_groups = vnl.shape[0]
    sizes = np.zeros(n_groups, dtype=np.int64)
    cdef long long[::1] vs = sizes
    cdef Py_ssize_t g, p, u, nl, nr, start, stop, max_l = 1, max_r = 1
    for g in range(n_groups):
        if vnl[g] > max_l:
            max_l = vnl[g]
        if vnr[g] > max_r:
            max_r = vnr[g]
    cdef vector[long long] indptr, match_l, match_r, dist, it, queue, stack, path
    indptr.resize(max_l + 1)
    match_l.resize(max_l)
    match_r.resize(max_r)
    dist.resize(max_l)
    it.resize(max_l)
    queue.resize(max_l)
    stack.resize(max_l)
    path.resize(max_l)
    with nogil:
        for g in range(n_groups):
            start = vptr[g]
            stop = vptr[g + 1]
            nl = vnl[g]
            nr = vnr[g]
            if nl == 0 or stop == start:
                continue
            for u in range(nl + 1):
                indptr[u] = 0
            for p in range(start, stop):
                indptr[vl[p] + 1] += 1
            for u in range(nl):
                indptr[u + 1] += indptr[u]
            vs[g] = _hopcroft_karp(nl, nr, indptr.data(), &vr[start],
                                   match_l.data(), match_r.data(), dist.data(),
                                   it.data(), queue.data(), stack.data(), path.data())
    return sizes


def lcs_length(str a, str b):
    if len(a) < len(b):
        a, b = b, a
    cdef Py_ssize_t n = len(b), k
    cdef vector[Py_ssize_t] prev, cur
    prev.resize(n + 1)
    cur.resize(n + 1)
    cdef Py_UCS4 ca
    cdef const unsigned int[::1] bc = np.array([ord(c) for c in b], dtype=np.uint32)
    for ca in a:
        cur[0] = 0
        for k in range(n):
            if bc[k] == <unsigned int>ca:
                cur[k + 1] = prev[k] + 1
            elif cur[k] > prev[k + 1]:
                cur[k + 1] = cur[k]
            else:
                cur[k + 1] = prev[k + 1]
        prev.swap(cur)
    return prev[n]
