"""Both kernel backends must return identical results."""
import random

import numpy as np
import pytest

from cooc import kernels
from cooc import _pykernels

BACKENDS = kernels.available_backends()
compiled = pytest.mark.skipif(len(BACKENDS) < 2, reason="compiled kernels not built")


def csr(nl, edges):
    edges = sorted(edges)
    indptr = [0] * (nl + 1)
    for a, _ in edges:
        indptr[a + 1] += 1
    for k in range(nl):
        indptr[k + 1] += indptr[k]
    return indptr, [b for _, b in edges]


def test_selection_reports_backend():
    assert kernels.BACKEND in {m.BACKEND for m in BACKENDS}
    assert BACKENDS[0] is _pykernels


def test_python_matching_paths():
    # an augmenting path of length 5 forces a rematch through the DFS stack
    edges = [(0, 0), (0, 1), (1, 0), (2, 1), (2, 2)]
    indptr, indices = csr(3, edges)
    match = _pykernels.hopcroft_karp(3, 3, indptr, indices)
    assert sorted(match.tolist()) == [0, 1, 2]


@compiled
def test_matchings_identical():
    rng = random.Random(0)
    py, c = BACKENDS
    for _ in range(500):
        nl, nr = rng.randint(0, 12), rng.randint(0, 12)
        p = rng.random()
        edges = [(a, b) for a in range(nl) for b in range(nr) if rng.random() < p]
        indptr, indices = csr(nl, edges)
        assert py.hopcroft_karp(nl, nr, indptr, indices).tolist() == c.hopcroft_karp(nl, nr, indptr, indices).tolist()


@compiled
def test_batched_sizes_identical():
    rng = random.Random(1)
    ptr, nls, nrs, ls, rs = [0], [], [], [], []
    for _ in range(300):
        nl, nr = rng.randint(1, 9), rng.randint(1, 9)
        edges = sorted({(rng.randrange(nl), rng.randrange(nr)) for _ in range(rng.randint(1, 25))})
        nls.append(nl)
        nrs.append(nr)
        ls += [a for a, _ in edges]
        rs += [b for _, b in edges]
        ptr.append(len(ls))
    py, c = BACKENDS
    sizes = py.matching_sizes(ptr, nls, nrs, ls, rs)
    assert sizes.tolist() == c.matching_sizes(ptr, nls, nrs, ls, rs).tolist()
    # spot-check a batched size against a standalone run
    k = 17
    sub = list(zip(ls[ptr[k] : ptr[k + 1]], rs[ptr[k] : ptr[k + 1]]))
    indptr, indices = csr(nls[k], sub)
    assert (py.hopcroft_karp(nls[k], nrs[k], indptr, indices) >= 0).sum() == sizes[k]


@compiled
def test_band_edges_identical_near_threshold():
    rng = np.random.default_rng(4)
    py, c = BACKENDS
    for _ in range(30):
        x1 = np.sort(rng.integers(0, 2000, 400)) + 0.5
        y2 = np.sort(rng.integers(0, 2000, 400)) + 0.5
        ax = np.concatenate([[0], np.sort(rng.integers(0, 2000, 6)), [2000]]).astype(float)
        ay = np.concatenate([[0], np.sort(rng.integers(0, 2000, 6)), [2000]]).astype(float)
        # integer and half-integer deltas put many pairs exactly on the boundary
        for delta in (0.0, 0.5, 1.0, 2 ** 0.5 / 2, 7.0, 25.5):
            a = py.band_edges(x1, y2, ax, ay, delta)
            b = c.band_edges(x1, y2, ax, ay, delta)
            assert a[0].tolist() == b[0].tolist() and a[1].tolist() == b[1].tolist()


@compiled
def test_lcs_identical():
    rng = random.Random(3)
    py, c = BACKENDS
    for _ in range(300):
        a = "".join(rng.choice("abcd€") for _ in range(rng.randint(0, 15)))
        b = "".join(rng.choice("abcd€") for _ in range(rng.randint(0, 15)))
        assert py.lcs_length(a, b) == c.lcs_length(a, b)


def test_empty_inputs(backend):
    assert kernels.hopcroft_karp(0, 0, [0], []).tolist() == []
    assert kernels.matching_sizes([0], [], [], [], []).tolist() == []
    i, j = kernels.band_edges([1.0], [], [0.0, 5.0], [0.0, 5.0], 3.0)
    assert i.tolist() == [] and j.tolist() == []
    assert kernels.lcs_length("", "abc") == 0
