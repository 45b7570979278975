#!/usr/bin/env python
"""Compare the compiled and pure-Python kernels.

Times each kernel on inputs drawn from a synthetic bitext, then the whole
distance-model count, once per backend:

    python benchmarks/bench_kernels.py --tokens 10000 --delta 20
"""
import argparse
import random
import time

import numpy as np

from cooc import DistanceModel, kernels, tokenize
from cooc.geometry import BitextSpace, load_map
from cooc.synthetic import make_bitext


def best_of(repeat, fn, *args):
    times = []
    for _ in range(repeat):
        start = time.perf_counter()
        fn(*args)
        times.append(time.perf_counter() - start)
    return min(times)


def matching_batch(n_graphs, seed=0):
    rng = random.Random(seed)
    ptr, nls, nrs, ls, rs = [0], [], [], [], []
    for _ in range(n_graphs):
        nl, nr = rng.randint(2, 12), rng.randint(2, 12)
        edges = sorted({(rng.randrange(nl), rng.randrange(nr)) for _ in range(rng.randint(2, 40))})
        nls.append(nl)
        nrs.append(nr)
        ls += [a for a, _ in edges]
        rs += [b for _, b in edges]
        ptr.append(len(ls))
    return [np.array(x, dtype=np.int64) for x in (ptr, nls, nrs, ls, rs)]


def main():
    parser = argparse.ArgumentParser(description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--tokens", type=int, default=10_000)
    parser.add_argument("--delta", type=float, default=20.0)
    parser.add_argument("--graphs", type=int, default=20_000)
    parser.add_argument("--repeat", type=int, default=3)
    args = parser.parse_args()

    bitext = make_bitext(args.tokens, seed=1)
    half1, half2 = tokenize(bitext.text1), tokenize(bitext.text2)
    bmap = load_map(bitext.anchors, BitextSpace(half1.length, half2.length))
    band_args = (
        np.array(half1.coordinates(), dtype=np.float64),
        np.array(half2.coordinates(), dtype=np.float64),
        np.array(bmap.xs, dtype=np.float64),
        np.array(bmap.ys, dtype=np.float64),
        args.delta,
    )
    batch = matching_batch(args.graphs)
    words = [("".join(random.Random(k).choices("abcdef", k=12)), "".join(random.Random(-k).choices("abcdef", k=12))) for k in range(2000)]

    backends = kernels.available_backends()
    if len(backends) < 2:
        print("compiled kernels are not built; only the pure-Python backend is timed")
    rows = []
    for mod in backends:
        n_edges = len(mod.band_edges(*band_args)[0])
        t_band = best_of(args.repeat, mod.band_edges, *band_args)
        t_match = best_of(args.repeat, mod.matching_sizes, *batch)
        t_lcs = best_of(args.repeat, lambda: [mod.lcs_length(a, b) for a, b in words])

        def full_count():
            saved = {n: getattr(kernels, n) for n in ("band_edges", "matching_sizes")}
            kernels.band_edges, kernels.matching_sizes = mod.band_edges, mod.matching_sizes
            try:
                from cooc import count_all

                count_all(DistanceModel(bmap, args.delta), half1, half2, "at_least_one")
            finally:
                for n, f in saved.items():
                    setattr(kernels, n, f)

        t_total = best_of(args.repeat, full_count)
        rows.append((mod.BACKEND, t_band, t_match, t_lcs, t_total))

    print(f"{args.tokens} x {args.tokens} tokens, delta {args.delta:g}: {n_edges} edges; "
          f"{args.graphs} matching graphs; {len(words)} LCS pairs")
    print(f"{'backend':<8} {'band_edges':>11} {'matching':>10} {'lcs':>8} {'count_all':>10}")
    for name, *times in rows:
        print(f"{name:<8} " + " ".join(f"{t:>{w}.4f}" for t, w in zip(times, (11, 10, 8, 10))))
    if len(rows) == 2:
        ratios = [p / c for p, c in zip(rows[0][1:], rows[1][1:])]
        print(f"{'speedup':<8} " + " ".join(f"{r:>{w - 1}.1f}x" for r, w in zip(ratios, (11, 10, 8, 10))))


if __name__ == "__main__":
    main()
