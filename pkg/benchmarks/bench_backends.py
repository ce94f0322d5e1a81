"""Benchmark the matching kernels: numba @njit versus the plain-Python path.

Runs both implementations on the same corpus and prints per-corpus timings
plus the speedup.  The active backend for library calls is chosen by the
MATCHKIT_BACKEND environment variable; this script times both explicitly.

Usage: python benchmarks/bench_backends.py [--repeat N]
"""

import argparse
import random
import statistics
import time

import numpy as np

from matchkit import _kernels
from matchkit.multigraph import complete_graph, cycle_graph, from_pairs
from matchkit.reduction import SubdivisionSpec, subdivide_edge


def corpus():
    rng = random.Random(2024)
    graphs = []

    # family-search style: small dense multigraphs
    small = []
    for _ in range(400):
        n = rng.choice((4, 6, 8))
        m = rng.randrange(4, 2 * n)
        edges = []
        for i in range(m):
            u = rng.randrange(n)
            v = rng.randrange(n - 1)
            if v >= u:
                v += 1
            edges.append((min(u, v), max(u, v)))
        small.append(from_pairs(n, edges))
    graphs.append(("random n<=8 (400 graphs)", small, None))

    # minimality-test style: capped counts on member-like graphs
    capped = []
    for _ in range(200):
        g = complete_graph(4)
        for eid in list(g.edge_ids())[: rng.randrange(0, 6)]:
            g = subdivide_edge(g, SubdivisionSpec(eid, rng.choice((2, 4))))
        capped.append(g)
    graphs.append(("subdivided K4, cap=5 (200 graphs)", capped, 5))

    # wide graphs with many matchings
    wide = [complete_graph(10), complete_graph(12), cycle_graph(20)]
    graphs.append(("dense n<=12 (3 graphs)", wide, None))
    return graphs


def run(kernel, graphs, cap):
    total = 0
    cap64 = np.int64(cap) if cap is not None else _kernels.NO_CAP
    for g in graphs:
        indptr, inc_other, _, _ = g._incidence
        total += int(kernel(np.int64(g.vertex_count), indptr, inc_other, cap64))
    return total


def bench(kernel, graphs, cap, repeat):
    times = []
    checksum = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        checksum = run(kernel, graphs, cap)
        times.append(time.perf_counter() - t0)
    return min(times), statistics.mean(times), checksum


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--repeat", type=int, default=5)
    args = ap.parse_args()

    jitted = _kernels.numba_kernels()
    if jitted is None:
        print("numba is not installed; only the python path can run")
        return
    count_jit, _ = jitted

    # trigger compilation outside the timed region
    warm = cycle_graph(4)
    indptr, inc_other, _, _ = warm._incidence
    count_jit(np.int64(4), indptr, inc_other, _kernels.NO_CAP)

    print(f"{'corpus':38} {'numba':>10} {'python':>10} {'speedup':>8}")
    for name, graphs, cap in corpus():
        jit_best, _, jit_sum = bench(count_jit, graphs, cap, args.repeat)
        py_best, _, py_sum = bench(_kernels.count_kernel_python, graphs, cap, args.repeat)
        assert jit_sum == py_sum, f"backend mismatch on {name}: {jit_sum} != {py_sum}"
        print(
            f"{name:38} {jit_best * 1e3:9.2f}ms {py_best * 1e3:9.2f}ms "
            f"{py_best / jit_best:7.1f}x"
        )
    print("\nchecksums matched on every corpus (identical results on both paths)")


if __name__ == "__main__":
    main()
