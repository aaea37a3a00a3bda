"""Compare the numba and numpy paths of the two enumeration kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

First numba call includes compilation (or a cache load); it is timed
separately and left out of the best-of timing.
"""

import argparse
import time

import numpy as np

from sepoly import kernels
from sepoly.facets import enumerate_facets, facet_matrix
from sepoly.graph import complete_graph, make_complete_bipartite


def best_of(fn, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn()
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    cases = []
    for label, g, n in [("K_{3,3}", make_complete_bipartite(3, 3), 4), ("K_6", complete_graph(6), 3),
                        ("K_{3,4}", make_complete_bipartite(3, 4), 3)]:
        mat = facet_matrix(enumerate_facets(g))
        cases.append((f"box scan {label}, n={n}",
                      lambda m=mat, n=n, flag=None: kernels.box_count(m, n, use_numba=flag)))
    for a, b in [(5, 5), (6, 6), (6, 7)]:
        cases.append((f"colorings a={a} b={b}",
                      lambda a=a, b=b, flag=None: kernels.coloring_histogram(a, b, use_numba=flag)))

    print(f"{'case':32} {'numba first':>12} {'numba':>10} {'numpy':>10} {'speedup':>8}")
    for name, fn in cases:
        t0 = time.perf_counter()
        first = fn(flag=True)
        warm = time.perf_counter() - t0
        t_nb, r_nb = best_of(lambda: fn(flag=True), args.repeat)
        t_np, r_np = best_of(lambda: fn(flag=False), args.repeat)
        same = np.array_equal(r_nb, r_np) and np.array_equal(first, r_nb)
        flag = "" if same else "  MISMATCH"
        print(f"{name:32} {warm:12.3f} {t_nb:10.4f} {t_np:10.4f} {t_np / t_nb:8.1f}{flag}")


if __name__ == "__main__":
    main()
