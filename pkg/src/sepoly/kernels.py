"""Hot enumeration loops, each with a numba and a pure-numpy implementation.

Set ``SEPOLY_DISABLE_NUMBA=1`` to force the numpy paths (also used when numba
is not importable). Both paths return identical integers; the test-suite runs
them against each other.
"""

from __future__ import annotations

import os

import numpy as np

try:
    import numba
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None

USE_NUMBA = numba is not None and os.environ.get("SEPOLY_DISABLE_NUMBA", "") not in ("1", "true", "yes")

if numba is not None:
    njit = numba.njit(cache=True, nogil=True)
else:  # pragma: no cover
    def njit(f):
        return f


# ---------------------------------------------------------------------------
# lattice points of n*P inside the sum-zero box


@njit
def _box_count_numba(facets, n):
    m, nv = facets.shape
    free = nv - 1
    x = np.full(free, -n, dtype=np.int64)
    total = 0
    while True:
        s = 0
        for i in range(free):
            s += x[i]
        last = -s
        if -n <= last <= n:
            inside = True
            for k in range(m):
                acc = facets[k, free] * last
                for i in range(free):
                    acc += facets[k, i] * x[i]
                if acc > n:
                    inside = False
                    break
            if inside:
                total += 1
        # odometer increment
        i = free - 1
        while i >= 0:
            x[i] += 1
            if x[i] <= n:
                break
            x[i] = -n
            i -= 1
        if i < 0:
            break
    return total


_BLOCK_ROWS = 1 << 16


def _box_count_numpy(facets, n):
    m, nv = facets.shape
    free = nv - 1
    side = 2 * n + 1
    if free == 0:
        return 1
    # vectorize the trailing coordinates, loop over the leading ones
    inner = free
    while inner > 1 and side**inner > _BLOCK_ROWS:
        inner -= 1
    outer = free - inner
    inner_grid = (np.indices((side,) * inner).reshape(inner, -1).T - n).astype(np.int64)
    total = 0
    for head in np.ndindex(*((side,) * outer)):
        head_vals = np.asarray(head, dtype=np.int64) - n
        pts = np.empty((inner_grid.shape[0], nv), dtype=np.int64)
        pts[:, :outer] = head_vals
        pts[:, outer:free] = inner_grid
        pts[:, free] = -pts[:, :free].sum(axis=1)
        pts = pts[np.abs(pts[:, free]) <= n]
        if pts.size == 0:
            continue
        vals = pts @ facets.T
        total += int(np.count_nonzero(vals.max(axis=1) <= n))
    return total


def box_count(facets: np.ndarray, n: int, use_numba: bool | None = None) -> int:
    """Count x in Z^V with sum 0, |x_v| <= n and <f, x> <= n for every row f."""
    facets = np.ascontiguousarray(facets, dtype=np.int64)
    if n == 0:
        return 1
    if facets.shape[1] == 1:
        return 1
    if use_numba is None:
        use_numba = USE_NUMBA
    if use_numba and numba is not None:
        return int(_box_count_numba(facets, np.int64(n)))
    return _box_count_numpy(facets, n)


# ---------------------------------------------------------------------------
# good 4-colorings of A (a elements) and B (b elements)
# colour code per element, two bits: 0 red, 1 green, 2 white, 3 black


@njit
def _coloring_hist_numba(a, b):
    total = a + b
    hist = np.zeros(total + 1, dtype=np.int64)
    for code in range(1 << (2 * total)):
        red_a = 0
        green_a = 0
        red_b = 0
        green_b = 0
        weight = 0
        c = code
        for k in range(total):
            col = c & 3
            c >>= 2
            if col == 0:
                if k < a:
                    red_a += 1
                else:
                    red_b += 1
            elif col == 1:
                weight += 1
                if k < a:
                    green_a += 1
                else:
                    green_b += 1
            elif col == 2:
                weight += 1
        if red_a == green_b and green_a == red_b:
            hist[weight] += 1
    return hist


def _coloring_hist_numpy(a, b):
    total = a + b
    hist = np.zeros(total + 1, dtype=np.int64)
    n_codes = 1 << (2 * total)
    for start in range(0, n_codes, _BLOCK_ROWS):
        codes = np.arange(start, min(start + _BLOCK_ROWS, n_codes), dtype=np.int64)
        digits = (codes[:, None] >> (2 * np.arange(total, dtype=np.int64))) & 3
        da, db = digits[:, :a], digits[:, a:]
        red_a = (da == 0).sum(axis=1)
        green_a = (da == 1).sum(axis=1)
        red_b = (db == 0).sum(axis=1)
        green_b = (db == 1).sum(axis=1)
        weight = ((digits == 1) | (digits == 2)).sum(axis=1)
        good = (red_a == green_b) & (green_a == red_b)
        hist += np.bincount(weight[good], minlength=total + 1)
    return hist


def coloring_histogram(a: int, b: int, use_numba: bool | None = None) -> list[int]:
    """Number of good colorings c of A+B with g(c) + w(c) = k, for k = 0..a+b."""
    if use_numba is None:
        use_numba = USE_NUMBA
    if use_numba and numba is not None:
        hist = _coloring_hist_numba(np.int64(a), np.int64(b))
    else:
        hist = _coloring_hist_numpy(a, b)
    return [int(v) for v in hist]
