"""Dynamic-programming kernels for weighted edit distance.

The hot loops live here so they can be JIT-compiled with numba.  Setting
MEDIANSTRING_NO_NUMBA=1 in the environment (or a missing numba install)
falls back to plain Python versions with identical semantics; the test
suite cross-checks the two paths.
"""

from __future__ import annotations

import os

import numpy as np

USING_NUMBA = False
if not os.environ.get("MEDIANSTRING_NO_NUMBA"):
    try:
        from numba import njit

        USING_NUMBA = True
    except ImportError:  # pragma: no cover - numba is a declared dependency
        pass

if not USING_NUMBA:  # pragma: no cover - exercised via the env switch

    def njit(*args, **kwargs):
        def wrap(fn):
            return fn

        if args and callable(args[0]):
            return args[0]
        return wrap


@njit(cache=True)
def dp_cost(a, b, costs):
    """Edit-distance value between code arrays ``a`` and ``b`` (rolling rows)."""
    eps = costs.shape[0] - 1
    la = a.shape[0]
    lb = b.shape[0]
    prev = np.empty(lb + 1, dtype=np.float64)
    cur = np.empty(lb + 1, dtype=np.float64)
    prev[0] = 0.0
    for j in range(1, lb + 1):
        prev[j] = prev[j - 1] + costs[eps, b[j - 1]]
    for i in range(1, la + 1):
        ai = a[i - 1]
        del_ai = costs[ai, eps]
        cur[0] = prev[0] + del_ai
        for j in range(1, lb + 1):
            bj = b[j - 1]
            best = prev[j - 1] + costs[ai, bj]
            cand = prev[j] + del_ai
            if cand < best:
                best = cand
            cand = cur[j - 1] + costs[eps, bj]
            if cand < best:
                best = cand
            cur[j] = best
        tmp = prev
        prev = cur
        cur = tmp
    return prev[lb]


@njit(cache=True)
def dp_matrix(a, b, costs):
    """Full (la+1) x (lb+1) edit-distance table, for traceback."""
    eps = costs.shape[0] - 1
    la = a.shape[0]
    lb = b.shape[0]
    D = np.empty((la + 1, lb + 1), dtype=np.float64)
    D[0, 0] = 0.0
    for j in range(1, lb + 1):
        D[0, j] = D[0, j - 1] + costs[eps, b[j - 1]]
    for i in range(1, la + 1):
        ai = a[i - 1]
        del_ai = costs[ai, eps]
        D[i, 0] = D[i - 1, 0] + del_ai
        for j in range(1, lb + 1):
            bj = b[j - 1]
            best = D[i - 1, j - 1] + costs[ai, bj]
            cand = D[i - 1, j] + del_ai
            if cand < best:
                best = cand
            cand = D[i, j - 1] + costs[eps, bj]
            if cand < best:
                best = cand
            D[i, j] = best
    return D


@njit(cache=True)
def dp_cost_batch(a, flat, starts, lengths, costs):
    """Sum of edit distances from ``a`` to every string packed in ``flat``.

    ``flat`` concatenates the member code arrays; ``starts``/``lengths``
    delimit them.  One call replaces many dp_cost calls in the inner loop
    of candidate evaluation.
    """
    eps = costs.shape[0] - 1
    la = a.shape[0]
    total = 0.0
    max_lb = 0
    for m in range(lengths.shape[0]):
        if lengths[m] > max_lb:
            max_lb = lengths[m]
    prev = np.empty(max_lb + 1, dtype=np.float64)
    cur = np.empty(max_lb + 1, dtype=np.float64)
    for m in range(starts.shape[0]):
        s = starts[m]
        lb = lengths[m]
        prev[0] = 0.0
        for j in range(1, lb + 1):
            prev[j] = prev[j - 1] + costs[eps, flat[s + j - 1]]
        for i in range(1, la + 1):
            ai = a[i - 1]
            del_ai = costs[ai, eps]
            cur[0] = prev[0] + del_ai
            for j in range(1, lb + 1):
                bj = flat[s + j - 1]
                best = prev[j - 1] + costs[ai, bj]
                cand = prev[j] + del_ai
                if cand < best:
                    best = cand
                cand = cur[j - 1] + costs[eps, bj]
                if cand < best:
                    best = cand
                cur[j] = best
            tmp = prev
            prev = cur
            cur = tmp
        total += prev[lb]
    return total


def warm_up():
    """Trigger JIT compilation of all kernels on tiny inputs."""
    a = np.array([0], dtype=np.uint16)
    b = np.array([1, 0], dtype=np.uint16)
    costs = np.array([[0.0, 1.0, 1.0], [1.0, 0.0, 1.0], [1.0, 1.0, 0.0]])
    dp_cost(a, b, costs)
    dp_matrix(a, b, costs)
    dp_cost_batch(
        a,
        b,
        np.array([0, 1], dtype=np.int64),
        np.array([1, 1], dtype=np.int64),
        costs,
    )
