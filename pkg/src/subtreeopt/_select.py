"""Selection of the k-th smallest node value, where node values are the
ratios ``profit[i] / cost[i]`` compared by cross-multiplication.

``quickselect`` is randomized (splitmix64 stream held in a 1-element state
array so runs are reproducible and thread-private); ``mom_select`` is the
deterministic median-of-medians variant.
"""

import numba as nb
import numpy as np


@nb.njit(cache=True)
def _next_rand(state):
    state[0] += np.uint64(0x9E3779B97F4A7C15)
    z = state[0]
    z = (z ^ (z >> np.uint64(30))) * np.uint64(0xBF58476D1CE4E5B9)
    z = (z ^ (z >> np.uint64(27))) * np.uint64(0x94D049BB133111EB)
    return z ^ (z >> np.uint64(31))


@nb.njit(cache=True)
def _cmp(profit, cost, i, j):
    lhs = profit[i] * cost[j]
    rhs = profit[j] * cost[i]
    if lhs < rhs:
        return -1
    if lhs > rhs:
        return 1
    return 0


@nb.njit(cache=True)
def _partition3(profit, cost, idx, lo, hi, pivot):
    """Dutch-flag partition of idx[lo:hi] around node ``pivot``.
    Returns (lt, gt): idx[lo:lt] < pivot, idx[lt:gt] == pivot, idx[gt:hi] > pivot."""
    lt = lo
    i = lo
    gt = hi
    while i < gt:
        c = _cmp(profit, cost, idx[i], pivot)
        if c < 0:
            tmp = idx[lt]
            idx[lt] = idx[i]
            idx[i] = tmp
            lt += 1
            i += 1
        elif c > 0:
            gt -= 1
            tmp = idx[gt]
            idx[gt] = idx[i]
            idx[i] = tmp
        else:
            i += 1
    return lt, gt


@nb.njit(cache=True)
def quickselect(profit, cost, idx, k, state):
    """Node id holding the k-th smallest value among ``idx`` (reordered in place)."""
    lo = 0
    hi = idx.shape[0]
    while True:
        if hi - lo == 1:
            return idx[lo]
        r = lo + np.int64(_next_rand(state) % np.uint64(hi - lo))
        pivot = idx[r]
        lt, gt = _partition3(profit, cost, idx, lo, hi, pivot)
        if k < lt:
            hi = lt
        elif k >= gt:
            lo = gt
        else:
            return pivot


@nb.njit(cache=True)
def _insertion_sort(profit, cost, idx, lo, hi):
    for i in range(lo + 1, hi):
        x = idx[i]
        j = i - 1
        while j >= lo and _cmp(profit, cost, idx[j], x) > 0:
            idx[j + 1] = idx[j]
            j -= 1
        idx[j + 1] = x


# recursive, so kept out of the on-disk cache
@nb.njit(cache=False)
def mom_select(profit, cost, idx, k):
    """Deterministic worst-case linear selection (groups of five)."""
    lo = 0
    hi = idx.shape[0]
    while True:
        size = hi - lo
        if size <= 5:
            _insertion_sort(profit, cost, idx, lo, hi)
            return idx[k]
        ngroups = (size + 4) // 5
        medians = np.empty(ngroups, np.int64)
        for g in range(ngroups):
            a = lo + 5 * g
            b = min(a + 5, hi)
            _insertion_sort(profit, cost, idx, a, b)
            medians[g] = idx[(a + b - 1) // 2]
        pivot = mom_select(profit, cost, medians, ngroups // 2)
        lt, gt = _partition3(profit, cost, idx, lo, hi, pivot)
        if k < lt:
            hi = lt
        elif k >= gt:
            lo = gt
        else:
            return pivot
