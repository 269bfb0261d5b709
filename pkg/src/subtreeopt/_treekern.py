"""Compiled traversal kernels over the CSR child layout of ``RootedTree``.

All kernels are iterative; trees of depth 10**6 must not touch the call stack.
"""

import numba as nb
import numpy as np


@nb.njit(cache=True)
def bfs_order(child_ptr, child_idx, root):
    n = child_ptr.shape[0] - 1
    order = np.empty(n, np.int64)
    seen = np.zeros(n, np.bool_)
    order[0] = root
    seen[root] = True
    head = 0
    tail = 1
    while head < tail:
        v = order[head]
        head += 1
        for j in range(child_ptr[v], child_ptr[v + 1]):
            c = child_idx[j]
            if seen[c]:
                return order, -1
            seen[c] = True
            order[tail] = c
            tail += 1
    return order, tail


@nb.njit(cache=True)
def check_prune_flags(parent, order, flags):
    """Return 0 if ``flags`` marks a valid antichain without the root, 1 if it
    marks the root, 2 if some marked node lies below another marked node."""
    n = order.shape[0]
    below = np.zeros(n, np.bool_)
    root = order[0]
    if flags[root]:
        return 1
    for t in range(1, n):
        v = order[t]
        p = parent[v]
        below[v] = below[p] or flags[p]
        if flags[v] and below[v]:
            return 2
    return 0


@nb.njit(cache=True)
def kept_mask(parent, order, flags):
    """Nodes that survive after removing every flagged node with its descendants."""
    n = order.shape[0]
    kept = np.zeros(n, np.bool_)
    kept[order[0]] = True
    for t in range(1, n):
        v = order[t]
        kept[v] = kept[parent[v]] and not flags[v]
    return kept


@nb.njit(cache=True)
def topmost_flags(parent, order, flags):
    """Reduce an arbitrary flag set to its topmost members (an antichain)."""
    n = order.shape[0]
    out = np.zeros(n, np.bool_)
    kept = np.zeros(n, np.bool_)
    kept[order[0]] = True
    for t in range(1, n):
        v = order[t]
        if kept[parent[v]]:
            if flags[v]:
                out[v] = True
            else:
                kept[v] = True
    return out


@nb.njit(cache=True)
def fixed_lambda_pass(parent, order, value_a, value_b, lam):
    """Maximum-weight root subtree for weights a*lam + b; a child whose
    contribution is <= 0 is pruned."""
    n = order.shape[0]
    g = np.empty(n, np.float64)
    for v in range(n):
        g[v] = value_a[v] * lam + value_b[v]
    pruned = np.zeros(n, np.bool_)
    for t in range(n - 1, 0, -1):
        v = order[t]
        if g[v] > 0.0:
            g[parent[v]] += g[v]
        else:
            pruned[v] = True
    return g[order[0]], pruned
