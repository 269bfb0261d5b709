"""Compiled AVL node pool for convex piecewise linear functions.

A function is the root index of a height-balanced search tree keyed by
breakpoint x.  Each node carries the slope/intercept change at its key and the
sums of those changes over its subtree, so the piece at any x is a prefix sum
found in one root-to-leaf descent.

Pool layout (node 0 is the shared nil sentinel, all zeros)::

    F[v] = (key, dA, dB, sumA, sumB)      float64
    I[v] = (left, right, height, size)    int64
    M    = (next fresh slot, free count, comparison counter)
    FL   = free-slot stack
    W    = per-call workspace rows (paths and explicit stacks)

Merging is the join-based union on AVL trees: split the larger tree at the
root key of the smaller one and recurse on both halves.  That costs
O(m log(n/m + 1)) for sizes m <= n, the optimal bound for merging sorted sets, and
every changed path is re-summed by ``_update`` on the way back up.

Everything is iterative: numba's on-disk cache mishandles recursive functions.
"""

import numba as nb
import numpy as np

KEY, DA, DB, SA, SB = 0, 1, 2, 3, 4
LEFT, RIGHT, HEIGHT, SIZE = 0, 1, 2, 3
NEXT, NFREE, CMP = 0, 1, 2

# workspace rows
_W_JOIN = 0
_W_SPLIT = 1
_W_SPLIT_DIR = 2
_W_LAST = 3
_W_U_NODE = 4
_W_U_RA = 5
_W_U_BR = 6
_W_U_STATE = 7
_W_U_UL = 8
_W_STACK = 9
_W_ROWS = 10
# AVL height of 2**40 nodes is below 60
_W_DEPTH = 128

TRIM_NONNEG = 0
TRIM_CUT = 1
TRIM_ZERO = 2
TRIM_NOT_CONVEX = -1


def new_pool(capacity):
    cap = int(capacity) + 1
    F = np.zeros((cap, 5), np.float64)
    I = np.zeros((cap, 4), np.int64)
    M = np.zeros(3, np.int64)
    M[NEXT] = 1
    FL = np.zeros(cap, np.int64)
    return F, I, M, FL


def new_workspace():
    return np.zeros((_W_ROWS, _W_DEPTH), np.int64)


@nb.njit(cache=True)
def alloc(F, I, M, FL, x, da, db):
    if M[NFREE] > 0:
        M[NFREE] -= 1
        v = FL[M[NFREE]]
    else:
        v = M[NEXT]
        if v >= F.shape[0]:
            raise MemoryError("PLF node pool exhausted")
        M[NEXT] += 1
    F[v, KEY] = x
    F[v, DA] = da
    F[v, DB] = db
    F[v, SA] = da
    F[v, SB] = db
    I[v, LEFT] = 0
    I[v, RIGHT] = 0
    I[v, HEIGHT] = 1
    I[v, SIZE] = 1
    return v


@nb.njit(cache=True)
def release(I, M, FL, v):
    I[v, LEFT] = 0
    I[v, RIGHT] = 0
    FL[M[NFREE]] = v
    M[NFREE] += 1


@nb.njit(cache=True)
def release_tree(I, M, FL, W, t):
    if t == 0:
        return
    stack = W[_W_STACK]
    top = 1
    stack[0] = t
    while top > 0:
        top -= 1
        v = stack[top]
        l = I[v, LEFT]
        r = I[v, RIGHT]
        if l != 0:
            stack[top] = l
            top += 1
        if r != 0:
            stack[top] = r
            top += 1
        release(I, M, FL, v)


@nb.njit(cache=True)
def _update(F, I, v):
    l = I[v, LEFT]
    r = I[v, RIGHT]
    hl = I[l, HEIGHT]
    hr = I[r, HEIGHT]
    I[v, HEIGHT] = 1 + (hl if hl > hr else hr)
    I[v, SIZE] = 1 + I[l, SIZE] + I[r, SIZE]
    F[v, SA] = F[l, SA] + F[r, SA] + F[v, DA]
    F[v, SB] = F[l, SB] + F[r, SB] + F[v, DB]


@nb.njit(cache=True)
def _rot_left(F, I, x):
    y = I[x, RIGHT]
    I[x, RIGHT] = I[y, LEFT]
    I[y, LEFT] = x
    _update(F, I, x)
    _update(F, I, y)
    return y


@nb.njit(cache=True)
def _rot_right(F, I, y):
    x = I[y, LEFT]
    I[y, LEFT] = I[x, RIGHT]
    I[x, RIGHT] = y
    _update(F, I, y)
    _update(F, I, x)
    return x


@nb.njit(cache=True)
def _join_right(F, I, W, tl, k, tr):
    path = W[_W_JOIN]
    depth = 0
    v = tl
    htr = I[tr, HEIGHT]
    while I[I[v, RIGHT], HEIGHT] > htr + 1:
        path[depth] = v
        depth += 1
        v = I[v, RIGHT]
    c = I[v, RIGHT]
    l = I[v, LEFT]
    I[k, LEFT] = c
    I[k, RIGHT] = tr
    _update(F, I, k)
    if I[k, HEIGHT] <= I[l, HEIGHT] + 1:
        I[v, RIGHT] = k
        _update(F, I, v)
        t = v
    else:
        I[v, RIGHT] = _rot_right(F, I, k)
        _update(F, I, v)
        t = _rot_left(F, I, v)
    while depth > 0:
        depth -= 1
        p = path[depth]
        I[p, RIGHT] = t
        _update(F, I, p)
        if I[t, HEIGHT] <= I[I[p, LEFT], HEIGHT] + 1:
            t = p
        else:
            t = _rot_left(F, I, p)
    return t


@nb.njit(cache=True)
def _join_left(F, I, W, tl, k, tr):
    path = W[_W_JOIN]
    depth = 0
    v = tr
    htl = I[tl, HEIGHT]
    while I[I[v, LEFT], HEIGHT] > htl + 1:
        path[depth] = v
        depth += 1
        v = I[v, LEFT]
    c = I[v, LEFT]
    r = I[v, RIGHT]
    I[k, LEFT] = tl
    I[k, RIGHT] = c
    _update(F, I, k)
    if I[k, HEIGHT] <= I[r, HEIGHT] + 1:
        I[v, LEFT] = k
        _update(F, I, v)
        t = v
    else:
        I[v, LEFT] = _rot_left(F, I, k)
        _update(F, I, v)
        t = _rot_right(F, I, v)
    while depth > 0:
        depth -= 1
        p = path[depth]
        I[p, LEFT] = t
        _update(F, I, p)
        if I[t, HEIGHT] <= I[I[p, RIGHT], HEIGHT] + 1:
            t = p
        else:
            t = _rot_right(F, I, p)
    return t


@nb.njit(cache=True)
def join(F, I, W, tl, k, tr):
    """Tree of tl, node k, tr; every key of tl < key k < every key of tr."""
    hl = I[tl, HEIGHT]
    hr = I[tr, HEIGHT]
    if hl > hr + 1:
        return _join_right(F, I, W, tl, k, tr)
    if hr > hl + 1:
        return _join_left(F, I, W, tl, k, tr)
    I[k, LEFT] = tl
    I[k, RIGHT] = tr
    _update(F, I, k)
    return k


@nb.njit(cache=True)
def join2(F, I, W, tl, tr):
    """Concatenate two trees whose key ranges do not interleave."""
    if tl == 0:
        return tr
    if tr == 0:
        return tl
    # detach the maximum of tl, then rebuild the right spine above it
    path = W[_W_LAST]
    depth = 0
    v = tl
    while I[v, RIGHT] != 0:
        path[depth] = v
        depth += 1
        v = I[v, RIGHT]
    last = v
    rest = I[last, LEFT]
    while depth > 0:
        depth -= 1
        p = path[depth]
        rest = join(F, I, W, I[p, LEFT], p, rest)
    return join(F, I, W, rest, last, tr)


@nb.njit(cache=True)
def split(F, I, M, W, t, x):
    """(keys < x, node with key == x or 0, keys > x)."""
    path = W[_W_SPLIT]
    went_left = W[_W_SPLIT_DIR]
    depth = 0
    v = t
    m = 0
    while v != 0:
        M[CMP] += 1
        k = F[v, KEY]
        if x == k:
            m = v
            break
        path[depth] = v
        if x < k:
            went_left[depth] = 1
            v = I[v, LEFT]
        else:
            went_left[depth] = 0
            v = I[v, RIGHT]
        depth += 1
    lo = 0
    hi = 0
    if m != 0:
        lo = I[m, LEFT]
        hi = I[m, RIGHT]
    while depth > 0:
        depth -= 1
        p = path[depth]
        if went_left[depth] == 1:
            hi = join(F, I, W, hi, p, I[p, RIGHT])
        else:
            lo = join(F, I, W, I[p, LEFT], p, lo)
    return lo, m, hi


@nb.njit(cache=True)
def union(F, I, M, FL, W, a, b):
    """Pointwise sum of two functions; walks the structure of ``a``."""
    st_node = W[_W_U_NODE]
    st_ra = W[_W_U_RA]
    st_br = W[_W_U_BR]
    st_state = W[_W_U_STATE]
    st_ul = W[_W_U_UL]
    sp = 0
    ca = a
    cb = b
    calling = True
    ret = 0
    while True:
        if calling:
            if ca == 0 or cb == 0:
                ret = cb if ca == 0 else ca
                calling = False
                continue
            la = I[ca, LEFT]
            ra = I[ca, RIGHT]
            bl, m, br = split(F, I, M, W, cb, F[ca, KEY])
            if m != 0:
                F[ca, DA] += F[m, DA]
                F[ca, DB] += F[m, DB]
                release(I, M, FL, m)
            st_node[sp] = ca
            st_ra[sp] = ra
            st_br[sp] = br
            st_state[sp] = 0
            sp += 1
            ca = la
            cb = bl
        else:
            if sp == 0:
                return ret
            top = sp - 1
            if st_state[top] == 0:
                st_ul[top] = ret
                st_state[top] = 1
                ca = st_ra[top]
                cb = st_br[top]
                calling = True
            else:
                node = st_node[top]
                ul = st_ul[top]
                sp -= 1
                if F[node, DA] == 0.0 and F[node, DB] == 0.0:
                    release(I, M, FL, node)
                    ret = join2(F, I, W, ul, ret)
                else:
                    ret = join(F, I, W, ul, node, ret)


@nb.njit(cache=True)
def add(F, I, M, FL, W, f, g):
    """Merge the smaller tree into the larger one."""
    if I[f, SIZE] <= I[g, SIZE]:
        return union(F, I, M, FL, W, f, g)
    return union(F, I, M, FL, W, g, f)


@nb.njit(cache=True)
def insert_delta(F, I, M, FL, W, t, x, da, db):
    l, m, r = split(F, I, M, W, t, x)
    if m != 0:
        F[m, DA] += da
        F[m, DB] += db
        if F[m, DA] == 0.0 and F[m, DB] == 0.0:
            release(I, M, FL, m)
            return join2(F, I, W, l, r)
        return join(F, I, W, l, m, r)
    if da == 0.0 and db == 0.0:
        return join2(F, I, W, l, r)
    v = alloc(F, I, M, FL, x, da, db)
    return join(F, I, W, l, v, r)


@nb.njit(cache=True)
def delete_key(F, I, M, FL, W, t, x):
    l, m, r = split(F, I, M, W, t, x)
    if m == 0:
        return join2(F, I, W, l, r), False
    release(I, M, FL, m)
    return join2(F, I, W, l, r), True


@nb.njit(cache=True)
def function_at(F, I, M, t, z):
    """(slope, intercept) of the piece active at z: sums over keys <= z."""
    a = 0.0
    b = 0.0
    v = t
    while v != 0:
        M[CMP] += 1
        if F[v, KEY] <= z:
            l = I[v, LEFT]
            a += F[l, SA] + F[v, DA]
            b += F[l, SB] + F[v, DB]
            v = I[v, RIGHT]
        else:
            v = I[v, LEFT]
    return a, b


@nb.njit(cache=True)
def leftmost(I, t):
    v = t
    while I[v, LEFT] != 0:
        v = I[v, LEFT]
    return v


@nb.njit(cache=True)
def successor_key(F, I, M, t, x):
    """Smallest key > x, or inf."""
    best = np.inf
    v = t
    while v != 0:
        M[CMP] += 1
        if F[v, KEY] > x:
            best = F[v, KEY]
            v = I[v, LEFT]
        else:
            v = I[v, RIGHT]
    return best


@nb.njit(cache=True)
def trim(F, I, M, FL, W, t):
    """Replace f by max(f, 0) on [0, inf) for convex continuous f.

    Returns (root, lcx, rcx, code); [lcx, rcx] is the interval where the
    result is identically zero (rcx may be inf).  With TRIM_NONNEG the
    function is unchanged and [lcx, rcx] is where it already touches zero,
    or lcx = -1 if it is positive everywhere.
    """
    inf = np.inf
    if t == 0:
        return t, 0.0, inf, TRIM_NONNEG
    first = leftmost(I, t)
    if F[first, KEY] > 0.0:
        # zero on [0, first key): convexity forces f >= 0 everywhere
        if F[first, DA] < 0.0 or F[first, DA] * F[first, KEY] + F[first, DB] < 0.0:
            return t, 0.0, 0.0, TRIM_NOT_CONVEX
        return t, 0.0, F[first, KEY], TRIM_NONNEG

    # 1. descend along slope signs to the first key whose piece has slope >= 0
    acc_a = 0.0
    acc_b = 0.0
    star = 0
    star_a = 0.0
    star_b = 0.0
    v = t
    while v != 0:
        M[CMP] += 1
        l = I[v, LEFT]
        pa = acc_a + F[l, SA] + F[v, DA]
        pb = acc_b + F[l, SB] + F[v, DB]
        if pa >= 0.0:
            star = v
            star_a = pa
            star_b = pb
            v = l
        else:
            acc_a = pa
            acc_b = pb
            v = I[v, RIGHT]
    # a convex function's first slope is its smallest and its last the largest
    a_first = F[first, DA]
    a_end = F[t, SA]
    if a_first > a_end or (star != 0 and (star_a > a_end or a_first > star_a)):
        return t, 0.0, 0.0, TRIM_NOT_CONVEX
    if star != 0:
        xstar = F[star, KEY]
        fmin = star_a * xstar + star_b
        if fmin > 0.0:
            return t, -1.0, -1.0, TRIM_NONNEG
        if fmin == 0.0:
            if star_a > 0.0:
                return t, xstar, xstar, TRIM_NONNEG
            # flat at zero up to the next key
            return t, xstar, successor_key(F, I, M, t, xstar), TRIM_NONNEG
    else:
        xstar = inf

    # 2. left crossing: last key left of the minimum with f(key) > 0
    lcand = 0
    la = 0.0
    lb = 0.0
    succ = xstar
    acc_a = 0.0
    acc_b = 0.0
    v = t
    while v != 0:
        M[CMP] += 1
        l = I[v, LEFT]
        k = F[v, KEY]
        pa = acc_a + F[l, SA] + F[v, DA]
        pb = acc_b + F[l, SB] + F[v, DB]
        if k < xstar and pa * k + pb > 0.0:
            lcand = v
            la = pa
            lb = pb
            acc_a = pa
            acc_b = pb
            v = I[v, RIGHT]
        else:
            succ = k
            v = l
    if lcand != 0:
        if la >= 0.0:
            return t, 0.0, 0.0, TRIM_NOT_CONVEX
        lcx = -lb / la
        if lcx < F[lcand, KEY]:
            lcx = F[lcand, KEY]
        if lcx > succ:
            lcx = succ
    else:
        lcx = 0.0

    # 3. right crossing: first key right of the minimum with f(key) >= 0
    if star == 0:
        rcx = inf
    else:
        rcand = 0
        pred = 0
        pra = 0.0
        prb = 0.0
        rva = 0.0
        rvb = 0.0
        acc_a = 0.0
        acc_b = 0.0
        v = t
        while v != 0:
            M[CMP] += 1
            l = I[v, LEFT]
            k = F[v, KEY]
            pa = acc_a + F[l, SA] + F[v, DA]
            pb = acc_b + F[l, SB] + F[v, DB]
            if k > xstar and pa * k + pb >= 0.0:
                rcand = v
                rva = pa
                rvb = pb
                v = l
            else:
                pred = v
                pra = pa
                prb = pb
                acc_a = pa
                acc_b = pb
                v = I[v, RIGHT]
        if rcand != 0:
            kr = F[rcand, KEY]
            if rva * kr + rvb == 0.0:
                rcx = kr
            else:
                if pra <= 0.0:
                    return t, 0.0, 0.0, TRIM_NOT_CONVEX
                rcx = -prb / pra
                if rcx < F[pred, KEY]:
                    rcx = F[pred, KEY]
                if rcx > kr:
                    rcx = kr
        else:
            a_end = F[t, SA]
            b_end = F[t, SB]
            if a_end > 0.0:
                rcx = -b_end / a_end
                if rcx < F[pred, KEY]:
                    rcx = F[pred, KEY]
            else:
                rcx = inf

    if lcx == 0.0 and rcx == inf:
        release_tree(I, M, FL, W, t)
        return 0, lcx, rcx, TRIM_ZERO
    if not lcx < rcx:
        return t, lcx, rcx, TRIM_NONNEG

    # 4. cut out [lcx, rcx] and pin the result to zero there
    saved_a = 0.0
    saved_b = 0.0
    if rcx < inf:
        saved_a, saved_b = function_at(F, I, M, t, rcx)
    lt, m1, rest = split(F, I, M, W, t, lcx)
    if m1 != 0:
        release(I, M, FL, m1)
    rt = 0
    if rcx < inf:
        mid, m2, rt = split(F, I, M, W, rest, rcx)
        release_tree(I, M, FL, W, mid)
        if m2 != 0:
            release(I, M, FL, m2)
    else:
        release_tree(I, M, FL, W, rest)
    left_a = F[lt, SA]
    left_b = F[lt, SB]
    out = lt
    if left_a != 0.0 or left_b != 0.0:
        node = alloc(F, I, M, FL, lcx, -left_a, -left_b)
        out = join(F, I, W, out, node, 0)
    if rcx < inf and (saved_a != 0.0 or saved_b != 0.0):
        node = alloc(F, I, M, FL, rcx, saved_a, saved_b)
        out = join(F, I, W, out, node, rt)
    else:
        out = join2(F, I, W, out, rt)
    return out, lcx, rcx, TRIM_CUT


@nb.njit(cache=True)
def inorder_nodes(I, t):
    n = I[t, SIZE]
    out = np.empty(n, np.int64)
    stack = np.empty(I[t, HEIGHT] + 1, np.int64)
    top = 0
    cnt = 0
    v = t
    while v != 0 or top > 0:
        while v != 0:
            stack[top] = v
            top += 1
            v = I[v, LEFT]
        top -= 1
        v = stack[top]
        out[cnt] = v
        cnt += 1
        v = I[v, RIGHT]
    return out


@nb.njit(cache=True)
def breakpoints(F, I, t):
    """In-order (key, dA, dB) arrays."""
    nodes = inorder_nodes(I, t)
    n = nodes.shape[0]
    keys = np.empty(n, np.float64)
    das = np.empty(n, np.float64)
    dbs = np.empty(n, np.float64)
    for i in range(n):
        v = nodes[i]
        keys[i] = F[v, KEY]
        das[i] = F[v, DA]
        dbs[i] = F[v, DB]
    return keys, das, dbs


@nb.njit(cache=True)
def segments(F, I, t):
    """Coalesced (x_start, slope, intercept) arrays starting at x = 0."""
    keys, das, dbs = breakpoints(F, I, t)
    n = keys.shape[0]
    xs = np.empty(n + 1, np.float64)
    sl = np.empty(n + 1, np.float64)
    ic = np.empty(n + 1, np.float64)
    cnt = 0
    a = 0.0
    b = 0.0
    if n == 0 or keys[0] > 0.0:
        xs[0] = 0.0
        sl[0] = 0.0
        ic[0] = 0.0
        cnt = 1
    for i in range(n):
        a += das[i]
        b += dbs[i]
        if cnt > 0 and sl[cnt - 1] == a and ic[cnt - 1] == b:
            continue
        xs[cnt] = keys[i]
        sl[cnt] = a
        ic[cnt] = b
        cnt += 1
    return xs[:cnt], sl[:cnt], ic[:cnt]


@nb.njit(cache=True)
def _preorder(I, t):
    n = I[t, SIZE]
    out = np.empty(n, np.int64)
    if t == 0:
        return out
    stack = np.empty(n + 1, np.int64)
    top = 1
    stack[0] = t
    cnt = 0
    while top > 0:
        top -= 1
        v = stack[top]
        out[cnt] = v
        cnt += 1
        if I[v, RIGHT] != 0:
            stack[top] = I[v, RIGHT]
            top += 1
        if I[v, LEFT] != 0:
            stack[top] = I[v, LEFT]
            top += 1
    return out[:cnt]


@nb.njit(cache=True)
def validate(F, I, t):
    """Recompute order, balance, sizes and delta sums from scratch."""
    if t == 0:
        return True
    nodes = inorder_nodes(I, t)
    for i in range(1, nodes.shape[0]):
        if not F[nodes[i - 1], KEY] < F[nodes[i], KEY]:
            return False
    cap = F.shape[0]
    h = np.zeros(cap, np.int64)
    sz = np.zeros(cap, np.int64)
    sa = np.zeros(cap, np.float64)
    sb = np.zeros(cap, np.float64)
    pre = _preorder(I, t)
    if pre.shape[0] != nodes.shape[0]:
        return False
    for i in range(pre.shape[0] - 1, -1, -1):
        v = pre[i]
        l = I[v, LEFT]
        r = I[v, RIGHT]
        if abs(h[l] - h[r]) > 1:
            return False
        h[v] = 1 + max(h[l], h[r])
        sz[v] = 1 + sz[l] + sz[r]
        sa[v] = sa[l] + sa[r] + F[v, DA]
        sb[v] = sb[l] + sb[r] + F[v, DB]
        if I[v, HEIGHT] != h[v] or I[v, SIZE] != sz[v]:
            return False
        if F[v, SA] != sa[v] or F[v, SB] != sb[v]:
            return False
        if F[v, DA] == 0.0 and F[v, DB] == 0.0:
            return False
    return True


@nb.njit(cache=True)
def copy_tree(Fs, Is, t, Fd, Id, Md, FLd):
    """Clone tree t of one pool into another, preserving shape."""
    if t == 0:
        return 0
    pre = _preorder(Is, t)
    n = pre.shape[0]
    dst = np.empty(n, np.int64)
    pos = np.zeros(Fs.shape[0], np.int64)
    for i in range(n):
        v = pre[i]
        dst[i] = alloc(Fd, Id, Md, FLd, Fs[v, KEY], Fs[v, DA], Fs[v, DB])
        pos[v] = i
    for i in range(n - 1, -1, -1):
        v = pre[i]
        d = dst[i]
        l = Is[v, LEFT]
        r = Is[v, RIGHT]
        Id[d, LEFT] = dst[pos[l]] if l != 0 else 0
        Id[d, RIGHT] = dst[pos[r]] if r != 0 else 0
        _update(Fd, Id, d)
    return dst[0]


@nb.njit(cache=True)
def parametric_solve(value_a, value_b, child_ptr, child_idx, order, clamp_root,
                     F, I, M, FL, W, ev_lam, ev_node, ev_kind):
    """Post-order accumulation of G_i = a_i x + b_i + sum_c max(0, G_c).

    Returns (root function, event count, max tree height seen, error node);
    error node is -1 unless a trim found a non-convex function.
    """
    n = order.shape[0]
    fn = np.zeros(n, np.int64)
    nev = 0
    hmax = 0
    root = order[0]
    for t in range(n - 1, -1, -1):
        v = order[t]
        f = 0
        if value_a[v] != 0.0 or value_b[v] != 0.0:
            f = alloc(F, I, M, FL, 0.0, value_a[v], value_b[v])
        for j in range(child_ptr[v], child_ptr[v + 1]):
            c = child_idx[j]
            f = add(F, I, M, FL, W, f, fn[c])
            fn[c] = 0
        if I[f, HEIGHT] > hmax:
            hmax = I[f, HEIGHT]
        if v != root or clamp_root:
            f, lcx, rcx, code = trim(F, I, M, FL, W, f)
            if code == TRIM_NOT_CONVEX:
                return f, nev, hmax, v
            # events bound the open intervals where G_v <= 0, so a zero
            # touched at a single interior point changes nothing
            touch = code == TRIM_NONNEG and (lcx < 0.0 or (lcx == rcx and lcx > 0.0))
            if v != root and code != TRIM_ZERO and not touch:
                if lcx > 0.0:
                    ev_lam[nev] = lcx
                    ev_node[nev] = v
                    ev_kind[nev] = 0
                    nev += 1
                if rcx < np.inf:
                    ev_lam[nev] = rcx
                    ev_node[nev] = v
                    ev_kind[nev] = 1
                    nev += 1
        fn[v] = f
    return fn[root], nev, hmax, -1
