"""Linear-time weighted maximum-mean subtree.

Each iteration narrows the interval ``[low, high)`` known to contain the optimal
mean with one decision call at the median in-range node value, then contracts
the tree: low leaves are pruned, high nodes are merged into their parents and
low single-child nodes are merged with their child.  The potential
``live + in_range`` shrinks geometrically, so the total work is linear.

Bounds and node values are kept as (numerator, denominator) pairs and compared
by cross-multiplication; the final mean is the exact ratio of the merged root.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numba as nb
import numpy as np

from . import _select
from .decision import has_average_at_least
from .tree import PruneSet, RootedTree

_KEEP = 0
_PRUNED = 1
_MERGE_UP = 2

SELECTIONS = ("random", "mom")


@nb.njit(cache=True)
def _build_lists(child_ptr, child_idx):
    n = child_ptr.shape[0] - 1
    fc = np.full(n, -1, np.int64)
    lc = np.full(n, -1, np.int64)
    ns = np.full(n, -1, np.int64)
    nk = np.zeros(n, np.int64)
    for v in range(n):
        lo = child_ptr[v]
        hi = child_ptr[v + 1]
        nk[v] = hi - lo
        if hi > lo:
            fc[v] = child_idx[lo]
            lc[v] = child_idx[hi - 1]
            for j in range(lo, hi - 1):
                ns[child_idx[j]] = child_idx[j + 1]
    return fc, lc, ns, nk


@nb.njit(cache=True)
def _preorder(fc, ns, root, stack, order, par):
    top = 1
    stack[0] = root
    par[root] = -1
    cnt = 0
    while top > 0:
        top -= 1
        v = stack[top]
        order[cnt] = v
        cnt += 1
        c = fc[v]
        while c != -1:
            par[c] = v
            stack[top] = c
            top += 1
            c = ns[c]
    return cnt


@nb.njit(cache=True)
def _decide_contracted(fc, ns, profit, cost, root, num, den, stack, order, par, sp, sc):
    cnt = _preorder(fc, ns, root, stack, order, par)
    for t in range(cnt):
        v = order[t]
        sp[v] = profit[v]
        sc[v] = cost[v]
    for t in range(cnt - 1, 0, -1):
        v = order[t]
        if sp[v] * den >= num * sc[v]:
            p = par[v]
            sp[p] += sp[v]
            sc[p] += sc[v]
    return sp[root] * den >= num * sc[root], cnt


@nb.njit(cache=True)
def _contract(fc, lc, ns, nk, profit, cost, alive, status, root,
              lo_n, lo_d, hi_n, hi_d, stack, order, par, cand):
    cnt = _preorder(fc, ns, root, stack, order, par)
    killed = 0
    ncand = 0
    for t in range(cnt - 1, -1, -1):
        v = order[t]
        # rebuild v's child list from its already-processed children
        head = -1
        tail = -1
        kids = 0
        c = fc[v]
        while c != -1:
            nxt = ns[c]
            s = status[c]
            if s == _PRUNED:
                alive[c] = False
                killed += 1
            elif s == _MERGE_UP:
                profit[v] += profit[c]
                cost[v] += cost[c]
                alive[c] = False
                killed += 1
                if fc[c] != -1:
                    if tail == -1:
                        head = fc[c]
                    else:
                        ns[tail] = fc[c]
                    tail = lc[c]
                    kids += nk[c]
            else:
                ns[c] = -1
                if tail == -1:
                    head = c
                else:
                    ns[tail] = c
                tail = c
                kids += 1
            c = nxt
        fc[v] = head
        lc[v] = tail
        nk[v] = kids

        while True:
            low = profit[v] * lo_d <= lo_n * cost[v]
            high = profit[v] * hi_d >= hi_n * cost[v]
            if v != root:
                if low and nk[v] == 0:
                    status[v] = _PRUNED
                    break
                if high:
                    status[v] = _MERGE_UP
                    break
            if low and nk[v] == 1:
                c = fc[v]
                profit[v] += profit[c]
                cost[v] += cost[c]
                alive[c] = False
                killed += 1
                fc[v] = fc[c]
                lc[v] = lc[c]
                nk[v] = nk[c]
                continue
            status[v] = _KEEP
            if not low and not high:
                cand[ncand] = v
                ncand += 1
            break
    return cnt, killed, ncand


@nb.njit(cache=True)
def _in_open_range(profit, cost, idx, lo_n, lo_d, hi_n, hi_d):
    keep = np.zeros(idx.shape[0], np.bool_)
    for t in range(idx.shape[0]):
        v = idx[t]
        keep[t] = (profit[v] * lo_d > lo_n * cost[v]) and (profit[v] * hi_d < hi_n * cost[v])
    return idx[keep]


@dataclass
class IterationStats:
    live: int
    in_range: int
    phi: int
    touched: int
    answer: bool
    median: float


@dataclass
class ContractedTree:
    """Mutable contraction state of one solve. Node ids are original ids; a
    live node stands for itself plus everything merged into it."""

    tree: RootedTree
    fc: np.ndarray
    lc: np.ndarray
    ns: np.ndarray
    nk: np.ndarray
    profit: np.ndarray
    cost: np.ndarray
    alive: np.ndarray
    low: tuple[float, float]
    high: tuple[float, float]
    in_range: np.ndarray
    live: int
    selection: str = "random"
    rng: np.ndarray = field(default_factory=lambda: np.zeros(1, np.uint64))
    last_answer: bool = False
    last_median: float = float("nan")
    _scratch: tuple = field(default=(), repr=False)
    root: int = 0

    @classmethod
    def from_tree(cls, tree: RootedTree, seed: int = 0, selection: str = "random") -> "ContractedTree":
        if selection not in SELECTIONS:
            raise ValueError(f"selection must be one of {SELECTIONS}")
        tree.require_positive_costs()
        n = tree.n
        fc, lc, ns, nk = _build_lists(tree.child_ptr, tree.child_idx)
        ratios = tree.value_a / tree.value_b
        lo, hi = float(ratios.min()), float(ratios.max())
        low = lo - 1.0 if lo - 1.0 < lo else lo - abs(lo)
        high = hi + 1.0 if hi + 1.0 > hi else hi + abs(hi)
        scratch = (np.empty(n, np.int64), np.empty(n, np.int64), np.empty(n, np.int64),
                   np.empty(n, np.float64), np.empty(n, np.float64),
                   np.zeros(n, np.int8), np.empty(n, np.int64))
        return cls(
            tree=tree, fc=fc, lc=lc, ns=ns, nk=nk,
            profit=tree.value_a.copy(), cost=tree.value_b.copy(),
            alive=np.ones(n, np.bool_), low=(low, 1.0), high=(high, 1.0),
            in_range=np.arange(n, dtype=np.int64), live=n, selection=selection,
            rng=np.array([seed], dtype=np.uint64), _scratch=scratch,
        )

    def has_children(self) -> bool:
        return bool(self.fc[self.root] != -1)

    def value(self, v: int) -> float:
        return float(self.profit[v] / self.cost[v])

    def values_in_range(self) -> list[float]:
        return sorted(self.value(v) for v in self.in_range.tolist())


def shrink_range(state: ContractedTree) -> ContractedTree:
    """Cut the in-range node set at least in half with one decision call at its median."""
    idx = state.in_range.copy()
    if idx.size == 0:
        raise ValueError("shrink_range needs at least one in-range node")
    k = idx.size // 2
    if state.selection == "mom":
        m = _select.mom_select(state.profit, state.cost, idx, k)
    else:
        m = _select.quickselect(state.profit, state.cost, idx, k, state.rng)
    num, den = float(state.profit[m]), float(state.cost[m])
    stack, order, par, sp, sc, _, _ = state._scratch
    answer, _ = _decide_contracted(state.fc, state.ns, state.profit, state.cost, state.root,
                                   num, den, stack, order, par, sp, sc)
    if answer:
        state.low = (num, den)
    else:
        state.high = (num, den)
    state.last_answer = bool(answer)
    state.last_median = num / den
    state.in_range = _in_open_range(state.profit, state.cost, state.in_range,
                                    state.low[0], state.low[1], state.high[0], state.high[1])
    return state


def contraction_pass(state: ContractedTree) -> ContractedTree:
    """One post-order sweep of prune / merge steps; leaves the tree at a fixpoint."""
    stack, order, par, _, _, status, cand = state._scratch
    _, killed, ncand = _contract(
        state.fc, state.lc, state.ns, state.nk, state.profit, state.cost, state.alive,
        status, state.root, state.low[0], state.low[1], state.high[0], state.high[1],
        stack, order, par, cand)
    state.live -= int(killed)
    c = cand[:ncand]
    state.in_range = c[state.alive[c]].copy()
    return state


@dataclass(frozen=True)
class MaxMeanResult:
    optavg: float
    prune: PruneSet
    iterations: int
    numerator: float
    denominator: float
    trace: tuple[IterationStats, ...] = ()

    @property
    def touched(self) -> int:
        """Live nodes summed over iterations (each iteration only visits those)."""
        return sum(s.touched for s in self.trace)

    @property
    def phis(self) -> list[int]:
        return [2 * self.trace[0].touched if self.trace else 0] + [s.phi for s in self.trace]


def iteration_bound(n: int) -> int:
    return math.ceil(math.log(2 * n) / math.log(6 / 5)) + 2


def solve_max_mean(tree: RootedTree, seed: int = 0, selection: str = "random") -> MaxMeanResult:
    """Maximum mean over root-containing subtrees, for positive costs.

    Returns the exact ratio of the fully contracted root together with the
    witness pruning produced by one decision pass on the input at that ratio.
    """
    state = ContractedTree.from_tree(tree, seed=seed, selection=selection)
    trace = []
    while state.has_children():
        touched = state.live
        shrink_range(state)
        contraction_pass(state)
        r = int(state.in_range.size)
        trace.append(IterationStats(state.live, r, state.live + r, touched,
                                    state.last_answer, state.last_median))
    num = float(state.profit[state.root])
    den = float(state.cost[state.root])
    # A true decision at m only gives OPTAVG >= m, so a root whose value ties
    # low may have been merged into its child although the root alone was
    # optimal.  The contracted value then falls below low, which some subtree
    # is known to reach.
    lo_n, lo_d = state.low
    if lo_n * den > num * lo_d:
        num, den = lo_n, lo_d
    # answer can only come back false through float rounding on non-integral data
    witness = has_average_at_least(tree, (num, den))
    return MaxMeanResult(num / den, witness.prune, len(trace), num, den, tuple(trace))
