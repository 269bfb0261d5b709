from fractions import Fraction

import numpy as np
import pytest

from conftest import tree
from subtreeopt import oracle
from subtreeopt.errors import PreconditionError
from subtreeopt.maxmean import (
    ContractedTree,
    contraction_pass,
    iteration_bound,
    shrink_range,
    solve_max_mean,
)
from subtreeopt.tree import PruneSet, subtree_sums


def exact(res):
    return Fraction(res.numerator) / Fraction(res.denominator)


def test_single_node():
    r = solve_max_mean(tree([-1], [3], [2]))
    assert r.optavg == 1.5 and r.prune == PruneSet() and r.iterations == 0  # [TRIVIAL]


def test_two_leaves():
    r = solve_max_mean(tree([-1, 0, 0], [1, 3, -2], [1, 1, 1]))
    assert r.optavg == 2.0 and r.prune == PruneSet.of([2])  # [DERIVED] means 1, 2, -1/2, 2/3


def test_path_keeps_everything():
    r = solve_max_mean(tree([-1, 0, 1], [0, 2, 4], [1, 1, 1]))
    assert r.optavg == 2.0 and r.prune == PruneSet()  # [DERIVED] means 0, 1, 2


def test_non_positive_cost_rejected():
    with pytest.raises(PreconditionError):
        solve_max_mean(tree([-1, 0], [1, 1], [1, 0]))


def test_unknown_selection():
    with pytest.raises(ValueError):
        solve_max_mean(tree([-1], [1], [1]), selection="median")


def test_root_tie_with_low_bound():
    # the root alone reaches the optimum 0, which is also the first median
    t = tree([-1, 0, 1, 1, 2, 2, 5], [0, -8, -7, 4, 2, 5, -3], [5, 7, 2, 9, 2, 2, 4])
    r = solve_max_mean(t)
    assert r.optavg == 0 and subtree_sums(t, r.prune) == (0, 5)  # [DERIVED] brute force


# -- contraction steps --------------------------------------------------------

def _state(t, low, high):
    s = ContractedTree.from_tree(t)
    s.low, s.high = (float(low), 1.0), (float(high), 1.0)
    return s


def _kids(s, v):
    out, c = [], s.fc[v]
    while c != -1:
        out.append(int(c))
        c = s.ns[c]
    return out


def test_low_leaf_is_pruned():
    s = contraction_pass(_state(tree([-1, 0], [5, 0], [1, 1]), 1, 10))
    assert not s.alive[1] and _kids(s, 0) == [] and s.live == 1  # [TRIVIAL] 0 <= low


def test_high_node_merges_into_parent():
    s = contraction_pass(_state(tree([-1, 0, 1, 1], [0, 10, 1, 2], [1, 1, 1, 1]), -5, 5))
    assert not s.alive[1]
    assert (s.profit[0], s.cost[0]) == (10, 2)  # [TRIVIAL] 10 >= high
    assert _kids(s, 0) == [2, 3]


def test_low_single_child_chain_merges():
    # node 1 is low with one child 2, which has two in-range leaves
    t = tree([-1, 0, 1, 2, 2], [0, -5, 2, 1, 1], [1, 1, 1, 1, 1])
    s = contraction_pass(_state(t, -1, 5))
    assert s.alive[1] and not s.alive[2]
    assert (s.profit[1], s.cost[1]) == (-3, 2)  # [TRIVIAL] -5 + 2
    assert _kids(s, 1) == [3, 4]


def _fixpoint_holds(s):
    lo_n, lo_d = s.low
    hi_n, hi_d = s.high
    stack = [s.root]
    while stack:
        v = stack.pop()
        kids = _kids(s, v)
        stack += kids
        if v == s.root:
            continue
        p, c = s.profit[v], s.cost[v]
        low = p * lo_d <= lo_n * c
        high = p * hi_d >= hi_n * c
        assert not high
        if len(kids) <= 1:
            assert not low


def test_contraction_reaches_fixpoint(rng):
    for _ in range(200):
        t = oracle.random_tree(rng, int(rng.integers(2, 60)), shape=str(rng.choice(oracle.SHAPES)))
        s = ContractedTree.from_tree(t, seed=int(rng.integers(1 << 30)))
        while s.has_children():
            shrink_range(s)
            contraction_pass(s)
            _fixpoint_holds(s)


def test_merges_preserve_totals(rng):
    # with low under every value nothing is pruned, so live sums stay complete
    for _ in range(100):
        t = oracle.random_tree(rng, int(rng.integers(2, 40)))
        s = contraction_pass(_state(t, -100, int(rng.integers(-5, 5))))
        assert s.live == int(s.alive.sum())
        assert s.profit[s.alive].sum() == t.value_a.sum()
        assert s.cost[s.alive].sum() == t.value_b.sum()


# -- shrink_range -------------------------------------------------------------

def _three_leaves(root_profit):
    s = ContractedTree.from_tree(tree([-1, 0, 0, 0], [root_profit, 1, 2, 3], [1, 1, 1, 1]))
    s.in_range = np.array([1, 2, 3], dtype=np.int64)
    return s


def test_shrink_true_raises_low():
    s = shrink_range(_three_leaves(10))
    assert s.last_answer and s.low == (2, 1) and s.in_range.tolist() == [3]  # [DERIVED] 12/4 >= 2


def test_shrink_false_lowers_high():
    s = shrink_range(_three_leaves(0))
    assert not s.last_answer and s.high == (2, 1) and s.in_range.tolist() == [1]  # [DERIVED] best is 6/4 < 2


def test_shrink_single_value_empties_range():
    s = ContractedTree.from_tree(tree([-1, 0], [0, 1], [1, 1]))
    s.in_range = np.array([1], dtype=np.int64)
    assert shrink_range(s).in_range.size == 0


def test_shrink_on_empty_range_is_an_error():
    s = ContractedTree.from_tree(tree([-1], [1], [1]))
    s.in_range = np.array([], dtype=np.int64)
    with pytest.raises(ValueError):
        shrink_range(s)


# -- whole-solver properties --------------------------------------------------

@pytest.mark.parametrize("selection", ["random", "mom"])
def test_matches_brute_force(rng, selection):
    for i in range(300):
        t = oracle.random_tree(rng, int(rng.integers(1, 13)), shape=str(rng.choice(oracle.SHAPES)))
        r = solve_max_mean(t, seed=i, selection=selection)
        best, _ = oracle.brute_max_mean(t)
        assert exact(r) == best  # [DERIVED] brute force
        x, y = subtree_sums(t, r.prune)
        assert Fraction(x) / Fraction(y) == best


def test_ties_and_duplicates(rng):
    for i in range(500):
        t = oracle.random_tree(rng, int(rng.integers(1, 13)), (-2, 2), (1, 2))
        assert exact(solve_max_mean(t, seed=i)) == oracle.brute_max_mean(t)[0]  # [DERIVED]


def test_non_integral_values(rng):
    # merged float sums round, so exactness is only promised for integral data
    for _ in range(200):
        n = int(rng.integers(1, 11))
        t = tree(oracle.random_parents(rng, n), rng.normal(size=n), rng.uniform(0.1, 3, n))
        best = float(oracle.brute_max_mean(t)[0])
        assert solve_max_mean(t).optavg == pytest.approx(best, rel=1e-12, abs=1e-15)


def test_agrees_with_bisection(rng):
    for _ in range(50):
        t = oracle.random_tree(rng, int(rng.integers(1, 200)))
        ratios = t.value_a / t.value_b
        span = float(ratios.max() - ratios.min())
        assert abs(oracle.bisect_max_mean(t) - solve_max_mean(t).optavg) <= 2.0 ** -40 * max(span, 1)  # [DERIVED] bisection


def test_seed_does_not_change_answer(rng):
    t = oracle.random_fast_tree(rng, 5000)
    vals = {exact(solve_max_mean(t, seed=s)) for s in range(5)}
    vals.add(exact(solve_max_mean(t, selection="mom")))
    assert len(vals) == 1


def test_trace_bookkeeping(rng):
    for _ in range(20):
        n = int(rng.integers(100, 3000))
        r = solve_max_mean(oracle.random_fast_tree(rng, n))
        assert r.phis[0] == 2 * n
        assert r.iterations <= iteration_bound(n)  # [PAPER] 5/6 potential drop
        for st in r.trace:
            assert st.phi == st.live + st.in_range
            assert st.in_range >= st.live // 2


def test_deep_path():
    n = 200_000
    t = tree(list(range(-1, n - 1)), [float(i % 7 - 3) for i in range(n)], [1.0] * n)
    r = solve_max_mean(t)
    assert r.iterations <= iteration_bound(n)
    x, y = subtree_sums(t, r.prune)
    assert x / y == r.optavg
