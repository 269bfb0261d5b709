from fractions import Fraction

import pytest

from conftest import tree
from subtreeopt import oracle
from subtreeopt.decision import as_ratio, has_average_at_least, has_average_greater_than
from subtreeopt.errors import PreconditionError
from subtreeopt.tree import PruneSet, subtree_sums


def test_single_node_at_least():
    r = has_average_at_least(tree([-1], [1], [2]), 0.5)
    assert r.answer and r.prune == PruneSet()  # [TRIVIAL] 1/2 >= 0.5


def test_leaf_pruned_at_three_quarters():
    r = has_average_at_least(tree([-1, 0], [1, 0], [1, 1]), 0.75)
    assert r.answer and r.prune == PruneSet.of([1])  # [DERIVED] leaf weight -0.75 <= 0
    assert (r.root_subprofit, r.root_subcost) == (1, 1)


def test_false_at_one_and_a_half():
    assert not has_average_at_least(tree([-1, 0], [1, 0], [1, 1]), 1.5).answer  # [DERIVED] best mean is 1


def test_strict_single_node():
    t = tree([-1], [1], [2])
    assert not has_average_greater_than(t, 0.5).answer  # [TRIVIAL]
    assert has_average_greater_than(t, 0.49).answer


def test_strict_and_non_strict_at_exact_optimum():
    t = tree([-1, 0], [1, 3], [1, 1])
    assert not has_average_greater_than(t, 2.0).answer  # [DERIVED] optimum is exactly 2
    assert has_average_at_least(t, 2.0).answer


def test_non_positive_cost_rejected():
    with pytest.raises(PreconditionError):
        has_average_at_least(tree([-1, 0], [1, 1], [1, 0]), 0)
    with pytest.raises(PreconditionError):
        has_average_greater_than(tree([-1], [1], [-1]), 0)


def test_cutoff_forms():
    assert as_ratio(0.5) == (0.5, 1.0)
    assert as_ratio(Fraction(3, 4)) == (3.0, 4.0)  # [TRIVIAL]
    assert as_ratio((3, 4)) == (3.0, 4.0)
    with pytest.raises(ValueError):
        as_ratio((1, 0))


def _cutoffs(t):
    """Every achievable mean plus points just around them."""
    means = sorted({s.X / Fraction(s.Y) for s in oracle.enumerate_subtrees(t)})
    out = []
    for m in means:
        out += [m, m - Fraction(1, 97), m + Fraction(1, 89)]
    return out


def test_matches_enumeration(rng):
    for _ in range(300):
        t = oracle.random_tree(rng, int(rng.integers(1, 11)))
        best, _ = oracle.brute_max_mean(t)
        for c in _cutoffs(t):
            num, den = c.numerator, c.denominator
            r = has_average_at_least(t, (num, den))
            assert r.answer == (best >= c)  # [DERIVED] brute force
            s = has_average_greater_than(t, (num, den))
            assert s.answer == (best > c)
            if r.answer:
                x, y = subtree_sums(t, r.prune)
                assert Fraction(x) / Fraction(y) >= c
            assert subtree_sums(t, r.prune) == (r.root_subprofit, r.root_subcost)


def test_monotone_in_cutoff(rng):
    for _ in range(100):
        t = oracle.random_tree(rng, int(rng.integers(1, 30)))
        answers = [has_average_at_least(t, c / 4).answer for c in range(-48, 48)]
        assert answers == sorted(answers, reverse=True)


def test_variants_differ_only_at_achievable_means(rng):
    for _ in range(100):
        t = oracle.random_tree(rng, int(rng.integers(1, 9)), (-4, 4), (1, 4))
        means = {s.X / Fraction(s.Y) for s in oracle.enumerate_subtrees(t)}
        for k in range(-20, 21):
            c = Fraction(k, 4)
            a = has_average_at_least(t, (c.numerator, c.denominator)).answer
            b = has_average_greater_than(t, (c.numerator, c.denominator)).answer
            if a != b:
                assert c in means


def test_prune_set_is_valid_antichain(rng):
    for _ in range(100):
        t = oracle.random_tree(rng, int(rng.integers(1, 40)))
        r = has_average_at_least(t, float(rng.integers(-5, 5)))
        r.prune.validate(t)


def test_deep_path_no_recursion():
    n = 300_000
    t = tree(list(range(-1, n - 1)), [1.0] * n, [1.0] * n)
    assert has_average_at_least(t, 1.0).answer
