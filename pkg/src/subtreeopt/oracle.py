"""Brute-force references and instance generators.

Everything here is exponential and meant for small trees.  Sums are exact
rationals (Python ints for integral inputs, ``Fraction`` otherwise; every
finite double is a dyadic rational), so comparisons against the fast solvers
involve no rounding on the oracle side.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from numbers import Rational
from typing import Iterator, Sequence

import numpy as np

from .errors import EnumerationLimitError, PreconditionError
from .tree import PruneSet, RootedTree

ENUMERATION_LIMIT = 10**6


@dataclass(frozen=True)
class Subtree:
    prune: PruneSet
    X: Rational
    Y: Rational
    size: int

    def __iter__(self):
        return iter((self.prune, self.X, self.Y))


@dataclass(frozen=True)
class SubtreeEnumeration:
    subtrees: tuple[Subtree, ...]

    def __len__(self) -> int:
        return len(self.subtrees)

    def __iter__(self) -> Iterator[Subtree]:
        return iter(self.subtrees)

    def points(self) -> set[tuple[Rational, Rational]]:
        return {(s.X, s.Y) for s in self.subtrees}


@dataclass(frozen=True)
class SubsetSumInstance:
    values: tuple[int, ...]
    target: int

    def __post_init__(self):
        if not self.values:
            raise ValueError("subset-sum instance needs at least one value")
        if any(int(v) != v or v <= 0 for v in self.values):
            raise ValueError("subset-sum values must be positive integers")
        if int(self.target) != self.target or self.target <= 0:
            raise ValueError("subset-sum target must be a positive integer")


def _exact(x: float) -> Rational:
    return int(x) if x.is_integer() else Fraction(x)


def subtree_counts(tree: RootedTree) -> list[int]:
    """Root-containing subtrees of every node's own subtree: prod over children of (1 + N_c)."""
    count = [1] * tree.n
    for v in reversed(tree.order.tolist()):
        for c in tree.children(v):
            count[v] *= 1 + count[c]
    return count


def enumerate_subtrees(tree: RootedTree, limit: int = ENUMERATION_LIMIT,
                       reverse_children: bool = False) -> SubtreeEnumeration:
    total = subtree_counts(tree)[0]
    if total > limit:
        raise EnumerationLimitError(f"{total} subtrees exceed the enumeration limit {limit}")
    a = [_exact(x) for x in tree.value_a.tolist()]
    b = [_exact(y) for y in tree.value_b.tolist()]
    # options[v]: (pruned roots, X, Y, node count) for each subtree rooted at v
    options: dict[int, list] = {}
    for v in reversed(tree.order.tolist()):
        opts = [((), a[v], b[v], 1)]
        kids = tree.children(v)
        if reverse_children:
            kids = kids[::-1]
        for c in kids:
            nxt = []
            for p, x, y, k in opts:
                nxt.append((p + (c,), x, y, k))
                for pc, xc, yc, kc in options[c]:
                    nxt.append((p + pc, x + xc, y + yc, k + kc))
            opts = nxt
            del options[c]
        options[v] = opts
    return SubtreeEnumeration(tuple(Subtree(PruneSet.of(p), x, y, k) for p, x, y, k in options[0]))


def _rank(s: Subtree):
    return (s.size, sorted(s.prune.roots))


def brute_max_mean(tree: RootedTree, allow_nonpositive: bool = False,
                   reverse_children: bool = False) -> tuple[Fraction | float, PruneSet]:
    """Best X/Y over all root subtrees; ties go to fewer nodes, then the
    lexicographically smallest prune set.

    With ``allow_nonpositive`` only subtrees of positive cost compete, except
    that a zero-cost subtree of positive profit makes the mean unbounded and
    ``math.inf`` is returned with that subtree.
    """
    if not allow_nonpositive:
        tree.require_positive_costs()
    subtrees = list(enumerate_subtrees(tree, reverse_children=reverse_children))
    unbounded = [s for s in subtrees if s.Y == 0 and s.X > 0]
    if unbounded:
        return math.inf, min(unbounded, key=_rank).prune
    best = None
    for s in subtrees:
        if s.Y <= 0:
            continue
        if best is None:
            best = s
            continue
        lhs = s.X * best.Y
        rhs = best.X * s.Y
        if lhs > rhs or (lhs == rhs and _rank(s) < _rank(best)):
            best = s
    if best is None:
        raise PreconditionError("no subtree has positive cost")
    return Fraction(best.X) / best.Y, best.prune


def brute_envelope(tree: RootedTree, lambdas: Sequence) -> list[Fraction]:
    """max over root subtrees of X*lam + Y at each lam, in exact arithmetic."""
    pts = enumerate_subtrees(tree).points()
    integral = all(isinstance(x, int) and isinstance(y, int) for x, y in pts)
    out = []
    for lam in lambdas:
        q = Fraction(lam)
        if integral:
            p, d = q.numerator, q.denominator
            out.append(Fraction(max(x * p + y * d for x, y in pts), d))
        else:
            out.append(max(x * q + y for x, y in pts))
    return out


def bisect_max_mean(tree: RootedTree, iterations: int = 60) -> float:
    """Plain bisection on the decision procedure; a slow second opinion."""
    from .decision import has_average_at_least

    ratios = tree.value_a / tree.value_b
    lo, hi = float(ratios.min()), float(ratios.max())
    for _ in range(iterations):
        mid = 0.5 * (lo + hi)
        if has_average_at_least(tree, mid).answer:
            lo = mid
        else:
            hi = mid
    return lo


def _cross(o, p, q):
    return (p[0] - o[0]) * (q[1] - o[1]) - (p[1] - o[1]) * (q[0] - o[0])


def convex_hull(points) -> list[tuple]:
    """Strict hull vertices (no collinear points), counter-clockwise."""
    pts = sorted(set(points))
    if len(pts) <= 2:
        return pts
    lower: list = []
    for p in pts:
        while len(lower) >= 2 and _cross(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list = []
    for p in reversed(pts):
        while len(upper) >= 2 and _cross(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    hull = lower[:-1] + upper[:-1]
    return hull if len(hull) > 1 else hull[:1]


def brute_hull(tree: RootedTree) -> set[tuple[Rational, Rational]]:
    return set(convex_hull(enumerate_subtrees(tree).points()))


# -- generators ---------------------------------------------------------------

SHAPES = ("random", "path", "star", "caterpillar", "binary")


def random_parents(rng: np.random.Generator, n: int, shape: str = "random") -> list[int]:
    if shape == "random":
        return [-1] + [int(rng.integers(0, i)) for i in range(1, n)]
    if shape == "path":
        return [-1] + list(range(n - 1))
    if shape == "star":
        return [-1] + [0] * (n - 1)
    if shape == "caterpillar":
        spine = max(1, n // 2)
        return [-1] + list(range(spine - 1)) + [int(rng.integers(0, spine)) for _ in range(n - spine)]
    if shape == "binary":
        return [-1] + [(i - 1) // 2 for i in range(1, n)]
    raise ValueError(f"unknown shape {shape!r}")


def random_tree(rng: np.random.Generator, n: int, a_range=(-10, 10), b_range=(1, 10),
                shape: str = "random") -> RootedTree:
    """Random tree with integer values drawn uniformly from the closed ranges."""
    parent = random_parents(rng, n, shape)
    a = rng.integers(a_range[0], a_range[1] + 1, n).astype(np.float64)
    b = rng.integers(b_range[0], b_range[1] + 1, n).astype(np.float64)
    return RootedTree.from_parents(parent, a, b)


def random_fast_tree(rng: np.random.Generator, n: int, a_range=(-10, 10), b_range=(1, 10)) -> RootedTree:
    """Large random recursive tree built without a Python loop."""
    parent = np.empty(n, np.int64)
    parent[0] = -1
    if n > 1:
        parent[1:] = (rng.random(n - 1) * np.arange(1, n)).astype(np.int64)
    a = rng.integers(a_range[0], a_range[1] + 1, n).astype(np.float64)
    b = rng.integers(b_range[0], b_range[1] + 1, n).astype(np.float64)
    return RootedTree.from_parents(parent, a, b)


def gadget_from_subset_sum(inst: SubsetSumInstance, root_cost_offset: float = 0) -> RootedTree:
    """Star with root (profit 1, cost U + offset) and a leaf (0, -v) per value."""
    k = len(inst.values)
    a = [1.0] + [0.0] * k
    b = [float(inst.target) + root_cost_offset] + [-float(v) for v in inst.values]
    return RootedTree.from_parents([-1] + [0] * k, a, b)


def subset_sum_solutions(inst: SubsetSumInstance) -> list[tuple[int, ...]]:
    """Index tuples of every subset hitting the target, by exhaustive enumeration."""
    idx = range(len(inst.values))
    return [c for r in range(len(inst.values) + 1) for c in itertools.combinations(idx, r)
            if sum(inst.values[i] for i in c) == inst.target]


def zero_cost_subtrees(tree: RootedTree) -> list[Subtree]:
    return [s for s in enumerate_subtrees(tree) if s.Y == 0]


def random_subset_sum(rng: np.random.Generator, max_size: int = 15, max_value: int = 20) -> SubsetSumInstance:
    k = int(rng.integers(1, max_size + 1))
    values = tuple(int(v) for v in rng.integers(1, max_value + 1, k))
    # about half the targets are sums of a random subset
    if rng.random() < 0.5:
        mask = rng.random(k) < 0.5
        target = int(sum(v for v, m in zip(values, mask) if m)) or values[0]
    else:
        target = int(rng.integers(1, sum(values) + 2))
    return SubsetSumInstance(values, target)


def sorting_instance(values: Sequence[float]) -> RootedTree:
    """Root (0, 0) over one leaf (1, -x) per value; G_leaf = lam - x vanishes at x."""
    vals = [float(v) for v in values]
    if not vals:
        raise ValueError("sorting instance needs at least one value")
    if len(set(vals)) != len(vals):
        raise ValueError("sorting instance values must be distinct")
    if any(not (v > 0 and math.isfinite(v)) for v in vals):
        raise ValueError("sorting instance values must be positive and finite")
    k = len(vals)
    return RootedTree.from_parents([-1] + [0] * k, [0.0] + [1.0] * k, [0.0] + [-v for v in vals])
