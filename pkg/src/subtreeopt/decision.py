"""Bottom-up cutoff tests: does some root subtree reach a given mean?

The cutoff is compared by cross-multiplication, ``subprofit * den >= num * subcost``,
which is exact whenever the products are (integer data of moderate size).
A plain float cutoff is the pair ``(cutoff, 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

import numba as nb
import numpy as np

from . import _treekern
from .tree import PruneSet, RootedTree

Cutoff = Union[float, int, Fraction, tuple]


@dataclass(frozen=True)
class DecisionResult:
    answer: bool
    prune: PruneSet
    root_subprofit: float
    root_subcost: float


@nb.njit(cache=True)
def _decide(parent, order, profit, cost, num, den, strict):
    n = order.shape[0]
    sp = profit.copy()
    sc = cost.copy()
    pruned = np.zeros(n, np.bool_)
    for t in range(n - 1, 0, -1):
        v = order[t]
        lhs = sp[v] * den
        rhs = num * sc[v]
        keep = lhs > rhs if strict else lhs >= rhs
        if keep:
            p = parent[v]
            sp[p] += sp[v]
            sc[p] += sc[v]
        else:
            pruned[v] = True
    r = order[0]
    lhs = sp[r] * den
    rhs = num * sc[r]
    answer = lhs > rhs if strict else lhs >= rhs
    return answer, pruned, sp[r], sc[r]


def as_ratio(cutoff: Cutoff) -> tuple[float, float]:
    """Normalize a cutoff to ``(numerator, positive denominator)``."""
    if isinstance(cutoff, tuple):
        num, den = cutoff
        if not den > 0:
            raise ValueError("cutoff denominator must be positive")
        return float(num), float(den)
    if isinstance(cutoff, Fraction):
        return float(cutoff.numerator), float(cutoff.denominator)
    return float(cutoff), 1.0


def decide(tree: RootedTree, cutoff: Cutoff, strict: bool = False) -> DecisionResult:
    tree.require_positive_costs()
    num, den = as_ratio(cutoff)
    answer, pruned, sp, sc = _decide(tree.parent, tree.order, tree.value_a,
                                     tree.value_b, num, den, strict)
    top = _treekern.topmost_flags(tree.parent, tree.order, pruned)
    return DecisionResult(bool(answer), PruneSet.from_flags(top), float(sp), float(sc))


def has_average_at_least(tree: RootedTree, cutoff: Cutoff) -> DecisionResult:
    """True iff some root-containing subtree has mean >= cutoff.

    When true, the returned pruning itself reaches the cutoff.
    """
    return decide(tree, cutoff, strict=False)


def has_average_greater_than(tree: RootedTree, cutoff: Cutoff) -> DecisionResult:
    """Strict variant: true iff some root-containing subtree has mean > cutoff."""
    return decide(tree, cutoff, strict=True)
