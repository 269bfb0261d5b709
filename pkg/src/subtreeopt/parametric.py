"""Parametric linear maximum subtree.

Node i weighs ``a_i * lam + b_i``.  For every ``lam >= 0`` we want the heaviest
root-containing subtree; its weight F(lam) is convex and piecewise linear, and
each linear piece is one subtree (slope = sum of a, intercept = sum of b).

Bottom-up, with ``G_i = a_i lam + b_i + sum_c max(0, G_c)``, every node's
function is built by merging its children's functions (smaller into larger)
and trimming at zero, for O(n log n) total.
"""

from __future__ import annotations

import bisect
import math
from dataclasses import dataclass

import numpy as np

from . import _plfkern as K
from . import _treekern
from .errors import ConvexityError
from .tree import PruneSet, RootedTree

PRUNE = "prune"
UNPRUNE = "unprune"


@dataclass(frozen=True)
class EnvelopeSegment:
    lambda_start: float
    lambda_end: float
    slope: float
    intercept: float

    def value(self, lam: float) -> float:
        return self.slope * lam + self.intercept


@dataclass(frozen=True)
class PruneEvent:
    lam: float
    node: int
    kind: str


@dataclass(frozen=True)
class ParametricSolution:
    envelope: tuple[EnvelopeSegment, ...]
    events: tuple[PruneEvent, ...]
    comparisons: int
    max_height: int
    clamped: bool = False

    @property
    def breakpoint_count(self) -> int:
        """Interior breakpoints of the output function."""
        return len(self.envelope) - 1

    @property
    def breakpoints(self) -> list[float]:
        return [s.lambda_start for s in self.envelope[1:]]

    def segment_at(self, lam: float) -> EnvelopeSegment:
        if lam < 0:
            raise ValueError("lambda must be >= 0")
        i = bisect.bisect_right(self.breakpoints, lam)
        return self.envelope[i]

    def evaluate(self, lam: float) -> float:
        return self.segment_at(lam).value(lam)


def solve_parametric(tree: RootedTree, clamp_root: bool = False) -> ParametricSolution:
    """Envelope of the maximum subtree weight over lam in [0, inf).

    By default the root function is left untrimmed, since the root must be in
    every subtree even when its weight is negative; ``clamp_root`` reports
    ``max(0, G_root)`` instead.
    """
    n = tree.n
    F, I, M, FL = K.new_pool(3 * n + 4)
    ev_lam = np.empty(2 * n, np.float64)
    ev_node = np.empty(2 * n, np.int64)
    ev_kind = np.empty(2 * n, np.int8)
    root, nev, hmax, bad = K.parametric_solve(
        tree.value_a, tree.value_b, tree.child_ptr, tree.child_idx, tree.order,
        clamp_root, F, I, M, FL, K.new_workspace(), ev_lam, ev_node, ev_kind)
    if bad >= 0:
        raise ConvexityError(f"non-convex function met while trimming node {bad}")
    xs, sl, ic = K.segments(F, I, root)
    xs = xs.tolist()
    ends = xs[1:] + [math.inf]
    envelope = tuple(EnvelopeSegment(x0, x1, a, b)
                     for x0, x1, a, b in zip(xs, ends, sl.tolist(), ic.tolist()))

    lam = ev_lam[:nev]
    node = ev_node[:nev]
    kind = ev_kind[:nev]
    perm = np.lexsort((kind, node, lam))
    events = tuple(PruneEvent(float(lam[i]), int(node[i]), UNPRUNE if kind[i] else PRUNE)
                   for i in perm.tolist())
    return ParametricSolution(envelope, events, int(M[K.CMP]), int(hmax), clamp_root)


def prune_event_sequence(tree: RootedTree) -> list[PruneEvent]:
    """Edges that switch on or off as lam sweeps upward, at most two per node."""
    return list(solve_parametric(tree).events)


def max_subtree_at(tree: RootedTree, lam: float) -> tuple[PruneSet, float]:
    """Heaviest root subtree for fixed weights ``a*lam + b``; zero-weight
    branches are pruned."""
    if lam < 0:
        raise ValueError("lambda must be >= 0")
    weight, pruned = _treekern.fixed_lambda_pass(tree.parent, tree.order, tree.value_a,
                                                 tree.value_b, float(lam))
    top = _treekern.topmost_flags(tree.parent, tree.order, pruned)
    return PruneSet.from_flags(top), float(weight)
