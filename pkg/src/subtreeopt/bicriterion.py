"""Optimize f(X, Y) over root subtrees, where X and Y are sums of per-node values.

A convex f is maximized (and a concave f minimized) at a vertex of the convex
hull of the achievable (X, Y) points.  Those vertices are exactly the
(slope, intercept) pairs of the envelope max_S (X_S lam + Y_S), so four
parametric solves on sign-flipped copies of the tree give the whole hull:

    (a, b)    upper hull, lam >= 0
    (-a, b)   upper hull, lam <= 0
    (-a, -b)  lower hull, lam <= 0
    (a, -b)   lower hull, lam >= 0
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .errors import DomainError
from .parametric import max_subtree_at, solve_parametric
from .tree import PruneSet, RootedTree

MAXIMIZE = "max"
MINIMIZE = "min"
UPPER = "upper"
LOWER = "lower"

TRANSFORMS = ((1, 1), (-1, 1), (-1, -1), (1, -1))


@dataclass(frozen=True)
class HullPoint:
    X: float
    Y: float
    representative_lambda: float
    orientation: str
    transform: tuple[int, int] = (1, 1)


@dataclass(frozen=True)
class Objective:
    tag: str
    direction: str
    evaluator: Callable[[float, float], float]

    def __post_init__(self):
        if self.direction not in (MAXIMIZE, MINIMIZE):
            raise ValueError("direction must be 'max' or 'min'")

    def with_direction(self, direction: str) -> "Objective":
        return Objective(self.tag, direction, self.evaluator)

    @classmethod
    def ratio(cls) -> "Objective":
        return cls("ratio", MAXIMIZE, lambda x, y: x / y)

    @classmethod
    def reliability(cls) -> "Objective":
        return cls("reliability", MINIMIZE, lambda x, y: x * math.exp(y))

    @classmethod
    def stochastic(cls) -> "Objective":
        return cls("stochastic", MINIMIZE, lambda x, y: x + math.sqrt(y))

    @classmethod
    def variance(cls) -> "Objective":
        return cls("variance", MINIMIZE, lambda x, y: x - y * y)

    @classmethod
    def custom(cls, evaluator: Callable[[float, float], float], direction: str) -> "Objective":
        return cls("custom", direction, evaluator)


BUILTIN = {
    "ratio": Objective.ratio,
    "reliability": Objective.reliability,
    "stochastic": Objective.stochastic,
    "variance": Objective.variance,
}


def objective(tag: str, direction: str | None = None) -> Objective:
    try:
        obj = BUILTIN[tag]()
    except KeyError:
        raise ValueError(f"unknown objective {tag!r}; choose from {sorted(BUILTIN)}") from None
    return obj if direction is None else obj.with_direction(direction)


def evaluate_objective(obj: Objective, X: float, Y: float) -> float:
    if obj.tag == "ratio" and not Y > 0:
        raise DomainError(f"ratio objective needs Y > 0, got Y={Y!r}")
    if obj.tag == "stochastic" and not Y >= 0:
        raise DomainError(f"stochastic objective needs Y >= 0, got Y={Y!r}")
    try:
        value = float(obj.evaluator(X, Y))
    except (ArithmeticError, ValueError) as exc:
        raise DomainError(f"objective failed at ({X!r}, {Y!r}): {exc}") from exc
    if not math.isfinite(value):
        raise DomainError(f"objective is not finite at ({X!r}, {Y!r})")
    return value


def _flip(tree: RootedTree, sa: int, sb: int) -> RootedTree:
    if sa == 1 and sb == 1:
        return tree
    return tree.with_values(sa * tree.value_a, sb * tree.value_b)


def hull_points(tree: RootedTree) -> list[HullPoint]:
    """Vertices of the convex hull of all subtree (X, Y) points, each once."""
    seen: set[tuple[float, float]] = set()
    out = []
    for sa, sb in TRANSFORMS:
        sol = solve_parametric(_flip(tree, sa, sb))
        for seg in sol.envelope:
            if math.isinf(seg.lambda_end):
                lam = seg.lambda_start + 1.0
            else:
                lam = 0.5 * (seg.lambda_start + seg.lambda_end)
            X = sa * seg.slope + 0.0
            Y = sb * seg.intercept + 0.0
            if (X, Y) in seen:
                continue
            seen.add((X, Y))
            out.append(HullPoint(X, Y, lam, UPPER if sb == 1 else LOWER, (sa, sb)))
    return out


@dataclass(frozen=True)
class OptimizeResult:
    prune: PruneSet
    X: float
    Y: float
    value: float
    point: HullPoint

    def __iter__(self):
        return iter((self.prune, self.X, self.Y, self.value))


def witness(tree: RootedTree, point: HullPoint) -> PruneSet:
    """Subtree realizing a hull point, via the fixed-lambda solve it came from."""
    sa, sb = point.transform
    prune, _ = max_subtree_at(_flip(tree, sa, sb), point.representative_lambda)
    return prune


def optimize(tree: RootedTree, obj: Objective) -> OptimizeResult:
    """Best hull vertex under ``obj``; ties prefer smaller Y, then smaller X.

    Convexity (for max) or concavity (for min) of a custom evaluator is the
    caller's promise and is not checked.
    """
    points = hull_points(tree)
    if obj.tag == "ratio":
        bad = [p for p in points if not p.Y > 0]
        if bad:
            raise DomainError(f"ratio objective needs every subtree cost positive; "
                              f"a subtree reaches Y={bad[0].Y!r}")
    sign = -1.0 if obj.direction == MAXIMIZE else 1.0
    scored = [(sign * evaluate_objective(obj, p.X, p.Y), p.Y, p.X, i) for i, p in enumerate(points)]
    _, _, _, i = min(scored)
    best = points[i]
    value = sign * scored[i][0]
    return OptimizeResult(witness(tree, best), best.X, best.Y, value, best)
