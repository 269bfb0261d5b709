"""Mergeable convex piecewise linear functions on [0, inf).

    >>> f = PLF.create(0, -1, 1).add(PLF.create(2, 2, -4))   # |x - 2| - 1
    >>> f.trim().segments()
    [(0.0, -1.0, 1.0), (1.0, 0.0, 0.0), (3.0, 1.0, -3.0)]

Each PLF owns a private node pool.  ``add`` consumes its argument: the smaller
operand is copied into the larger one's pool and merged there, so the larger
function is modified in place and returned.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterator

import numpy as np

from . import _plfkern as K
from .errors import ConvexityError
from .tree import fmt


@dataclass(frozen=True)
class Breakpoint:
    x: float
    delta_a: float
    delta_b: float


class PLF:
    __slots__ = ("_F", "_I", "_M", "_FL", "_W", "_root", "last_crossings")

    def __init__(self, capacity: int = 4):
        self._F, self._I, self._M, self._FL = K.new_pool(capacity)
        self._W = K.new_workspace()
        self._root = 0
        self.last_crossings: tuple[float, float] | None = None

    # -- construction -----------------------------------------------------

    @classmethod
    def create(cls, z: float, a: float, b: float) -> "PLF":
        """Zero on [0, z), a*x + b from z on."""
        z, a, b = float(z), float(a), float(b)
        if not (math.isfinite(z) and math.isfinite(a) and math.isfinite(b)):
            raise ValueError("create() needs finite arguments")
        if z < 0:
            raise ValueError("functions live on [0, inf); z must be >= 0")
        f = cls()
        if a != 0.0 or b != 0.0:
            f._root = K.alloc(f._F, f._I, f._M, f._FL, z, a, b)
        return f

    @classmethod
    def zero(cls) -> "PLF":
        return cls()

    @classmethod
    def from_breakpoints(cls, points) -> "PLF":
        f = cls(len(points) + 1)
        for x, da, db in points:
            f._reserve(1)
            f._root = K.insert_delta(f._F, f._I, f._M, f._FL, f._W, f._root,
                                     float(x), float(da), float(db))
        return f

    # -- pool management --------------------------------------------------

    def _check_live(self) -> None:
        if self._root < 0:
            raise RuntimeError("this PLF was consumed by add()")

    def _reserve(self, extra: int) -> None:
        free = self._F.shape[0] - self._M[K.NEXT] + self._M[K.NFREE]
        if free >= extra:
            return
        cap = max(2 * self._F.shape[0], self._F.shape[0] + extra)
        old = self._F.shape[0]
        self._F = np.concatenate([self._F, np.zeros((cap - old, 5))])
        self._I = np.concatenate([self._I, np.zeros((cap - old, 4), np.int64)])
        self._FL = np.concatenate([self._FL, np.zeros(cap - old, np.int64)])

    @property
    def comparisons(self) -> int:
        return int(self._M[K.CMP])

    # -- API ----------------------------------------------------------------

    def __len__(self) -> int:
        self._check_live()
        return int(self._I[self._root, K.SIZE])

    @property
    def height(self) -> int:
        return int(self._I[self._root, K.HEIGHT])

    def add(self, other: "PLF") -> "PLF":
        """Pointwise sum; returns the larger operand, both inputs are consumed."""
        self._check_live()
        other._check_live()
        big, small = (self, other) if len(self) >= len(other) else (other, self)
        big._reserve(len(small))
        copied = K.copy_tree(small._F, small._I, small._root, big._F, big._I, big._M, big._FL)
        big._M[K.CMP] += small._M[K.CMP]
        big._root = K.union(big._F, big._I, big._M, big._FL, big._W, copied, big._root)
        small._root = -1
        return big

    __add__ = add

    def delete(self, bp: Breakpoint | float) -> "PLF":
        self._check_live()
        x = bp.x if isinstance(bp, Breakpoint) else float(bp)
        root, found = K.delete_key(self._F, self._I, self._M, self._FL, self._W, self._root, x)
        self._root = root
        if not found:
            raise KeyError(f"no breakpoint at x={x!r}")
        return self

    def function_at(self, z: float) -> tuple[float, float]:
        """(slope, intercept) of the piece in effect at z."""
        self._check_live()
        if z < 0:
            raise ValueError("z must be >= 0")
        a, b = K.function_at(self._F, self._I, self._M, self._root, float(z))
        return float(a), float(b)

    def __call__(self, z: float) -> float:
        a, b = self.function_at(z)
        return a * z + b

    def trim(self) -> "PLF":
        """In place: f <- max(f, 0).  Records the zeroed interval in ``last_crossings``."""
        self._check_live()
        self._reserve(2)
        root, lcx, rcx, code = K.trim(self._F, self._I, self._M, self._FL, self._W, self._root)
        if code == K.TRIM_NOT_CONVEX:
            raise ConvexityError("trim() met a non-convex function")
        self._root = root
        self.last_crossings = None if code == K.TRIM_NONNEG else (float(lcx), float(rcx))
        return self

    def breakpoints(self) -> list[Breakpoint]:
        self._check_live()
        keys, das, dbs = K.breakpoints(self._F, self._I, self._root)
        return [Breakpoint(x, a, b) for x, a, b in zip(keys.tolist(), das.tolist(), dbs.tolist())]

    def __iter__(self) -> Iterator[Breakpoint]:
        return iter(self.breakpoints())

    def segments(self) -> list[tuple[float, float, float]]:
        self._check_live()
        xs, sl, ic = K.segments(self._F, self._I, self._root)
        return list(zip(xs.tolist(), sl.tolist(), ic.tolist()))

    def validate(self) -> None:
        """Full recomputation of order, balance, sizes and delta sums."""
        self._check_live()
        if not K.validate(self._F, self._I, self._root):
            raise AssertionError("PLF tree invariants violated")
        n = len(self)
        if n and self.height > 1.45 * math.log2(n + 2):
            raise AssertionError("PLF tree too tall")

    def dump(self) -> str:
        return "".join(f"{fmt(x)} {fmt(a)} {fmt(b)}\n" for x, a, b in self.segments())

    def __repr__(self) -> str:
        if self._root < 0:
            return "PLF(<consumed>)"
        return f"PLF({self.segments()!r})"


def create(z: float, a: float, b: float) -> PLF:
    return PLF.create(z, a, b)


def add(f: PLF, g: PLF) -> PLF:
    return f.add(g)


def delete(f: PLF, bp: Breakpoint | float) -> PLF:
    return f.delete(bp)


def function_at(f: PLF, z: float) -> tuple[float, float]:
    return f.function_at(z)


def trim(f: PLF) -> PLF:
    return f.trim()


def segments(f: PLF) -> list[tuple[float, float, float]]:
    return f.segments()
