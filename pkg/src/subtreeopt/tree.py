"""Rooted tree model, prune sets, and the two text formats.

Edge-list format, one node per line::

    # id parent valueA valueB
    0 - 1 1
    1 0 3 1

Nested format is a bracketed record ``(valueA valueB child child ...)``, so the
same tree reads ``(1 1 (3 1))``.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import _treekern
from .errors import (
    CycleError,
    DanglingParentError,
    MultipleRootsError,
    NonFiniteValueError,
    PruneSetError,
    TreeParseError,
)

EDGE_LIST = "edge-list"
NESTED = "nested"


def fmt(x: float) -> str:
    """17 significant digits, locale independent, round-trippable."""
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return format(float(x), ".17g")


@dataclass(frozen=True, eq=False)
class RootedTree:
    """Immutable node-indexed rooted tree; node 0 is the root.

    ``value_a`` holds x_i / profit / slope and ``value_b`` holds
    y_i / cost / intercept, depending on which solver reads the tree.
    """

    parent: np.ndarray
    value_a: np.ndarray
    value_b: np.ndarray
    child_ptr: np.ndarray = field(repr=False)
    child_idx: np.ndarray = field(repr=False)
    order: np.ndarray = field(repr=False)

    @classmethod
    def from_parents(cls, parent: Sequence[int], value_a: Sequence[float],
                     value_b: Sequence[float]) -> "RootedTree":
        """Build a canonical tree; ``parent[0]`` must be -1 and every other
        entry a valid node id. Children keep ascending-id order."""
        parent = np.array(parent, dtype=np.int64)
        a = np.array(value_a, dtype=np.float64)
        b = np.array(value_b, dtype=np.float64)
        n = parent.shape[0]
        if n == 0:
            raise TreeParseError("empty tree")
        if a.shape != (n,) or b.shape != (n,):
            raise TreeParseError("value arrays must match the node count")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise NonFiniteValueError("node values must be finite")
        roots = np.flatnonzero(parent < 0)
        if roots.size == 0:
            raise CycleError("no root: every node has a parent, so the links contain a cycle")
        if roots.size > 1:
            raise MultipleRootsError(f"{roots.size} nodes have no parent")
        if roots[0] != 0:
            raise TreeParseError("canonical trees have the root at id 0")
        if np.any(parent >= n):
            bad = int(np.flatnonzero(parent >= n)[0])
            raise DanglingParentError(f"node {bad} references missing parent {int(parent[bad])}")
        if np.any(parent == np.arange(n)):
            raise CycleError("a node is its own parent")

        kids = np.flatnonzero(parent >= 0)
        by_parent = kids[np.argsort(parent[kids], kind="stable")]
        counts = np.bincount(parent[kids], minlength=n)
        child_ptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=child_ptr[1:])
        order, reached = _treekern.bfs_order(child_ptr, by_parent.astype(np.int64), 0)
        if reached != n:
            raise CycleError("parent links contain a cycle unreachable from the root")
        for arr in (parent, a, b, child_ptr, by_parent, order):
            arr.flags.writeable = False
        return cls(parent, a, b, child_ptr, by_parent.astype(np.int64), order)

    @property
    def n(self) -> int:
        return int(self.parent.shape[0])

    def __len__(self) -> int:
        return self.n

    def children(self, i: int) -> list[int]:
        return self.child_idx[self.child_ptr[i]:self.child_ptr[i + 1]].tolist()

    def with_values(self, value_a, value_b) -> "RootedTree":
        """Same shape, new per-node values."""
        a = np.array(value_a, dtype=np.float64)
        b = np.array(value_b, dtype=np.float64)
        if a.shape != (self.n,) or b.shape != (self.n,):
            raise ValueError("value arrays must match the node count")
        if not (np.all(np.isfinite(a)) and np.all(np.isfinite(b))):
            raise NonFiniteValueError("node values must be finite")
        a.flags.writeable = False
        b.flags.writeable = False
        return RootedTree(self.parent, a, b, self.child_ptr, self.child_idx, self.order)

    def require_positive_costs(self) -> None:
        from .errors import PreconditionError

        bad = np.flatnonzero(~(self.value_b > 0))
        if bad.size:
            i = int(bad[0])
            raise PreconditionError(f"node {i} has non-positive cost {fmt(self.value_b[i])}")


@dataclass(frozen=True)
class PruneSet:
    """Roots of the pruned subtrees; the kept subtree is everything else."""

    roots: frozenset[int] = frozenset()

    @classmethod
    def of(cls, ids: Iterable[int]) -> "PruneSet":
        return cls(frozenset(int(i) for i in ids))

    @classmethod
    def from_flags(cls, flags: np.ndarray) -> "PruneSet":
        return cls(frozenset(np.flatnonzero(flags).tolist()))

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.roots))

    def __len__(self) -> int:
        return len(self.roots)

    def __contains__(self, i: object) -> bool:
        return i in self.roots

    def flags(self, n: int) -> np.ndarray:
        out = np.zeros(n, dtype=np.bool_)
        if self.roots:
            ids = np.fromiter(self.roots, dtype=np.int64, count=len(self.roots))
            if ids.min() < 0 or ids.max() >= n:
                raise PruneSetError("prune set references a node outside the tree")
            out[ids] = True
        return out

    def validate(self, tree: RootedTree) -> np.ndarray:
        """Raise ``PruneSetError`` unless this is a valid antichain; return its flag array."""
        flags = self.flags(tree.n)
        code = _treekern.check_prune_flags(tree.parent, tree.order, flags)
        if code == 1:
            raise PruneSetError("the root can never be pruned")
        if code == 2:
            raise PruneSetError("prune set is not an antichain")
        return flags

    def kept(self, tree: RootedTree) -> np.ndarray:
        """Boolean mask of nodes in the resulting root-containing subtree."""
        return _treekern.kept_mask(tree.parent, tree.order, self.validate(tree))

    def kept_nodes(self, tree: RootedTree) -> list[int]:
        return np.flatnonzero(self.kept(tree)).tolist()


def subtree_sums(tree: RootedTree, prune: PruneSet) -> tuple[float, float]:
    """(sum of value_a, sum of value_b) over the nodes kept by ``prune``."""
    mask = prune.kept(tree)
    return float(np.sum(tree.value_a[mask])), float(np.sum(tree.value_b[mask]))


# ---------------------------------------------------------------------------
# text formats

def _number(tok: str, where: str) -> float:
    try:
        x = float(tok)
    except ValueError:
        raise TreeParseError(f"{where}: expected a number, got {tok!r}") from None
    if not math.isfinite(x):
        raise NonFiniteValueError(f"{where}: non-finite value {tok!r}")
    return x


def _parse_edge_list(text: str) -> RootedTree:
    ids: dict[str, int] = {}
    parents: list[str | None] = []
    va: list[float] = []
    vb: list[float] = []
    lines: list[int] = []
    for lineno, line in enumerate(text.splitlines(), 1):
        s = line.strip()
        if not s or s.startswith("#"):
            continue
        toks = s.split()
        if len(toks) != 4:
            raise TreeParseError(f"line {lineno}: expected 4 fields, got {len(toks)}")
        nid, par, sa, sb = toks
        if nid in ids:
            raise TreeParseError(f"line {lineno}: duplicate node id {nid}")
        ids[nid] = len(parents)
        parents.append(None if par == "-" else par)
        va.append(_number(sa, f"line {lineno}"))
        vb.append(_number(sb, f"line {lineno}"))
        lines.append(lineno)
    if not parents:
        raise TreeParseError("no nodes in input")

    roots = [i for i, p in enumerate(parents) if p is None]
    if len(roots) > 1:
        raise MultipleRootsError(
            "multiple roots on lines " + ", ".join(str(lines[i]) for i in roots))
    for i, p in enumerate(parents):
        if p is not None and p not in ids:
            raise DanglingParentError(f"line {lines[i]}: parent {p} is never declared")
    if not roots:
        raise CycleError("no root: every node has a parent, so the links contain a cycle")

    # root becomes 0, everything else keeps order of appearance
    r = roots[0]
    perm = [r] + [i for i in range(len(parents)) if i != r]
    new_id = {old: new for new, old in enumerate(perm)}
    parent = [-1 if parents[old] is None else new_id[ids[parents[old]]] for old in perm]
    return RootedTree.from_parents(parent, [va[o] for o in perm], [vb[o] for o in perm])


_TOKEN = re.compile(r"\(|\)|[^\s()]+")


def _parse_nested(text: str) -> RootedTree:
    body = "\n".join(ln for ln in text.splitlines() if not ln.lstrip().startswith("#"))
    toks = _TOKEN.findall(body)
    parent: list[int] = []
    va: list[float] = []
    vb: list[float] = []
    stack: list[int] = []
    done = False
    i = 0
    while i < len(toks):
        t = toks[i]
        if t == "(":
            if done:
                raise MultipleRootsError("more than one top-level record")
            if i + 2 >= len(toks):
                raise TreeParseError("truncated record")
            node = len(parent)
            parent.append(stack[-1] if stack else -1)
            va.append(_number(toks[i + 1], f"record {node}"))
            vb.append(_number(toks[i + 2], f"record {node}"))
            stack.append(node)
            i += 3
        elif t == ")":
            if not stack:
                raise TreeParseError("unbalanced ')'")
            stack.pop()
            done = not stack
            i += 1
        else:
            raise TreeParseError(f"unexpected token {t!r}")
    if stack:
        raise TreeParseError("unterminated record")
    if not parent:
        raise TreeParseError("no nodes in input")
    return RootedTree.from_parents(parent, va, vb)


def detect_schema(text: str) -> str:
    for line in text.splitlines():
        s = line.strip()
        if s and not s.startswith("#"):
            return NESTED if s.startswith("(") else EDGE_LIST
    return EDGE_LIST


def parse_tree(text: str, schema: str = "auto") -> RootedTree:
    """Parse edge-list or nested text into a canonical tree (root = 0)."""
    if schema == "auto":
        schema = detect_schema(text)
    if schema == EDGE_LIST:
        return _parse_edge_list(text)
    if schema == NESTED:
        return _parse_nested(text)
    raise ValueError(f"unknown schema {schema!r}")


def serialize(tree: RootedTree) -> str:
    """Edge-list text with 17 significant digits; parses back to an identical tree."""
    par = tree.parent.tolist()
    a = tree.value_a.tolist()
    b = tree.value_b.tolist()
    out = []
    for i in range(tree.n):
        p = "-" if par[i] < 0 else str(par[i])
        out.append(f"{i} {p} {fmt(a[i])} {fmt(b[i])}\n")
    return "".join(out)


def to_nested(tree: RootedTree) -> str:
    parts: list[str] = []
    stack: list[tuple[int, bool]] = [(0, False)]
    while stack:
        v, closing = stack.pop()
        if closing:
            parts.append(")")
            continue
        parts.append(f"({fmt(tree.value_a[v])} {fmt(tree.value_b[v])}")
        stack.append((v, True))
        for c in reversed(tree.children(v)):
            stack.append((c, False))
    return " ".join(parts).replace(" )", ")") + "\n"
