"""Command-line front end.

Exit codes: 0 success, 1 a decision came back false, 2 usage error,
3 bad input or unmet precondition.  Results go to stdout, diagnostics to
stderr, and every number is printed with 17 significant digits.
"""

from __future__ import annotations

import argparse
import math
import sys
from fractions import Fraction
from typing import Sequence, TextIO

from . import bicriterion, oracle
from .decision import decide
from .errors import SubtreeError
from .maxmean import SELECTIONS, solve_max_mean
from .parametric import max_subtree_at, solve_parametric
from .tree import RootedTree, fmt, parse_tree, serialize

EXIT_OK = 0
EXIT_FALSE = 1
EXIT_USAGE = 2
EXIT_INPUT = 3

DEFAULT_SEED = 0


class _Usage(Exception):
    pass


def _json(obj) -> str:
    """JSON with floats in the same 17-digit form as the text output."""
    if obj is None:
        return "null"
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, int):
        return str(obj)
    if isinstance(obj, float):
        return fmt(obj) if math.isfinite(obj) else f'"{fmt(obj)}"'
    if isinstance(obj, str):
        return '"' + obj.replace("\\", "\\\\").replace('"', '\\"') + '"'
    if isinstance(obj, dict):
        return "{" + ", ".join(f"{_json(str(k))}: {_json(v)}" for k, v in obj.items()) + "}"
    return "[" + ", ".join(_json(v) for v in obj) + "]"


class Out:
    def __init__(self, stream: TextIO, fmt_name: str):
        self.stream = stream
        self.json = fmt_name == "json-lines"

    def record(self, text: str, **fields) -> None:
        self.stream.write((_json(fields) if self.json else text) + "\n")

    def raw(self, text: str) -> None:
        self.stream.write(text)


def _ids(ids) -> str:
    return " ".join(str(i) for i in sorted(ids))


def _read(path: str, schema: str) -> RootedTree:
    if path == "-":
        text = sys.stdin.read()
    else:
        with open(path, encoding="utf-8") as fh:
            text = fh.read()
    return parse_tree(text, schema)


def _cutoff(s: str) -> Fraction:
    try:
        q = Fraction(s)
    except (ValueError, ZeroDivisionError):
        raise _Usage(f"invalid cutoff {s!r}") from None
    return q


def _int_list(s: str) -> list[int]:
    try:
        return [int(t) for t in s.split(",") if t.strip()]
    except ValueError:
        raise _Usage(f"expected comma-separated integers, got {s!r}") from None


def _float_list(s: str) -> list[float]:
    try:
        return [float(t) for t in s.split(",") if t.strip()]
    except ValueError:
        raise _Usage(f"expected comma-separated numbers, got {s!r}") from None


# -- verbs --------------------------------------------------------------------

def cmd_decide(args, out: Out) -> int:
    tree = _read(args.tree, args.schema)
    q = _cutoff(args.cutoff)
    res = decide(tree, (float(q.numerator), float(q.denominator)), strict=args.strict)
    pruned = sorted(res.prune.roots)
    out.record(f"{'true' if res.answer else 'false'}\npruned={_ids(pruned)}",
               answer=res.answer, pruned=pruned,
               subprofit=res.root_subprofit, subcost=res.root_subcost)
    return EXIT_OK if res.answer else EXIT_FALSE


def cmd_maxmean(args, out: Out) -> int:
    tree = _read(args.tree, args.schema)
    res = solve_max_mean(tree, seed=args.seed, selection=args.selection)
    pruned = sorted(res.prune.roots)
    out.record(f"optavg={fmt(res.optavg)}\npruned={_ids(pruned)}",
               optavg=res.optavg, pruned=pruned)
    if args.stats:
        phis = res.phis
        out.record(f"iterations={res.iterations}\ntouched={res.touched}\n"
                   f"phi={' '.join(str(p) for p in phis)}",
                   iterations=res.iterations, touched=res.touched, phi=phis)
    return EXIT_OK


def cmd_parametric(args, out: Out) -> int:
    tree = _read(args.tree, args.schema)
    if args.at is not None:
        if not args.at >= 0:
            raise _Usage("--at needs a lambda >= 0")
        prune, weight = max_subtree_at(tree, args.at)
        pruned = sorted(prune.roots)
        out.record(f"weight={fmt(weight)}\npruned={_ids(pruned)}",
                   **{"lambda": args.at, "weight": weight, "pruned": pruned})
        return EXIT_OK
    sol = solve_parametric(tree, clamp_root=args.clamp_root)
    if args.events:
        for e in sol.events:
            out.record(f"{fmt(e.lam)} {e.node} {e.kind}",
                       **{"lambda": e.lam, "node": e.node, "kind": e.kind})
        return EXIT_OK
    for s in sol.envelope:
        out.record(f"{fmt(s.lambda_start)} {fmt(s.lambda_end)} {fmt(s.slope)} {fmt(s.intercept)}",
                   lambda_start=s.lambda_start, lambda_end=s.lambda_end,
                   slope=s.slope, intercept=s.intercept)
    return EXIT_OK


def cmd_bicriterion(args, out: Out) -> int:
    tree = _read(args.tree, args.schema)
    if args.hull:
        for p in bicriterion.hull_points(tree):
            out.record(f"{fmt(p.X)} {fmt(p.Y)} {fmt(p.representative_lambda)} {p.orientation}",
                       X=p.X, Y=p.Y, representative_lambda=p.representative_lambda,
                       orientation=p.orientation)
        return EXIT_OK
    obj = bicriterion.objective(args.objective, args.direction)
    res = bicriterion.optimize(tree, obj)
    pruned = sorted(res.prune.roots)
    kept = res.prune.kept_nodes(tree)
    out.record(f"value={fmt(res.value)}\nX={fmt(res.X)} Y={fmt(res.Y)}\n"
               f"pruned={_ids(pruned)}\nkept={_ids(kept)}",
               objective=obj.tag, direction=obj.direction, value=res.value,
               X=res.X, Y=res.Y, pruned=pruned, kept=kept)
    return EXIT_OK


def cmd_oracle(args, out: Out) -> int:
    if args.oracle_verb == "maxmean":
        tree = _read(args.tree, args.schema)
        value, prune = oracle.brute_max_mean(tree)
        pruned = sorted(prune.roots)
        out.record(f"optavg={fmt(float(value))}\npruned={_ids(pruned)}",
                   optavg=float(value), pruned=pruned)
        return EXIT_OK
    if args.oracle_verb == "gadget":
        try:
            inst = oracle.SubsetSumInstance(tuple(_int_list(args.values)), args.target)
        except ValueError as exc:
            raise _Usage(str(exc)) from None
        out.raw(serialize(oracle.gadget_from_subset_sum(inst, args.offset)))
        return EXIT_OK
    try:
        tree = oracle.sorting_instance(_float_list(args.values))
    except ValueError as exc:
        raise _Usage(str(exc)) from None
    out.raw(serialize(tree))
    return EXIT_OK


def cmd_validate(args, out: Out) -> int:
    tree = _read(args.tree, args.schema)
    out.record(f"ok n={tree.n}", ok=True, n=tree.n)
    return EXIT_OK


# -- parser -------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json-lines"), default="text")
    common.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for randomized median selection")
    common.add_argument("--schema", choices=("auto", "edge-list", "nested"), default="auto",
                        help="input format (default: detect)")

    p = argparse.ArgumentParser(prog="subtreeopt",
                                description="Optimal root-containing subtrees of rooted trees.")
    sub = p.add_subparsers(dest="verb", required=True, metavar="VERB")

    d = sub.add_parser("decide", parents=[common], help="is some subtree mean >= cutoff?")
    d.add_argument("--cutoff", required=True, help="decimal or p/q")
    d.add_argument("--strict", action="store_true", help="test mean > cutoff instead")
    d.add_argument("tree", help="tree file, or - for stdin")
    d.set_defaults(func=cmd_decide)

    m = sub.add_parser("maxmean", parents=[common], help="weighted maximum-mean subtree")
    m.add_argument("--stats", action="store_true", help="iteration count and potential trace")
    m.add_argument("--selection", choices=SELECTIONS, default="random")
    m.add_argument("tree")
    m.set_defaults(func=cmd_maxmean)

    pa = sub.add_parser("parametric", parents=[common], help="envelope of a*lam + b subtree weights")
    pa.add_argument("--events", action="store_true", help="print prune/unprune events")
    pa.add_argument("--at", type=float, metavar="LAMBDA", help="optimal subtree at one lambda")
    pa.add_argument("--clamp-root", action="store_true", help="report max(0, F) at the root")
    pa.add_argument("tree")
    pa.set_defaults(func=cmd_parametric)

    b = sub.add_parser("bicriterion", parents=[common], help="optimize f(X, Y) over subtrees")
    b.add_argument("--objective", choices=sorted(bicriterion.BUILTIN), default="ratio")
    b.add_argument("--direction", choices=(bicriterion.MAXIMIZE, bicriterion.MINIMIZE),
                   help="override the objective's natural direction")
    b.add_argument("--hull", action="store_true", help="print every hull point")
    b.add_argument("tree")
    b.set_defaults(func=cmd_bicriterion)

    o = sub.add_parser("oracle", help="brute force and instance generators")
    osub = o.add_subparsers(dest="oracle_verb", required=True, metavar="ORACLE")
    om = osub.add_parser("maxmean", parents=[common], help="exhaustive maximum mean")
    om.add_argument("tree")
    og = osub.add_parser("gadget", parents=[common], help="subset-sum gadget tree")
    og.add_argument("--values", required=True, help="comma-separated positive integers")
    og.add_argument("--target", required=True, type=int)
    og.add_argument("--offset", type=float, default=0.0, help="added to the root cost")
    os_ = osub.add_parser("sortgen", parents=[common], help="sorting-reduction tree")
    os_.add_argument("--values", required=True, help="comma-separated distinct positives")
    o.set_defaults(func=cmd_oracle)

    v = sub.add_parser("validate", parents=[common], help="parse and check a tree file")
    v.add_argument("tree")
    v.set_defaults(func=cmd_validate)
    return p


def run(argv: Sequence[str] | None = None, stdout: TextIO | None = None,
        stderr: TextIO | None = None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_USAGE
    out = Out(stdout, args.format)
    try:
        return args.func(args, out)
    except _Usage as exc:
        stderr.write(f"subtreeopt: {exc}\n")
        return EXIT_USAGE
    except (SubtreeError, ValueError, OSError) as exc:
        stderr.write(f"subtreeopt: {type(exc).__name__}: {exc}\n")
        return EXIT_INPUT


def main() -> None:
    sys.exit(run())
