"""Command-line entry point: ``pftrees <command> ...``.

Exit status is 0 on success, 1 when a verification suite reports failures,
and 2 on usage or input errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .burning import (
    labeling_from_json,
    mg_dfs_burn,
    mg_dfs_unburn,
    vec_dfs_burn,
    vec_dfs_unburn,
)
from .classify import classify
from .config import Config
from .enumerators import (
    corollary_count,
    inversion_enum_labeled_trees,
    pitman_stanley_count,
    rsum_enum_graphical_brute,
    rsum_enum_increasing,
    rsum_enum_kungyan,
    rsum_enum_main,
    rsum_enum_tree_side,
    rsum_enum_vector_brute,
)
from .parking import (
    enumerate_graphical_pf,
    enumerate_increasing_vector_pf,
    enumerate_vector_pf,
    maximal_graphical_pf,
    maximal_vector_pf,
)
from .trees import Multigraph, RootedTree, VertexOrder
from .verify import SUITES, run_suite


class UsageError(Exception):
    pass


def _dumps(obj) -> str:
    return json.dumps(obj, separators=(",", ":"))


def _load_json_arg(text: str, what: str):
    if text == "-":
        raw = sys.stdin.read()
    elif text.startswith("@"):
        try:
            with open(text[1:], encoding="utf-8") as fh:
                raw = fh.read()
        except OSError as e:
            raise UsageError(f"cannot read {what} file {text[1:]!r}: {e}") from None
    else:
        raw = text
    # piped burn output may carry trace lines first; the result is the last line
    lines = [ln for ln in raw.strip().splitlines() if ln.strip()]
    candidates = [raw] if len(lines) <= 1 else [raw, lines[-1]]
    for cand in candidates:
        try:
            return json.loads(cand)
        except json.JSONDecodeError:
            continue
    raise UsageError(f"malformed JSON for {what}")


def parse_vector(text: str, what: str = "vector") -> tuple:
    """Comma-separated integers, or ``@path`` to a JSON array."""
    if text.startswith("@") or text.strip().startswith("["):
        data = _load_json_arg(text, what)
        if not isinstance(data, list) or not all(isinstance(v, int) for v in data):
            raise UsageError(f"{what} must be a JSON array of integers")
        vals = data
    else:
        try:
            vals = [int(t) for t in text.split(",") if t.strip() != ""]
        except ValueError:
            raise UsageError(f"cannot parse {what} {text!r}") from None
    if any(v < 0 for v in vals):
        raise UsageError(f"{what} entries must be >= 0")
    return tuple(vals)


def parse_graph(text: str) -> Multigraph:
    data = _load_json_arg(text, "graph")
    try:
        return Multigraph.from_json_obj(data)
    except (KeyError, TypeError, ValueError) as e:
        raise UsageError(f"invalid graph: {e}") from None


def parse_order(text: Optional[str], n: int) -> VertexOrder:
    if text is None:
        return VertexOrder.natural(n)
    if text.startswith("{") or text.startswith("@"):
        data = _load_json_arg(text, "order")
        seq = data["sequence"] if isinstance(data, dict) else data
    else:
        seq = parse_vector(text, "order")
    try:
        o = VertexOrder(tuple(seq))
    except (TypeError, ValueError) as e:
        raise UsageError(f"invalid order: {e}") from None
    if o.n != n:
        raise UsageError(f"order has {o.n} vertices, expected {n}")
    return o


def parse_tree(text: str) -> RootedTree:
    if text.startswith("{") or text.startswith("@"):
        data = _load_json_arg(text, "tree")
        parent = data["parent"] if isinstance(data, dict) else data
    else:
        parent = parse_vector(text, "tree")
    try:
        return RootedTree(parent)
    except (TypeError, ValueError) as e:
        raise UsageError(f"invalid tree: {e}") from None


def _emit_poly(p, cfg: Config) -> None:
    print(p.to_json() if cfg.output == "json" else str(p))


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------


def cmd_burn(args, cfg: Config) -> int:
    alpha = parse_vector(args.alpha, "alpha")
    if args.mode == "graph":
        if args.graph is None:
            raise UsageError("--mode graph needs --graph")
        g = parse_graph(args.graph)
        o = parse_order(args.order, g.n)
        res = mg_dfs_burn(g, o, alpha, trace=args.trace)
        out = {"mode": "graph", "graph": g.to_json_obj(), "order": o.to_json_obj(), **res.to_json_obj()}
    else:
        if args.x is None:
            raise UsageError("--mode vector needs --x")
        x = parse_vector(args.x, "x")
        res = vec_dfs_burn(x, alpha, trace=args.trace)
        out = {"mode": "vector", "x": list(x), **res.to_json_obj()}
    if args.trace:
        for ev in res.trace:
            print(_dumps(ev))
    print(_dumps(out))
    return 0


def cmd_unburn(args, cfg: Config) -> int:
    doc = _load_json_arg(args.input, "burn result") if args.input else {}
    if not isinstance(doc, dict):
        raise UsageError("burn result must be a JSON object")
    if doc and not doc.get("ok", True):
        raise UsageError("burn result has no tree: the input was not a parking function")
    mode = args.mode or doc.get("mode", "graph")
    if args.tree:
        tree = parse_tree(args.tree)
    elif "tree" in doc:
        tree = RootedTree.from_json_obj(doc["tree"])
    else:
        raise UsageError("need --tree or --input")
    if args.labeling:
        lab_rows = _load_json_arg(args.labeling, "labeling")
    elif "labeling" in doc:
        lab_rows = doc["labeling"]
    else:
        raise UsageError("need --labeling or --input")
    labeling = labeling_from_json(lab_rows)
    if args.order:
        o = parse_order(args.order, tree.n)
    elif "order" in doc:
        o = VertexOrder.from_json_obj(doc["order"])
    else:
        o = VertexOrder.natural(tree.n)
    if mode == "graph":
        if args.graph:
            g = parse_graph(args.graph)
        elif "graph" in doc:
            g = Multigraph.from_json_obj(doc["graph"])
        else:
            raise UsageError("--mode graph needs --graph")
        alpha = mg_dfs_unburn(g, o, tree, labeling)
    else:
        if args.x:
            x = parse_vector(args.x, "x")
        elif "x" in doc:
            x = tuple(doc["x"])
        else:
            raise UsageError("--mode vector needs --x")
        alpha = vec_dfs_unburn(x, tree, labeling, o)
    print(_dumps({"alpha": list(alpha)}))
    return 0


def cmd_enumerate(args, cfg: Config) -> int:
    if (args.x is None) == (args.graph is None):
        raise UsageError("give exactly one of --x or --graph")
    if args.x is not None:
        x = parse_vector(args.x, "x")
        if args.maximal:
            rows = maximal_vector_pf(x)
        elif args.increasing:
            rows = enumerate_increasing_vector_pf(x, cfg.max_pf_set_size)
        else:
            rows = enumerate_vector_pf(x, cfg.max_pf_set_size)
    else:
        if args.increasing:
            raise UsageError("--increasing applies to --x only")
        g = parse_graph(args.graph)
        rows = maximal_graphical_pf(g) if args.maximal else enumerate_graphical_pf(g, cfg.max_pf_set_size)
    if cfg.output == "json":
        print(_dumps([list(r) for r in rows]))
    else:
        for r in rows:
            print(",".join(map(str, r)))
    return 0


POLY_FORMULAS = ("brute", "main", "kungyan", "graph", "trees", "increasing", "partitions", "inversions")


def cmd_poly(args, cfg: Config) -> int:
    f = args.formula
    if f in ("graph", "trees"):
        if args.graph is None:
            raise UsageError(f"--formula {f} needs --graph")
        g = parse_graph(args.graph)
        p = rsum_enum_graphical_brute(g) if f == "graph" else rsum_enum_tree_side(g, parse_order(args.order, g.n))
    elif f == "inversions":
        if args.n is None:
            raise UsageError("--formula inversions needs --n")
        p = inversion_enum_labeled_trees(args.n)
    else:
        if args.x is None:
            raise UsageError(f"--formula {f} needs --x")
        x = parse_vector(args.x, "x")
        if f == "brute":
            p = rsum_enum_vector_brute(x, cfg.max_pf_set_size)
        elif f == "main":
            p = rsum_enum_main(x)
        elif f == "kungyan":
            p = rsum_enum_kungyan(x)
        else:
            lhs, rhs = rsum_enum_increasing(x)
            p = lhs if f == "increasing" else rhs
    _emit_poly(p, cfg)
    return 0


def cmd_count(args, cfg: Config) -> int:
    x = parse_vector(args.x, "x")
    if args.formula == "pitman-stanley":
        value = pitman_stanley_count(x)
    elif args.formula == "trees":
        value = corollary_count(x)
    else:
        value = len(enumerate_vector_pf(x, cfg.max_pf_set_size))
    print(_dumps({"formula": args.formula, "count": value}) if cfg.output == "json" else value)
    return 0


def cmd_verify(args, cfg: Config) -> int:
    opts = {"max_n": args.max_n, "x_range": args.x_range, "seed": cfg.seed, "samples": args.samples}
    names = list(SUITES) if args.suite == "all" else [args.suite]
    failed = False
    for name in names:
        report = run_suite(name, **opts)
        failed = failed or bool(report["failures"])
        print(_dumps(report))
    return 1 if failed else 0


def cmd_classify(args, cfg: Config) -> int:
    k = classify(parse_graph(args.graph))
    print(_dumps(k.to_json_obj()) if cfg.output == "json" else str(k))
    return 0


# ---------------------------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(2)


def build_parser() -> argparse.ArgumentParser:
    # global options are accepted before or after the subcommand
    def common_options(defaults: bool) -> argparse.ArgumentParser:
        c = argparse.ArgumentParser(add_help=False)
        d = (lambda v: v) if defaults else (lambda v: argparse.SUPPRESS)
        c.add_argument("--output", choices=("text", "json"), default=d("text"))
        c.add_argument("--seed", type=int, default=d(0), help="seed for sampled instances (default 0)")
        c.add_argument("--max-pf-set-size", type=int, default=d(Config.max_pf_set_size))
        return c

    common = common_options(False)
    p = _Parser(
        prog="pftrees", description="Parking functions, DFS burning and tree enumerators.", parents=[common_options(True)]
    )
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)
    _add = sub.add_parser

    def add_parser(name, **kw):
        return _add(name, parents=[common], **kw)

    sub.add_parser = add_parser

    b = sub.add_parser("burn", help="DFS-burn a parking function into a labeled tree")
    b.add_argument("--mode", choices=("graph", "vector"), default="graph")
    b.add_argument("--graph", help="multigraph JSON or @path")
    b.add_argument("--x", help="x-vector (vector mode)")
    b.add_argument("--order", help="vertex order, smallest first (graph mode; default natural)")
    b.add_argument("--alpha", required=True, help="parking vector")
    b.add_argument("--trace", action="store_true", help="print burn events as JSON lines before the result")
    b.set_defaults(func=cmd_burn)

    u = sub.add_parser("unburn", help="recover the parking function from a labeled tree")
    u.add_argument("--input", help="burn output JSON, @path, or - for stdin")
    u.add_argument("--mode", choices=("graph", "vector"))
    u.add_argument("--graph")
    u.add_argument("--x")
    u.add_argument("--order")
    u.add_argument("--tree", help="parent list or tree JSON")
    u.add_argument("--labeling", help="JSON rows [[i, j, label], ...]")
    u.set_defaults(func=cmd_unburn)

    e = sub.add_parser("enumerate", help="list a parking-function set")
    e.add_argument("--x")
    e.add_argument("--graph")
    e.add_argument("--increasing", action="store_true")
    e.add_argument("--maximal", action="store_true")
    e.set_defaults(func=cmd_enumerate)

    q = sub.add_parser("poly", help="evaluate an enumerator as a polynomial in q")
    q.add_argument("--formula", choices=POLY_FORMULAS, default="brute")
    q.add_argument("--x")
    q.add_argument("--graph")
    q.add_argument("--order")
    q.add_argument("--n", type=int)
    q.set_defaults(func=cmd_poly)

    c = sub.add_parser("count", help="count x-parking functions")
    c.add_argument("--x", required=True)
    c.add_argument("--formula", choices=("pitman-stanley", "trees", "brute"), default="pitman-stanley")
    c.set_defaults(func=cmd_count)

    v = sub.add_parser("verify", help="run an identity suite")
    v.add_argument("suite", choices=list(SUITES) + ["all"])
    v.add_argument("--max-n", type=int)
    v.add_argument("--x-range", type=int, help="largest entry / edge weight in the exhaustive grid")
    v.add_argument("--samples", type=int, help="extra seeded random instances")
    v.set_defaults(func=cmd_verify)

    k = sub.add_parser("classify", help="classify a multigraph by symmetry of its parking set")
    k.add_argument("--graph", required=True)
    k.set_defaults(func=cmd_classify)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    try:
        cfg = Config(seed=args.seed, output=args.output, max_pf_set_size=args.max_pf_set_size)
        return args.func(args, cfg)
    except UsageError as e:
        print(f"pftrees: error: {e}", file=sys.stderr)
        return 2
    except (KeyError, TypeError) as e:
        print(f"pftrees: error: malformed input ({e})", file=sys.stderr)
        return 2
    except ValueError as e:
        print(f"pftrees: error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
