"""Command-line front end.

Graphs are given as a file path in the ``n m_pairs`` format or as
``builtin:NAME`` for a corpus graph. Every command prints one JSON report.

Exit codes: 0 success, 2 unreadable input, 3 violated precondition,
4 size guard, 5 a requested check failed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time
from pathlib import Path
from typing import Any

from . import corpus
from .canonical import FamilyParams, build_family_member, central_nodes, newick_with_levels
from .checks import SUITES, run_suite
from .errors import InvalidArgument, ParseError, ReductionSoundnessError, SizeGuardError
from .exact import EnumerationSpec, count_trees, enumerate_trees, solve_clique_cover, solve_min_tree_length
from .graph import Multigraph, read_graph, write_graph
from .measures import measure_report, path_length, rooted_measure_report, tree_length
from .reductions import (
    ReductionArtifact,
    add_isolated,
    add_pendant,
    check_artifact,
    pad_to_k_power,
    reduce_clique4_multigraph,
    reduce_cliquek_routing,
    subdivide_all_edges,
)
from .search import SearchConfig, local_search
from .trees import (
    Layout,
    RootedBinaryTree,
    canonical_form,
    layout_from_newick,
    layout_to_newick,
    rooted_from_newick,
    rooted_to_newick,
    tree_to_newick,
)

EXIT_PARSE, EXIT_PRECONDITION, EXIT_GUARD, EXIT_CHECK = 2, 3, 4, 5
REDUCE_KINDS = ("clique4", "subdivide", "pendant", "isolated", "pad", "cliquek")


class CheckFailed(Exception):
    pass


class _Run:
    """Collects input digests for the report."""

    def __init__(self, argv: list[str], seed: int | None):
        self.argv = argv
        self.seed = seed
        self.inputs: dict[str, str] = {}
        self.t0 = time.perf_counter()

    def read_text(self, path: str) -> str:
        try:
            data = Path(path).read_bytes()
        except OSError as exc:
            raise ParseError(f"cannot read file: {exc.strerror}", None, path) from None
        self.inputs[path] = hashlib.sha256(data).hexdigest()
        return data.decode("utf-8")

    def graph(self, spec: str) -> Multigraph:
        if spec.startswith("builtin:"):
            g = corpus.get(spec.split(":", 1)[1])
            self.inputs[spec] = hashlib.sha256(write_graph(g).encode()).hexdigest()
            return g
        return read_graph(self.read_text(spec), spec)

    def report(self, results: Any) -> dict:
        return {
            "command": self.argv,
            "inputs": self.inputs,
            "results": results,
            "wall_clock": round(time.perf_counter() - self.t0, 6),
            "seed": self.seed,
        }


def _spec(args, n: int) -> EnumerationSpec:
    return EnumerationSpec(n, args.mode, args.delta, args.shards, args.allow_large)


def _serialize_witness(w) -> str:
    if isinstance(w, RootedBinaryTree):
        return rooted_to_newick(w)
    return layout_to_newick(w)


# -- commands ----------------------------------------------------------------------------


def cmd_measure(args, run: _Run) -> dict:
    g = run.graph(args.graph)
    text = run.read_text(args.tree).strip()
    try:
        if args.rooted:
            tree = rooted_from_newick(text)
        else:
            tree = layout_from_newick(text, args.delta)
    except InvalidArgument as exc:
        raise ParseError(str(exc), None, args.tree) from None
    if args.mapping:
        perm = [int(x) for x in run.read_text(args.mapping).split()]
        tree = _relabel(tree, perm, args.mapping)
    if tree.n != g.n:
        raise ParseError(f"tree has {tree.n} leaves but graph has {g.n} vertices", None, args.tree)
    if args.rooted:
        rep = rooted_measure_report(tree, g)
    else:
        rep = measure_report(tree, g)
    out = rep.to_dict()
    if args.check_duality:
        if args.rooted:
            from .measures import rooted_path_length

            lam, dlt = rooted_path_length(tree, g), rep.beta
        else:
            lam, dlt = path_length(tree, g), tree_length(tree, g)
        out["duality"] = {"sum_dilation": lam, "sum_congestion": dlt, "pass": lam == dlt}
        if lam != dlt:
            raise CheckFailed(out)
    return out


def _relabel(tree, perm: list[int], source: str):
    """Newick leaf ``vK`` holds vertex ``perm[K]``."""
    if sorted(perm) != list(range(len(perm))):
        raise ParseError("mapping must be a permutation of 0..n-1", None, source)
    if isinstance(tree, RootedBinaryTree):
        def nest(x):
            return perm[x] if isinstance(x, int) else (nest(x[0]), nest(x[1]))

        return RootedBinaryTree.from_nested(nest(tree.to_nested()))
    if len(perm) != tree.n:
        raise ParseError("mapping length differs from leaf count", None, source)
    phi = [0] * tree.n
    for k, v in enumerate(perm):
        phi[v] = tree.phi[k]
    return Layout(tree.tree, tuple(phi))


def cmd_solve(args, run: _Run) -> dict:
    g = run.graph(args.graph)
    if args.local:
        cfg = SearchConfig(
            seed=args.seed,
            restarts=args.restarts,
            move_set=tuple(args.moves.split(",")),
            strategy=args.strategy,
            max_plateau_steps=args.plateau,
        )
        res = local_search(g, cfg)
        if args.trace:
            Path(args.trace).write_text("".join(json.dumps(t) + "\n" for t in res.trace))
        return {
            "method": "local",
            "best_value": res.value,
            "witness": layout_to_newick(res.layout),
            "trace": res.trace,
        }
    sol = solve_min_tree_length(g, _spec(args, g.n))
    return {
        "method": "exact",
        "mode": sol.mode,
        "best_value": sol.best_value,
        "optimal_count": sol.optimal_count,
        "trees_evaluated": sol.trees_evaluated,
        "solver_wall_clock": round(sol.wall_clock, 6),
        "witnesses": [_serialize_witness(w) for w in sol.witnesses],
    }


def cmd_enumerate(args, run: _Run) -> dict:
    spec = EnumerationSpec(args.leaves, args.mode, args.delta, 1, args.allow_large)
    if args.count_only:
        return {"mode": spec.mode, "leaf_count": spec.leaf_count, "count": count_trees(spec)}
    trees = []
    for t in enumerate_trees(spec):
        trees.append(_serialize_witness(t))
        if args.limit and len(trees) >= args.limit:
            break
    return {"mode": spec.mode, "leaf_count": spec.leaf_count, "trees": trees}


def cmd_canonical(args, run: _Run) -> dict:
    if args.tree:
        text = run.read_text(args.tree).strip()
        lay = layout_from_newick(text, args.delta)
        return {"canonical_form": canonical_form(lay.tree), "central_nodes": central_nodes(lay.tree)}
    params = FamilyParams(args.R, args.delta, args.nodes)
    tree, emb = build_family_member(params, contract=args.contract)
    out: dict[str, Any] = {
        "R": params.R,
        "delta": params.delta,
        "nodes": len(tree),
        "leaves": len(tree.leaves()),
        "canonical_form": canonical_form(tree),
        "central_nodes": central_nodes(tree),
    }
    if args.contract:
        out["newick"] = tree_to_newick(tree)
    else:
        newick, lines = newick_with_levels(params)
        out["newick"] = newick
        out["lines"] = lines
    return out


def cmd_cover(args, run: _Run) -> dict:
    g = run.graph(args.graph)
    try:
        sizes = [int(s) for s in args.sizes.split(",")]
    except ValueError:
        raise InvalidArgument(f"bad --sizes {args.sizes!r}") from None
    part = solve_clique_cover(g, sizes)
    return {"sizes": sizes, "cover": part.as_lists() if part else None}


def cmd_reduce(args, run: _Run) -> dict:
    g = run.graph(args.graph)
    if args.kind == "clique4":
        art = reduce_clique4_multigraph(g)
    elif args.kind == "subdivide":
        art = subdivide_all_edges(g)
    elif args.kind == "pendant":
        art = add_pendant(g, args.vertex)
    elif args.kind == "isolated":
        art = add_isolated(g)
    elif args.kind == "pad":
        art = pad_to_k_power(g, args.k)
    else:
        art = reduce_cliquek_routing(g, args.k)
    out: dict[str, Any] = {"kind": art.kind, "bookkeeping": _jsonable(art.bookkeeping),
                           "output_vertices": art.output_graph.n, "output_edges": art.output_graph.m}
    if args.out:
        Path(args.out).write_text(write_graph(art.output_graph))
        sidecar = args.out + ".json"
        Path(sidecar).write_text(art.to_json())
        out["output_graph"] = args.out
        out["sidecar"] = sidecar
    else:
        out["output_graph_text"] = write_graph(art.output_graph)
    return out


def _jsonable(x):
    return json.loads(json.dumps(x))


def cmd_verify(args, run: _Run) -> dict:
    if args.reduction:
        art = ReductionArtifact.from_dict(json.loads(run.read_text(args.reduction)))
        res = check_artifact(art, shards=args.shards, allow_large=args.allow_large)
        out = {"reduction": art.kind, "checks": [{"name": art.kind, "passed": res["pass"], "detail": res}]}
        if not res["pass"]:
            raise CheckFailed(out)
        return out
    if args.suite is None:
        raise InvalidArgument("give a suite name or --reduction SIDECAR")
    if args.suite == "family":
        checks = run_suite("family", max_leaves=args.max_leaves)
    elif args.suite == "duality":
        checks = run_suite("duality", samples=args.random, seed=args.seed)
    elif args.suite == "reductions":
        if args.corpus != "builtin":
            raise InvalidArgument("only the builtin corpus is available")
        checks = run_suite("reductions", shards=args.shards)
    elif args.suite == "rooted":
        checks = run_suite("rooted", seed=args.seed)
    else:
        checks = run_suite("routing")
    out = {"suite": args.suite, "checks": [c.to_dict() for c in checks]}
    if not all(c.passed for c in checks):
        raise CheckFailed(out)
    return out


# -- parser ------------------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="treelength", description="Tree length of graphs embedded in trees.")
    p.add_argument("--output", help="write the JSON report here instead of stdout")
    # also accepted after the subcommand; SUPPRESS keeps an earlier value intact
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", default=argparse.SUPPRESS, help=argparse.SUPPRESS)
    sub = p.add_subparsers(dest="command", required=True)

    def mode_flags(sp):
        sp.add_argument("--mode", default="unrooted", choices=["unrooted", "rooted", "routing"])
        sp.add_argument("--delta", type=int, default=3, help="max internal degree (routing mode)")
        sp.add_argument("--allow-large", action="store_true", help="lift the default size guard")

    m = sub.add_parser("measure", parents=[common], help="measures of a given layout")
    m.add_argument("graph")
    m.add_argument("tree", help="Newick file with leaves named v0, v1, ...")
    m.add_argument("--mapping", help="file with a permutation: leaf vK holds vertex perm[K]")
    m.add_argument("--rooted", action="store_true", help="read the tree as a rooted binary tree")
    m.add_argument("--delta", type=int, default=3)
    m.add_argument("--check-duality", action="store_true")

    s = sub.add_parser("solve", parents=[common], help="minimum tree length")
    s.add_argument("graph")
    how = s.add_mutually_exclusive_group(required=True)
    how.add_argument("--exact", action="store_true")
    how.add_argument("--local", action="store_true")
    mode_flags(s)
    s.add_argument("--shards", type=int, default=1)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--restarts", type=int, default=20)
    s.add_argument("--moves", default="nni,leaf_swap")
    s.add_argument("--strategy", default="first-improvement", choices=["first-improvement", "steepest"])
    s.add_argument("--plateau", type=int, default=0, help="max sideways steps per restart")
    s.add_argument("--trace", help="write per-restart trace as JSON lines")

    e = sub.add_parser("enumerate", parents=[common], help="list or count trees")
    e.add_argument("--leaves", type=int, required=True)
    mode_flags(e)
    e.add_argument("--count-only", action="store_true")
    e.add_argument("--limit", type=int, default=0)

    c = sub.add_parser("canonical", parents=[common], help="level-filled family members and canonical forms")
    c.add_argument("--R", type=int, default=3)
    c.add_argument("--delta", type=int, default=3)
    c.add_argument("--nodes", type=int, default=14)
    c.add_argument("--contract", action="store_true", help="suppress degree-2 nodes")
    c.add_argument("--tree", help="Newick file: print its canonical form instead")

    v = sub.add_parser("cover", parents=[common], help="fixed-size clique cover")
    v.add_argument("graph")
    v.add_argument("--sizes", required=True, help="comma-separated block sizes")

    r = sub.add_parser("reduce", parents=[common], help="build a hardness gadget")
    r.add_argument("graph")
    r.add_argument("--kind", required=True, choices=REDUCE_KINDS)
    r.add_argument("--vertex", type=int, default=0, help="pendant anchor")
    r.add_argument("--k", type=int, default=3, help="number of blocks (pad, cliquek)")
    r.add_argument("--out", help="output graph path; the bookkeeping goes to OUT.json")

    y = sub.add_parser("verify", parents=[common], help="run a verification suite")
    y.add_argument("suite", nargs="?", choices=SUITES)
    y.add_argument("--reduction", help="sidecar JSON written by 'reduce --out'")
    y.add_argument("--max-leaves", type=int, default=9)
    y.add_argument("--random", type=int, default=100)
    y.add_argument("--seed", type=int, default=1)
    y.add_argument("--corpus", default="builtin")
    y.add_argument("--shards", type=int, default=1)
    y.add_argument("--allow-large", action="store_true")
    return p


COMMANDS = {
    "measure": cmd_measure,
    "solve": cmd_solve,
    "enumerate": cmd_enumerate,
    "canonical": cmd_canonical,
    "cover": cmd_cover,
    "reduce": cmd_reduce,
    "verify": cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    run = _Run(argv, getattr(args, "seed", None))
    code = 0
    try:
        results = COMMANDS[args.command](args, run)
    except CheckFailed as exc:
        results, code = exc.args[0], EXIT_CHECK
    except ParseError as exc:
        print(f"treelength: input error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except ReductionSoundnessError as exc:
        print(f"treelength: reduction contract broken: {exc}", file=sys.stderr)
        return EXIT_CHECK
    except SizeGuardError as exc:
        print(f"treelength: {exc}", file=sys.stderr)
        return EXIT_GUARD
    except InvalidArgument as exc:
        print(f"treelength: precondition violated: {exc}", file=sys.stderr)
        return EXIT_PRECONDITION
    text = json.dumps(run.report(results), indent=2)
    if args.output:
        Path(args.output).write_text(text + "\n")
    else:
        print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
