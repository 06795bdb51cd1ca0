"""Named verification suites shared by the CLI and the test-suite.

Each suite returns a list of :class:`Check` records; a failing record
carries enough detail to reproduce the counterexample.
"""

from __future__ import annotations

import random
from dataclasses import asdict, dataclass, field
from typing import Any, Callable

from . import corpus
from .canonical import FamilyParams, build_family_member
from .errors import InvalidArgument
from .exact import EnumerationSpec, count_trees, solve_min_sigma_ll, solve_min_tree_length
from .graph import Multigraph, complement, complete_graph, edge_disjoint_union
from .measures import congestions, path_length, sigma_ll, tree_length
from .reductions import (
    add_isolated,
    add_pendant,
    check_artifact,
    pad_to_k_power,
    reduce_clique4_multigraph,
    reduce_cliquek_routing,
    subdivide_all_edges,
)
from .search import initial_layout
from .trees import canonical_form

SUITES = ("family", "duality", "reductions", "rooted", "routing")

# unrooted routing trees with n labelled leaves and no degree bound
ROUTING_COUNTS = {3: 1, 4: 4, 5: 26, 6: 236, 7: 2752}


@dataclass
class Check:
    name: str
    passed: bool
    detail: dict[str, Any] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return asdict(self)


def random_multigraph(n: int, rng: random.Random, density: float = 0.5, max_mult: int = 3) -> Multigraph:
    mult = {}
    for u in range(n):
        for v in range(u + 1, n):
            if rng.random() < density:
                mult[(u, v)] = rng.randint(1, max_mult)
    return Multigraph(n, mult)


def random_simple(n: int, rng: random.Random, density: float = 0.5) -> Multigraph:
    return random_multigraph(n, rng, density, 1)


def family_suite(max_leaves: int = 9, labelled_up_to: int = 8) -> list[Check]:
    """Minimum leaf-distance sums are attained exactly by the family member."""
    out = []
    for n in range(3, max_leaves + 1):
        sol = solve_min_sigma_ll(n, EnumerationSpec(n, allow_large=True))
        member, _ = build_family_member(FamilyParams(3, 3, 2 * n - 1), contract=True)
        target = canonical_form(member)
        codes = [canonical_form(t) for t in sol.witnesses]
        ok = codes == [target]
        detail: dict[str, Any] = {"n": n, "min_sigma_ll": sol.best_value, "shapes": sol.trees_evaluated,
                                  "optimal_shapes": len(codes)}
        if n <= labelled_up_to:
            lab = solve_min_tree_length(complete_graph(n), EnumerationSpec(n))
            detail["labelled_min"] = lab.best_value
            ok = ok and lab.best_value == sol.best_value
            ok = ok and all(canonical_form(w.tree) == target for w in lab.witnesses)
        out.append(Check(f"family n={n}", ok, detail))
    return out


def duality_suite(samples: int = 100, seed: int = 1, max_n: int = 12) -> list[Check]:
    """Path-sum equals congestion-sum, leaf edges carry degrees, additivity, complement."""
    rng = random.Random(seed)
    failures: dict[str, list] = {"duality": [], "leaf_degree": [], "additivity": [], "complement": []}
    for i in range(samples):
        n = rng.randint(3, max_n)
        g = random_multigraph(n, rng)
        h = random_multigraph(n, rng)
        lay = initial_layout(g, rng)
        lg = tree_length(lay, g)
        if lg != path_length(lay, g):
            failures["duality"].append(i)
        cong = congestions(lay, g)
        for v in range(n):
            (nb,) = lay.tree.adj[lay.phi[v]]
            e = (min(nb, lay.phi[v]), max(nb, lay.phi[v]))
            if cong[e] != g.degree(v):
                failures["leaf_degree"].append(i)
                break
        if tree_length(lay, edge_disjoint_union(g, h)) != lg + tree_length(lay, h):
            failures["additivity"].append(i)
        s = random_simple(n, rng)
        if tree_length(lay, s) + tree_length(lay, complement(s)) != sigma_ll(lay.tree):
            failures["complement"].append(i)
    return [Check(name, not bad, {"samples": samples, "seed": seed, "failed_samples": bad[:10]})
            for name, bad in failures.items()]


def reductions_suite(shards: int = 1) -> list[Check]:
    out = []
    for name, expect in corpus.CLIQUE4_CORPUS.items():
        res = check_artifact(reduce_clique4_multigraph(corpus.get(name)), shards=shards)
        res["expected_yes"] = expect
        ok = res["pass"] and (res["oracle"] is not None) == expect
        out.append(Check(f"clique4 {name}", ok, res))
    for name in ("K4", "K5"):
        res = check_artifact(add_pendant(corpus.get(name), 0))
        out.append(Check(f"pendant {name}", res["pass"], res))
    for n in (2, 3):
        res = check_artifact(subdivide_all_edges(complete_graph(n, 2)))
        out.append(Check(f"subdivision K{n} x2", res["pass"], res))
    for name in ("C6", "K6-M", "S5", "P6", "C9", "K6"):
        g = corpus.get(name)
        res = check_artifact(pad_to_k_power(g, 3))
        out.append(Check(f"pad k=3 {name}", res["pass"], res))
    for name in ("K6-M", "C6", "S5", "P6"):
        res = check_artifact(reduce_cliquek_routing(corpus.get(name), 3))
        out.append(Check(f"cliquek k=3 {name}", res["pass"], res))
    return out


def rooted_suite(samples: int = 20, seed: int = 1) -> list[Check]:
    """Rooted optima never beat unrooted ones; the isolated-vertex lemma holds."""
    rng = random.Random(seed)
    graphs = {k: g for k, g in corpus.small(6).items() if g.n >= 2}
    for i in range(samples):
        n = rng.randint(2, 6)
        graphs[f"random{i}"] = random_multigraph(n, rng)
    bad = []
    for name, g in graphs.items():
        r = solve_min_tree_length(g, EnumerationSpec(g.n, "rooted")).best_value
        u = solve_min_tree_length(g, EnumerationSpec(g.n)).best_value
        if r < u:
            bad.append({"graph": name, "rooted": r, "unrooted": u})
    out = [Check("rooted >= unrooted", not bad, {"graphs": len(graphs), "violations": bad})]
    for name in ("K4", "K5"):
        pend = add_pendant(corpus.get(name), 0).output_graph
        res = check_artifact(add_isolated(pend))
        out.append(Check(f"isolated {name}+pendant", res["pass"], res))
    return out


def routing_suite(max_leaves: int = 7) -> list[Check]:
    out = []
    for n in range(3, max_leaves + 1):
        got = count_trees(EnumerationSpec(n, "routing", delta=max(3, n)))
        out.append(Check(f"routing count n={n}", got == ROUTING_COUNTS.get(n, got), {"n": n, "count": got}))
    k4 = solve_min_tree_length(complete_graph(4), EnumerationSpec(4, "routing", delta=4)).best_value
    out.append(Check("K4 routing delta=4", k4 == 12, {"value": k4}))
    bad = []
    for name, g in corpus.small(7).items():
        if g.n < 3:
            continue
        r = solve_min_tree_length(g, EnumerationSpec(g.n, "routing", delta=4)).best_value
        u = solve_min_tree_length(g, EnumerationSpec(g.n)).best_value
        if r > u:
            bad.append({"graph": name, "routing": r, "unrooted": u})
    out.append(Check("routing <= layout", not bad, {"violations": bad}))
    return out


RUNNERS: dict[str, Callable[..., list[Check]]] = {
    "family": family_suite,
    "duality": duality_suite,
    "reductions": reductions_suite,
    "rooted": rooted_suite,
    "routing": routing_suite,
}


def run_suite(name: str, **kwargs) -> list[Check]:
    if name not in RUNNERS:
        raise InvalidArgument(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    return RUNNERS[name](**kwargs)
