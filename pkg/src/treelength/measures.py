"""Dilation, congestion, tree length, leaf-distance sums and reassembling measures.

Everything is exact integer arithmetic. Congestions come from a single
post-order pass collecting the vertex set below every tree edge as a bitmask;
dilations come from independent BFS path lengths, so the two totals can be
checked against each other.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import combinations

from .errors import InvalidArgument
from .graph import Multigraph
from .trees import Edge, Layout, RootedBinaryTree, Tree


def _check_sizes(layout: Layout, g: Multigraph) -> None:
    if layout.n != g.n:
        raise InvalidArgument(f"layout has {layout.n} leaves but graph has {g.n} vertices")


def edge_vertex_sets(layout: Layout) -> dict[Edge, int]:
    """For each tree edge ``(u, v)``, ``u < v``: bitmask of vertices on ``v``'s side."""
    tree = layout.tree
    adj = tree.adj
    if len(adj) <= 1:
        return {}
    root = 0
    parent = [-1] * len(adj)
    order = [root]
    parent[root] = root
    for x in order:
        for y in adj[x]:
            if parent[y] == -1:
                parent[y] = x
                order.append(y)
    below = [0] * len(adj)
    lv = layout.leaf_vertex
    for x in reversed(order):
        if x in lv:
            below[x] |= 1 << lv[x]
        if x != root:
            below[parent[x]] |= below[x]
    full = (1 << layout.n) - 1
    out: dict[Edge, int] = {}
    for x in order[1:]:
        p = parent[x]
        if p < x:
            out[(p, x)] = below[x]
        else:
            out[(x, p)] = full ^ below[x]
    return out


def congestions(layout: Layout, g: Multigraph) -> dict[Edge, int]:
    _check_sizes(layout, g)
    return {e: g.cut_weight(mask) for e, mask in sorted(edge_vertex_sets(layout).items())}


def congestion(layout: Layout, g: Multigraph, e: Edge) -> int:
    u, v = e
    key = (u, v) if u < v else (v, u)
    table = congestions(layout, g)
    if key not in table:
        raise InvalidArgument(f"{e} is not a tree edge")
    return table[key]


def dilation(layout: Layout, g: Multigraph, u: int, v: int) -> int:
    _check_sizes(layout, g)
    if not g.has_edge(u, v):
        raise InvalidArgument(f"{{{u},{v}}} is not a graph edge")
    return layout.tree.distances_from(layout.phi[u])[layout.phi[v]]


def dilations(layout: Layout, g: Multigraph) -> dict[tuple[int, int], int]:
    """Dilation of every present pair, from per-vertex BFS in the tree."""
    _check_sizes(layout, g)
    out = {}
    cache: dict[int, list[int]] = {}
    for (u, v), _ in g.pairs():
        if u not in cache:
            cache[u] = layout.tree.distances_from(layout.phi[u])
        out[(u, v)] = cache[u][layout.phi[v]]
    return out


def tree_length(layout: Layout, g: Multigraph) -> int:
    """Sum of tree-edge congestions."""
    return sum(congestions(layout, g).values())


def path_length(layout: Layout, g: Multigraph) -> int:
    """Sum over graph pairs of multiplicity times dilation.

    Deliberately shares no code with :func:`tree_length`.
    """
    d = dilations(layout, g)
    return sum(k * d[p] for p, k in g.pairs())


def sigma_ll(tree: Tree) -> int:
    """Sum of distances over unordered pairs of leaves.

    Every edge lies on the path of exactly ``a * (L - a)`` leaf pairs, where
    ``a`` leaves sit on one side.
    """
    leaves = set(tree.leaves())
    if len(leaves) < 2:
        raise InvalidArgument("sigma_ll needs at least two leaves")
    adj = tree.adj
    total_leaves = len(leaves)
    parent = [-1] * len(adj)
    parent[0] = 0
    order = [0]
    for x in order:
        for y in adj[x]:
            if parent[y] == -1:
                parent[y] = x
                order.append(y)
    count = [0] * len(adj)
    total = 0
    for x in reversed(order):
        if x in leaves:
            count[x] += 1
        if x != 0:
            total += count[x] * (total_leaves - count[x])
            count[parent[x]] += count[x]
    return total


def wiener(g: Multigraph) -> int:
    """Sum of shortest-path hop distances over unordered vertex pairs."""
    total = 0
    for u in range(g.n):
        dist = g.distances_from(u)
        for v in range(u + 1, g.n):
            if dist[v] is None:
                raise InvalidArgument(f"graph is disconnected: {u} cannot reach {v}")
            total += dist[v]
    return total


def rooted_congestions(b: RootedBinaryTree, g: Multigraph) -> dict[Edge, int]:
    """Congestion of each ``(parent, child)`` edge: boundary degree of the child's component."""
    if b.n != g.n:
        raise InvalidArgument(f"tree has {b.n} leaves but graph has {g.n} vertices")
    masks = b.leaf_sets()
    return {(p, c): g.cut_weight(masks[c]) for p, c in b.edges()}


def alpha_beta(b: RootedBinaryTree, g: Multigraph) -> tuple[int, int]:
    """(max congestion, total congestion) of a rooted reassembling tree."""
    cong = rooted_congestions(b, g)
    return max(cong.values(), default=0), sum(cong.values())


def rooted_path_length(b: RootedBinaryTree, g: Multigraph) -> int:
    """Rooted tree length summed over graph pairs via leaf distances."""
    return sum(k * b.leaf_distance(u, v) for (u, v), k in g.pairs())


@dataclass
class MeasureReport:
    n: int
    m: int
    tree_length: int
    sigma_ll: int
    max_dilation: int
    max_congestion: int
    alpha: int
    beta: int
    per_graph_edge_dilation: dict[tuple[int, int], int] = field(default_factory=dict)
    per_tree_edge_congestion: dict[tuple[int, int], int] = field(default_factory=dict)

    def to_dict(self) -> dict:
        per_edge = [
            {"kind": "graph", "pair": list(p), "dilation": d}
            for p, d in sorted(self.per_graph_edge_dilation.items())
        ] + [
            {"kind": "tree", "edge": list(e), "congestion": c}
            for e, c in sorted(self.per_tree_edge_congestion.items())
        ]
        return {
            "n": self.n,
            "m": self.m,
            "tree_length": self.tree_length,
            "sigma_ll": self.sigma_ll,
            "max_dilation": self.max_dilation,
            "max_congestion": self.max_congestion,
            "alpha": self.alpha,
            "beta": self.beta,
            "per_edge": per_edge,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def measure_report(layout: Layout, g: Multigraph) -> MeasureReport:
    cong = congestions(layout, g)
    dil = dilations(layout, g)
    length = sum(cong.values())
    return MeasureReport(
        n=g.n,
        m=g.m,
        tree_length=length,
        sigma_ll=sigma_ll(layout.tree) if layout.n >= 2 else 0,
        max_dilation=max(dil.values(), default=0),
        max_congestion=max(cong.values(), default=0),
        alpha=max(cong.values(), default=0),
        beta=length,
        per_graph_edge_dilation=dil,
        per_tree_edge_congestion=cong,
    )


def rooted_measure_report(b: RootedBinaryTree, g: Multigraph) -> MeasureReport:
    cong = rooted_congestions(b, g)
    dil = {p: b.leaf_distance(*p) for p, _ in g.pairs()}
    alpha, beta = max(cong.values(), default=0), sum(cong.values())
    leaves_sum = sum(b.leaf_distance(u, v) for u, v in combinations(range(b.n), 2))
    return MeasureReport(
        n=g.n,
        m=g.m,
        tree_length=beta,
        sigma_ll=leaves_sum,
        max_dilation=max(dil.values(), default=0),
        max_congestion=alpha,
        alpha=alpha,
        beta=beta,
        per_graph_edge_dilation=dil,
        per_tree_edge_congestion=cong,
    )
