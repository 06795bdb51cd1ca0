"""The level-filled tree family that minimises leaf-to-leaf distance sums.

A member is grown breadth first from an origin: the origin takes up to
``R`` children, every later node up to ``delta - 1``, filling each level
left to right. Node ids are assigned in that BFS order, so node 0 is the
origin and ``level`` is non-decreasing in the id.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidArgument
from .trees import LeafTree, Tree, canonical_form, suppress_degree_two


@dataclass(frozen=True)
class FamilyParams:
    R: int
    delta: int
    n: int = 1

    def __post_init__(self) -> None:
        if self.delta < 3:
            raise InvalidArgument("delta must be >= 3")
        if self.R not in (self.delta, self.delta - 1):
            raise InvalidArgument(f"R must be delta or delta - 1, got R={self.R}, delta={self.delta}")
        if self.n < 1:
            raise InvalidArgument("a member needs at least one node")

    def with_n(self, n: int) -> "FamilyParams":
        return FamilyParams(self.R, self.delta, n)


@dataclass(frozen=True)
class LineEmbedding:
    origin: int
    level: tuple[int, ...]
    parent: tuple[int, ...]

    def line(self, i: int) -> list[int]:
        return [u for u, lv in enumerate(self.level) if lv == i]

    @property
    def height(self) -> int:
        return max(self.level)

    def subtree(self, u: int) -> set[int]:
        """Nodes whose path to the origin passes through ``u``."""
        out = set()
        for w in range(len(self.level)):
            x = w
            while True:
                if x == u:
                    out.add(w)
                    break
                if x == self.origin:
                    break
                x = self.parent[x]
        return out


def capacity(k: int, R: int, delta: int) -> int:
    """Node count of a member whose lines ``0..k`` are all full."""
    if k < 0:
        raise InvalidArgument("k must be non-negative")
    if k == 0:
        return 1
    return 1 + R * sum((delta - 1) ** j for j in range(k))


def height_for(n: int, R: int, delta: int) -> int:
    """The ``k`` with ``capacity(k) <= n < capacity(k + 1)``."""
    k = 0
    while capacity(k + 1, R, delta) <= n:
        k += 1
    return k


def line_embedding(tree: Tree, origin: int) -> LineEmbedding:
    if not 0 <= origin < len(tree):
        raise InvalidArgument(f"unknown origin {origin}")
    level = [-1] * len(tree)
    parent = [-1] * len(tree)
    level[origin] = 0
    parent[origin] = origin
    order = [origin]
    for x in order:
        for y in tree.adj[x]:
            if level[y] < 0:
                level[y] = level[x] + 1
                parent[y] = x
                order.append(y)
    return LineEmbedding(origin, tuple(level), tuple(parent))


def build_family_member(params: FamilyParams, contract: bool = False) -> tuple[Tree, LineEmbedding]:
    """The member with ``params.n`` nodes, plus its line embedding from the origin.

    With ``contract=True`` every degree-2 node is suppressed afterwards; for
    ``delta == 3`` and ``2L - 1`` nodes this yields the ``L``-leaf layout tree
    (identical to the uncontracted member with ``2L - 2`` nodes).
    """
    n, R, cap = params.n, params.R, params.delta - 1
    children: list[list[int]] = [[]]
    level = [0]
    nxt = 1
    u = 0
    while nxt < n:
        budget = R if u == 0 else cap
        take = min(budget, n - nxt)
        for _ in range(take):
            children[u].append(nxt)
            children.append([])
            level.append(level[u] + 1)
            nxt += 1
        u += 1
    adj: list[list[int]] = [[] for _ in range(n)]
    for p, cs in enumerate(children):
        for c in cs:
            adj[p].append(c)
            adj[c].append(p)
    tree = Tree(adj)
    if not contract:
        return tree, line_embedding(tree, 0)
    small, remap = suppress_degree_two(tree)
    origin = remap.get(0, small.centers()[0])
    return small, line_embedding(small, origin)


def family_layout_tree(leaf_count: int, delta: int = 3) -> LeafTree:
    """The optimal ``delta = 3`` layout tree shape with ``leaf_count`` leaves."""
    if delta != 3:
        raise InvalidArgument("layout trees have internal degree 3")
    if leaf_count < 2:
        raise InvalidArgument("need at least two leaves")
    nodes = 2 if leaf_count == 2 else 2 * leaf_count - 2
    tree, _ = build_family_member(FamilyParams(3, 3, nodes))
    return LeafTree(tree.adj, 3)


def component_sizes(tree: Tree, u: int) -> list[int]:
    return sorted(len(c) for c in tree.components_without([u]))


def central_nodes(tree: Tree) -> list[int]:
    """Nodes whose removal leaves only components of at most half the nodes."""
    n = len(tree)
    if n == 0:
        raise InvalidArgument("empty tree")
    parent = [-1] * n
    parent[0] = 0
    order = [0]
    for x in order:
        for y in tree.adj[x]:
            if parent[y] == -1:
                parent[y] = x
                order.append(y)
    size = [1] * n
    for x in reversed(order[1:]):
        size[parent[x]] += size[x]
    out = []
    for u in range(n):
        biggest = max([n - size[u]] + [size[y] for y in tree.adj[u] if y != 0 and parent[y] == u])
        if 2 * biggest <= n:
            out.append(u)
    return out


def is_family_member(tree: Tree, params: FamilyParams) -> bool:
    """Unlabelled isomorphism with the member having as many nodes as ``tree``."""
    member, _ = build_family_member(params.with_n(len(tree)))
    return canonical_form(member) == canonical_form(tree)


def origin_subtrees(tree: Tree, emb: LineEmbedding) -> list[Tree]:
    """Each child subtree of the origin as a standalone tree (child becomes node 0)."""
    out = []
    for c in tree.adj[emb.origin]:
        nodes = sorted(emb.subtree(c), key=lambda w: (w != c, w))
        idx = {w: i for i, w in enumerate(nodes)}
        adj = [[idx[y] for y in tree.adj[w] if y in idx] for w in nodes]
        out.append(Tree(adj))
    return out


def newick_with_levels(params: FamilyParams) -> tuple[str, list[list[int]]]:
    """Newick string (leaves named by node id) and the per-line node lists."""
    tree, emb = build_family_member(params)

    def rec(u: int) -> str:
        kids = [c for c in tree.adj[u] if emb.parent[c] == u and c != emb.origin]
        if not kids:
            return f"n{u}"
        return "(" + ",".join(rec(c) for c in kids) + f")n{u}"

    lines = [emb.line(i) for i in range(emb.height + 1)]
    return rec(emb.origin) + ";", lines
