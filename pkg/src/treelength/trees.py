"""Host trees: unrooted layout/routing trees, layouts and rooted binary trees.

Nodes are dense integer ids ``0..N-1``. Every tree is an immutable value;
structural edits return new trees (and, where ids move, an old->new map).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .errors import InvalidArgument, ParseError

Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Tree:
    """Unrooted tree given by adjacency lists. No degree constraints."""

    __slots__ = ("adj",)

    def __init__(self, adjacency: Sequence[Iterable[int]]):
        adj = tuple(tuple(sorted(ns)) for ns in adjacency)
        n = len(adj)
        n_edges = 0
        for u, ns in enumerate(adj):
            for v in ns:
                if not 0 <= v < n or v == u:
                    raise InvalidArgument(f"bad neighbour {v} of node {u}")
                if u not in adj[v]:
                    raise InvalidArgument(f"asymmetric adjacency at {(u, v)}")
            n_edges += len(ns)
        if n and n_edges != 2 * (n - 1):
            raise InvalidArgument("adjacency does not describe a tree (edge count)")
        if n and len(_bfs_order(adj, 0)) != n:
            raise InvalidArgument("adjacency does not describe a tree (disconnected)")
        self.adj = adj

    @classmethod
    def from_edges(cls, n_nodes: int, edges: Iterable[Edge]):
        adj: list[list[int]] = [[] for _ in range(n_nodes)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        return cls(adj)

    @property
    def node_count(self) -> int:
        return len(self.adj)

    def __len__(self) -> int:
        return len(self.adj)

    def degree(self, u: int) -> int:
        return len(self.adj[u])

    def edges(self) -> list[Edge]:
        return [(u, v) for u, ns in enumerate(self.adj) for v in ns if u < v]

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < len(self.adj) and v in self.adj[u]

    def leaves(self) -> list[int]:
        if len(self.adj) == 1:
            return [0]
        return [u for u, ns in enumerate(self.adj) if len(ns) == 1]

    def internal_nodes(self) -> list[int]:
        if len(self.adj) == 1:
            return []
        return [u for u, ns in enumerate(self.adj) if len(ns) > 1]

    def is_leaf(self, u: int) -> bool:
        return len(self.adj[u]) == 1 or len(self.adj) == 1

    def distances_from(self, s: int) -> list[int]:
        dist = [-1] * len(self.adj)
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v in self.adj[u]:
                if dist[v] < 0:
                    dist[v] = dist[u] + 1
                    q.append(v)
        return dist

    def side(self, u: int, v: int) -> set[int]:
        """Nodes on ``u``'s side after deleting edge ``{u, v}``."""
        if not self.has_edge(u, v):
            raise InvalidArgument(f"{(u, v)} is not a tree edge")
        seen = {u, v}
        todo = [u]
        while todo:
            x = todo.pop()
            for y in self.adj[x]:
                if y not in seen:
                    seen.add(y)
                    todo.append(y)
        seen.discard(v)
        return seen

    def components_without(self, removed: Iterable[int]) -> list[set[int]]:
        gone = set(removed)
        comps = []
        seen = set(gone)
        for s in range(len(self.adj)):
            if s in seen:
                continue
            comp = {s}
            seen.add(s)
            todo = [s]
            while todo:
                x = todo.pop()
                for y in self.adj[x]:
                    if y not in seen:
                        seen.add(y)
                        comp.add(y)
                        todo.append(y)
            comps.append(comp)
        return comps

    def centers(self) -> list[int]:
        """Graph center (minimum eccentricity): one node or two adjacent nodes."""
        n = len(self.adj)
        if n <= 2:
            return list(range(n))
        deg = [len(ns) for ns in self.adj]
        layer = [u for u in range(n) if deg[u] == 1]
        remaining = n
        while remaining > 2:
            remaining -= len(layer)
            nxt = []
            for u in layer:
                for v in self.adj[u]:
                    deg[v] -= 1
                    if deg[v] == 1:
                        nxt.append(v)
            layer = nxt
        return sorted(layer)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.adj == other.adj

    def __hash__(self) -> int:
        return hash(self.adj)

    def __repr__(self) -> str:
        return f"{type(self).__name__}(nodes={len(self.adj)}, edges={self.edges()})"


def _bfs_order(adj, s: int) -> list[int]:
    seen = {s}
    order = [s]
    i = 0
    while i < len(order):
        u = order[i]
        i += 1
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                order.append(v)
    return order


class LeafTree(Tree):
    """Tree whose internal nodes have degree in ``[3, max_degree]``.

    With ``max_degree == 3`` this is a layout tree: ``n >= 3`` leaves give
    ``2n - 2`` nodes and ``2n - 3`` edges. Trees with at most two nodes
    (a lone leaf or a single edge) are accepted as degenerate cases.
    """

    __slots__ = ("max_degree",)

    def __init__(self, adjacency: Sequence[Iterable[int]], max_degree: int = 3):
        super().__init__(adjacency)
        if max_degree < 3:
            raise InvalidArgument("max_degree must be >= 3")
        self.max_degree = max_degree
        if len(self.adj) > 2:
            for u, ns in enumerate(self.adj):
                d = len(ns)
                if d == 2 or d > max_degree:
                    raise InvalidArgument(f"node {u} has degree {d}, allowed 1 or 3..{max_degree}")

    @classmethod
    def from_edges(cls, n_nodes: int, edges: Iterable[Edge], max_degree: int = 3):
        adj: list[list[int]] = [[] for _ in range(n_nodes)]
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        return cls(adj, max_degree)

    @classmethod
    def from_tree(cls, tree: Tree, max_degree: int | None = None) -> "LeafTree":
        if max_degree is None:
            max_degree = max(3, max((len(ns) for ns in tree.adj), default=0))
        return cls(tree.adj, max_degree)

    def edge_classes(self) -> "TreeEdgeClass":
        ext, intl = [], []
        for u, v in self.edges():
            (ext if self.is_leaf(u) or self.is_leaf(v) else intl).append((u, v))
        return TreeEdgeClass(tuple(ext), tuple(intl))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tree):
            return NotImplemented
        return self.adj == other.adj

    __hash__ = Tree.__hash__


@dataclass(frozen=True)
class TreeEdgeClass:
    external: tuple[Edge, ...]
    internal: tuple[Edge, ...]


@dataclass(frozen=True)
class Layout:
    """A host tree plus the bijection ``phi[v]`` from graph vertices to leaves."""

    tree: LeafTree
    phi: tuple[int, ...]
    leaf_vertex: Mapping[int, int] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        phi = tuple(self.phi)
        object.__setattr__(self, "phi", phi)
        leaves = set(self.tree.leaves())
        if len(phi) != len(leaves) or set(phi) != leaves:
            raise InvalidArgument("phi must be a bijection onto the leaf set")
        object.__setattr__(self, "leaf_vertex", {x: v for v, x in enumerate(phi)})

    @classmethod
    def identity(cls, tree: LeafTree) -> "Layout":
        """Vertex ``v`` sits on leaf node ``v``; requires leaves ``0..n-1``."""
        return cls(tree, tuple(sorted(tree.leaves())))

    @property
    def n(self) -> int:
        return len(self.phi)

    def vertex_at(self, leaf: int) -> int:
        return self.leaf_vertex[leaf]


class RootedBinaryTree:
    """Rooted binary tree whose leaf node ids are the graph vertices ``0..n-1``.

    Internal nodes have exactly two children; ``children[leaf] == ()``.
    """

    __slots__ = ("children", "root", "parent")

    def __init__(self, children: Sequence[Sequence[int]], root: int):
        ch = tuple(tuple(c) for c in children)
        total = len(ch)
        parent = [-1] * total
        for u, cs in enumerate(ch):
            if len(cs) not in (0, 2):
                raise InvalidArgument(f"node {u} has {len(cs)} children; need 0 or 2")
            for c in cs:
                if not 0 <= c < total or parent[c] != -1 or c == root:
                    raise InvalidArgument(f"bad child {c} of {u}")
                parent[c] = u
        n_leaves = sum(1 for cs in ch if not cs)
        if total != max(1, 2 * n_leaves - 1):
            raise InvalidArgument("node count must be 2n - 1")
        if any(ch[v] for v in range(n_leaves)) or any(not ch[u] for u in range(n_leaves, total)):
            raise InvalidArgument("leaves must be nodes 0..n-1")
        if parent[root] != -1 or sum(1 for p in parent if p == -1) != 1:
            raise InvalidArgument("root must be the unique parentless node")
        self.children = ch
        self.root = root
        self.parent = tuple(parent)

    @classmethod
    def from_nested(cls, nested) -> "RootedBinaryTree":
        """Build from nested pairs of vertex ints, e.g. ``(((0, 1), 2), 3)``."""
        leaves: list[int] = []

        def collect(x):
            if isinstance(x, int):
                leaves.append(x)
            else:
                if len(x) != 2:
                    raise InvalidArgument("nested tree must be binary")
                collect(x[0])
                collect(x[1])

        collect(nested)
        n = len(leaves)
        if sorted(leaves) != list(range(n)):
            raise InvalidArgument("leaves must be exactly 0..n-1")
        children: list[tuple[int, ...]] = [() for _ in range(n)]

        def build(x) -> int:
            if isinstance(x, int):
                return x
            a, b = build(x[0]), build(x[1])
            children.append((a, b))
            return len(children) - 1

        root = build(nested)
        return cls(children, root)

    @property
    def n(self) -> int:
        return (len(self.children) + 1) // 2

    def nodes(self) -> range:
        return range(len(self.children))

    def edges(self) -> list[Edge]:
        """``(parent, child)`` pairs."""
        return [(u, c) for u, cs in enumerate(self.children) for c in cs]

    def postorder(self) -> list[int]:
        out: list[int] = []
        stack = [(self.root, False)]
        while stack:
            u, done = stack.pop()
            if done or not self.children[u]:
                out.append(u)
            else:
                stack.append((u, True))
                a, b = self.children[u]
                stack.append((b, False))
                stack.append((a, False))
        return out

    def internal_postorder(self) -> list[int]:
        """Left-to-right postorder of internal nodes: one merge step per entry."""
        return [u for u in self.postorder() if self.children[u]]

    def leaf_sets(self) -> list[int]:
        """Bitmask of descendant leaves per node."""
        masks = [0] * len(self.children)
        for u in self.postorder():
            cs = self.children[u]
            masks[u] = (1 << u) if not cs else masks[cs[0]] | masks[cs[1]]
        return masks

    def depth(self) -> list[int]:
        d = [0] * len(self.children)
        for u in reversed(self.postorder()):
            for c in self.children[u]:
                d[c] = d[u] + 1
        return d

    def leaf_distance(self, a: int, b: int) -> int:
        depth = self.depth()
        x, y = a, b
        while x != y:
            if depth[x] >= depth[y]:
                x = self.parent[x]
            else:
                y = self.parent[y]
        return depth[a] + depth[b] - 2 * depth[x]

    def to_nested(self, u: int | None = None):
        u = self.root if u is None else u
        cs = self.children[u]
        if not cs:
            return u
        return (self.to_nested(cs[0]), self.to_nested(cs[1]))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RootedBinaryTree):
            return NotImplemented
        return self.children == other.children and self.root == other.root

    def __hash__(self) -> int:
        return hash((self.children, self.root))

    def __repr__(self) -> str:
        return f"RootedBinaryTree({self.to_nested()!r})"


# -- queries -------------------------------------------------------------------


def _check_node(tree: Tree, u: int) -> None:
    if not 0 <= u < len(tree.adj):
        raise InvalidArgument(f"unknown node {u}")


def leaf_distance(tree: Tree, a: int, b: int) -> int:
    _check_node(tree, a)
    _check_node(tree, b)
    if not (tree.is_leaf(a) and tree.is_leaf(b)):
        raise InvalidArgument("leaf_distance needs two leaves")
    return tree.distances_from(a)[b]


def edge_cut(tree: Tree, e: Edge) -> tuple[frozenset[int], frozenset[int]]:
    """Leaf sets on each side of tree edge ``e = (u, v)``, ``u``'s side first."""
    u, v = e
    side_u = tree.side(u, v)
    leaves = set(tree.leaves())
    a = frozenset(side_u & leaves)
    return a, frozenset(leaves - a)


# -- structural edits --------------------------------------------------------------


def _compact(adj: dict[int, set[int]]) -> tuple[list[list[int]], dict[int, int]]:
    ids = sorted(adj)
    remap = {old: new for new, old in enumerate(ids)}
    return [[remap[v] for v in adj[old]] for old in ids], remap


def suppress_degree_two(tree: Tree, keep: Iterable[int] = ()) -> tuple[Tree, dict[int, int]]:
    """Contract every degree-2 node (except those in ``keep``).

    Returns the new tree and the old->new id map for surviving nodes; ids
    keep their relative order.
    """
    protected = set(keep)
    adj = {u: set(ns) for u, ns in enumerate(tree.adj)}
    changed = True
    while changed and len(adj) > 2:
        changed = False
        for u in sorted(adj):
            if len(adj[u]) == 2 and u not in protected:
                a, b = adj.pop(u)
                adj[a].discard(u)
                adj[b].discard(u)
                adj[a].add(b)
                adj[b].add(a)
                changed = True
                if len(adj) <= 2:
                    break
    lists, remap = _compact(adj)
    return Tree(lists), remap


def remove_leaf(tree: LeafTree, leaf: int) -> tuple[LeafTree, dict[int, int]]:
    """Delete ``leaf`` and contract its neighbour if it drops to degree 2."""
    _check_node(tree, leaf)
    if not tree.is_leaf(leaf) or len(tree.adj) < 2:
        raise InvalidArgument(f"{leaf} is not a removable leaf")
    adj = {u: set(ns) for u, ns in enumerate(tree.adj)}
    (w,) = adj.pop(leaf)
    adj[w].discard(leaf)
    if len(adj[w]) == 2 and len(adj) > 2:
        a, b = adj.pop(w)
        adj[a].discard(w)
        adj[b].discard(w)
        adj[a].add(b)
        adj[b].add(a)
    lists, remap = _compact(adj)
    return LeafTree(lists, tree.max_degree), remap


def subdivide_edge(
    tree: LeafTree, e: Edge, subtree: Tree | None = None, stub: int = 0
) -> tuple[LeafTree, dict[int, int]]:
    """Replace edge ``e`` by a path through a new node ``w`` and hang ``subtree`` off ``w``.

    ``subtree`` is a planted tree attached through its node ``stub``; ``None``
    means a single new leaf. New ids are ``w = N`` followed by the subtree's
    nodes in order; the returned map sends subtree ids to tree ids.
    """
    u, v = e
    if not tree.has_edge(u, v):
        raise InvalidArgument(f"{e} is not a tree edge")
    if subtree is None:
        subtree = Tree([[]])
        stub = 0
    _check_node(subtree, stub)
    if len(subtree) > 1:
        d = subtree.degree(stub) + 1
        if d < 3 or d > tree.max_degree:
            raise InvalidArgument(f"attached stub would have degree {d}")
    n = len(tree.adj)
    w = n
    sub_map = {x: n + 1 + x for x in range(len(subtree))}
    adj = [set(ns) for ns in tree.adj] + [set() for _ in range(1 + len(subtree))]
    adj[u].discard(v)
    adj[v].discard(u)
    for a in (u, v, sub_map[stub]):
        adj[w].add(a)
        adj[a].add(w)
    for x, y in subtree.edges():
        adj[sub_map[x]].add(sub_map[y])
        adj[sub_map[y]].add(sub_map[x])
    return LeafTree(adj, tree.max_degree), sub_map


def nni_neighbors(tree: LeafTree) -> list[LeafTree]:
    """The two nearest-neighbour interchanges across every internal edge.

    Only defined for layout trees (all internal degrees 3); ids are kept, so
    leaf labels carry over unchanged.
    """
    if len(tree.leaves()) < 4:
        return []
    out = []
    for u, v in tree.edge_classes().internal:
        a, b = [x for x in tree.adj[u] if x != v]
        for c in [x for x in tree.adj[v] if x != u]:
            out.append(_swap_subtrees(tree, u, b, v, c))
    return out


def _swap_subtrees(tree: LeafTree, u: int, b: int, v: int, c: int) -> LeafTree:
    """Exchange the subtree at ``b`` (hanging off ``u``) with the one at ``c`` (off ``v``)."""
    adj = [set(ns) for ns in tree.adj]
    adj[u].remove(b)
    adj[b].remove(u)
    adj[v].remove(c)
    adj[c].remove(v)
    adj[u].add(c)
    adj[c].add(u)
    adj[v].add(b)
    adj[b].add(v)
    return LeafTree(adj, tree.max_degree)


def rooted_to_unrooted(b: RootedBinaryTree) -> LeafTree:
    """Suppress the root; leaf ids (graph vertices) are preserved."""
    n = b.n
    if n < 2:
        raise InvalidArgument("need at least two leaves")
    adj: dict[int, set[int]] = {u: set() for u in b.nodes()}
    for p, c in b.edges():
        adj[p].add(c)
        adj[c].add(p)
    x, y = adj.pop(b.root)
    adj[x].discard(b.root)
    adj[y].discard(b.root)
    adj[x].add(y)
    adj[y].add(x)
    lists, remap = _compact(adj)
    assert all(remap[v] == v for v in range(n))
    return LeafTree(lists, 3)


def unrooted_to_rooted(layout: Layout, edge: Edge) -> RootedBinaryTree:
    """Root a layout tree by subdividing ``edge``; leaves become vertex ids."""
    tree = layout.tree
    u, v = edge
    if not tree.has_edge(u, v):
        raise InvalidArgument(f"{edge} is not a tree edge")

    def nest(x: int, parent: int):
        if tree.is_leaf(x) and x != parent:
            return layout.vertex_at(x)
        kids = [nest(y, x) for y in tree.adj[x] if y != parent]
        if len(kids) != 2:
            raise InvalidArgument("rooting needs a layout tree (internal degree 3)")
        return (kids[0], kids[1])

    return RootedBinaryTree.from_nested((nest(u, v), nest(v, u)))


# -- canonical forms ------------------------------------------------------------------


def _rooted_code(adj, root: int, block: int, label: Mapping[int, object] | None) -> str:
    order = []
    parent = {root: block}
    stack = [root]
    while stack:
        x = stack.pop()
        order.append(x)
        for y in adj[x]:
            if y != parent[x]:
                parent[y] = x
                stack.append(y)
    code: dict[int, str] = {}
    for x in reversed(order):
        kids = sorted(code[y] for y in adj[x] if y != parent[x])
        if not kids:
            code[x] = "()" if label is None or x not in label else f"({label[x]})"
        else:
            code[x] = "(" + "".join(kids) + ")"
    return code[root]


def canonical_form(tree: Tree, label: Mapping[int, object] | None = None) -> str:
    """Centre-rooted AHU encoding; equal strings iff the trees are isomorphic.

    With ``label`` given, leaves in the mapping are encoded by their label
    and the isomorphism must respect it.
    """
    if len(tree.adj) == 0:
        return "E"
    cs = tree.centers()
    if len(cs) == 1:
        return "C" + _rooted_code(tree.adj, cs[0], -1, label)
    a, b = cs
    x = _rooted_code(tree.adj, a, b, label)
    y = _rooted_code(tree.adj, b, a, label)
    return "B" + "".join(sorted((x, y)))


def _labels_of(t) -> tuple[Tree, dict[int, object] | None]:
    if isinstance(t, Layout):
        return t.tree, {leaf: v for v, leaf in enumerate(t.phi)}
    return t, {leaf: leaf for leaf in t.leaves()}


def tree_isomorphic(t1: Tree | Layout, t2: Tree | Layout, labeled: bool = False) -> bool:
    """Isomorphism test. ``labeled`` requires leaves to match by label.

    Labels are graph vertices for a :class:`Layout` and leaf ids for a bare tree.
    """
    a, la = _labels_of(t1)
    b, lb = _labels_of(t2)
    if len(a) != len(b):
        return False
    if not labeled:
        return canonical_form(a) == canonical_form(b)
    return canonical_form(a, la) == canonical_form(b, lb)


def splits(layout: Layout) -> frozenset[int]:
    """Nontrivial vertex bipartitions of a layout, as bitmasks avoiding vertex 0.

    Two layouts without degree-2 nodes are labelled-isomorphic iff their split sets agree.
    """
    tree = layout.tree
    out = set()
    full = (1 << layout.n) - 1
    for u, v in tree.edge_classes().internal:
        side = sum(1 << layout.vertex_at(x) for x in tree.side(u, v) if tree.is_leaf(x))
        if side & 1:
            side = full ^ side
        out.add(side)
    return frozenset(out)


# -- Newick ---------------------------------------------------------------------------


def _newick_from(adj, root: int, name, block: int = -1) -> str:
    codes: dict[int, str] = {}
    order = []
    parent = {root: block}
    stack = [root]
    while stack:
        x = stack.pop()
        order.append(x)
        for y in adj[x]:
            if y != parent[x]:
                parent[y] = x
                stack.append(y)
    keys: dict[int, str] = {}
    for x in reversed(order):
        kids = [y for y in adj[x] if y != parent[x]]
        if not kids:
            codes[x] = name(x)
            keys[x] = name(x)
        else:
            kids.sort(key=lambda y: (keys[y], codes[y]))
            codes[x] = "(" + ",".join(codes[y] for y in kids) + ")"
            keys[x] = min(keys[y] for y in kids)
    return codes[root]


def layout_to_newick(layout: Layout) -> str:
    """Newick rooted at the tree centre, leaves named ``vK``; children sorted for determinism."""
    tree = layout.tree
    name = lambda x: f"v{layout.vertex_at(x)}"  # noqa: E731
    if len(tree) == 1:
        return name(0) + ";"
    if len(tree) == 2:
        return f"({name(0)},{name(1)});"
    cs = [c for c in tree.centers() if not tree.is_leaf(c)]
    return _newick_from(tree.adj, cs[0], name) + ";"


def tree_to_newick(tree: Tree) -> str:
    """Newick of an unlabelled tree; leaves named by node id."""
    name = lambda x: f"n{x}"  # noqa: E731
    if len(tree) <= 2:
        return "(" + ",".join(name(x) for x in range(len(tree))) + ");"
    return _newick_from(tree.adj, tree.centers()[0], name) + ";"


def rooted_to_newick(b: RootedBinaryTree) -> str:
    def rec(u: int) -> str:
        cs = b.children[u]
        if not cs:
            return f"v{u}"
        return "(" + rec(cs[0]) + "," + rec(cs[1]) + ")"

    return rec(b.root) + ";"


def _parse_newick(text: str):
    """Parse to (children lists, leaf names) with node 0 as the root."""
    s = "".join(text.split())
    if not s.endswith(";"):
        raise ParseError("Newick string must end with ';'")
    s = s[:-1]
    children: list[list[int]] = []
    names: dict[int, str] = {}
    pos = 0

    def node() -> int:
        nonlocal pos
        me = len(children)
        children.append([])
        if pos < len(s) and s[pos] == "(":
            pos += 1
            while True:
                children[me].append(node())
                if pos >= len(s):
                    raise ParseError("unbalanced parentheses in Newick")
                if s[pos] == ",":
                    pos += 1
                    continue
                if s[pos] == ")":
                    pos += 1
                    break
                raise ParseError(f"unexpected {s[pos]!r} at offset {pos}")
            while pos < len(s) and s[pos] not in ",);":
                pos += 1
        else:
            start = pos
            while pos < len(s) and s[pos] not in ",();":
                pos += 1
            label = s[start:pos].split(":", 1)[0]
            if not label:
                raise ParseError(f"empty leaf label at offset {start}")
            names[me] = label
        return me

    root = node()
    if pos != len(s):
        raise ParseError(f"trailing characters at offset {pos}")
    return root, children, names


def _vertex_of(label: str) -> int:
    if not (label.startswith("v") and label[1:].isdigit()):
        raise ParseError(f"leaf label {label!r} is not of the form vK")
    return int(label[1:])


def layout_from_newick(text: str, max_degree: int = 3) -> Layout:
    """Parse an unrooted layout; a degree-2 root is suppressed."""
    root, children, names = _parse_newick(text)
    verts = {x: _vertex_of(lab) for x, lab in names.items()}
    n = len(verts)
    if sorted(verts.values()) != list(range(n)):
        raise ParseError("leaf labels must be v0..v{n-1}, each once")
    adj: dict[int, set[int]] = {u: set() for u in range(len(children))}
    for u, cs in enumerate(children):
        for c in cs:
            adj[u].add(c)
            adj[c].add(u)
    tree = Tree([sorted(adj[u]) for u in range(len(children))])
    if len(tree) > 2:
        tree, remap = suppress_degree_two(tree)
        verts = {remap[x]: v for x, v in verts.items()}
    try:
        lt = LeafTree(tree.adj, max_degree)
    except InvalidArgument as exc:
        raise ParseError(f"not a valid routing tree: {exc}") from None
    phi = [0] * n
    for x, v in verts.items():
        phi[v] = x
    return Layout(lt, tuple(phi))


def rooted_from_newick(text: str) -> RootedBinaryTree:
    root, children, names = _parse_newick(text)

    def nest(u: int):
        if u in names:
            return _vertex_of(names[u])
        cs = children[u]
        if len(cs) != 2:
            raise ParseError("rooted tree must be binary")
        return (nest(cs[0]), nest(cs[1]))

    try:
        return RootedBinaryTree.from_nested(nest(root))
    except InvalidArgument as exc:
        raise ParseError(str(exc)) from None
