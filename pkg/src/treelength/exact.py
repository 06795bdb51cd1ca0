"""Exhaustive enumeration of host trees and brute-force solvers.

Labelled trees are produced by leaf insertion: the tree on leaves
``0..k-1`` grows to ``0..k`` by subdividing one of its ``2k - 3`` edges with
the new leaf. Every labelled topology appears exactly once.

The walk keeps the tree rooted at leaf 0 as a parent array, together with
the bitmask of leaves below each node. Each non-root node ``x`` stands for
the edge above it, whose congestion is ``cut[mask[x]]`` for a precomputed
table of cut weights over all vertex subsets. Evaluating a tree therefore
costs one table lookup per edge.

Rooted trees with ``n`` leaves are unrooted trees on ``n + 1`` leaf slots
where slot 0 marks the root: the node next to it is the root, and the stem
edge contributes ``cut[all] = 0``.
"""

from __future__ import annotations

import bisect
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterator

from .errors import InvalidArgument, SizeGuardError
from .graph import Multigraph, VertexPartition, complete_graph
from .trees import Layout, LeafTree, RootedBinaryTree, Tree, canonical_form, subdivide_edge

MODES = ("unrooted", "rooted", "routing")
_ALIASES = {
    "unrooted-deg3": "unrooted",
    "layout": "unrooted",
    "rooted-binary": "rooted",
    "routing-maxdeg": "routing",
}
SOFT_GUARD = {"unrooted": 10, "rooted": 9, "routing": 8}
HARD_GUARD = {"unrooted": 12, "rooted": 10, "routing": 9}
WITNESS_CAP = 100


@dataclass(frozen=True)
class EnumerationSpec:
    leaf_count: int
    mode: str = "unrooted"
    delta: int = 3
    parallel_shards: int = 1
    allow_large: bool = False

    def __post_init__(self) -> None:
        mode = _ALIASES.get(self.mode, self.mode)
        object.__setattr__(self, "mode", mode)
        if mode not in MODES:
            raise InvalidArgument(f"unknown mode {self.mode!r}")
        if mode == "routing" and self.delta < 3:
            raise InvalidArgument("routing mode needs delta >= 3")
        if mode != "routing" and self.delta != 3:
            raise InvalidArgument(f"{mode} trees have internal degree 3")
        lo = 1 if mode == "rooted" else 2
        if self.leaf_count < lo:
            raise InvalidArgument(f"{mode} enumeration needs at least {lo} leaves")
        if self.parallel_shards < 1:
            raise InvalidArgument("parallel_shards must be >= 1")

    def check_guard(self) -> None:
        limit = HARD_GUARD[self.mode] if self.allow_large else SOFT_GUARD[self.mode]
        if self.leaf_count > limit:
            raise SizeGuardError(f"{self.mode} enumeration", self.leaf_count, limit)


@dataclass
class ExactSolution:
    best_value: int
    witnesses: list
    trees_evaluated: int
    optimal_count: int
    mode: str = "unrooted"
    wall_clock: float = 0.0
    witness_keys: list = field(default_factory=list, repr=False)


def double_factorial(k: int) -> int:
    out = 1
    while k > 1:
        out *= k
        k -= 2
    return out


def expected_count(leaf_count: int, mode: str) -> int:
    """(2n-5)!! unrooted, (2n-3)!! rooted."""
    mode = _ALIASES.get(mode, mode)
    if mode == "unrooted":
        return double_factorial(2 * leaf_count - 5) if leaf_count >= 3 else 1
    if mode == "rooted":
        return double_factorial(2 * leaf_count - 3) if leaf_count >= 2 else 1
    raise InvalidArgument("no closed form for routing mode")


# -- the insertion walk ------------------------------------------------------------


class _Walk:
    """Leaf-insertion walk over labelled degree-3 trees on ``slots`` leaves."""

    def __init__(self, slots: int, shard: int = 0, shards: int = 1):
        if slots < 2:
            raise InvalidArgument("need at least two leaf slots")
        self.slots = slots
        self.shard = shard
        self.shards = shards
        total = max(2 * slots - 2, slots)
        self.parent = [-1] * total
        self.mask = [0] * total
        if slots == 2:
            self.parent[1] = 0
            self.mask[1] = 2
            self.nodes = [1]
        else:
            c = slots
            self.parent[c] = 0
            self.parent[1] = c
            self.parent[2] = c
            self.mask[1] = 2
            self.mask[2] = 4
            self.mask[c] = 6
            self.nodes = list(range(1, slots)) + list(range(slots, 2 * slots - 2))

    def _choices(self, k: int) -> list[int]:
        """Edges (named by their lower node) of the tree on leaves ``0..k-1``."""
        return list(range(1, k)) + list(range(self.slots, self.slots + k - 2))

    def _split_depth(self) -> int:
        n = self.slots
        if self.shards == 1 or n <= 3:
            return n
        prefixes, d = 1, 3
        while d < n and prefixes < 4 * self.shards:
            prefixes *= 2 * d - 3
            d += 1
        return d

    def run(self) -> Iterator[None]:
        """Yield once per complete tree; read ``parent``/``mask`` before resuming."""
        n = self.slots
        if n <= 3:
            if self.shard == 0:
                yield
            return
        parent, mask = self.parent, self.mask
        choices = {k: self._choices(k) for k in range(3, n)}
        split = self._split_depth()
        pos = [0] * (n + 1)
        saved_p = [0] * (n + 1)
        saved_x = [0] * (n + 1)
        prefix = 0
        k = 3
        while True:
            if k == n:
                yield
                k -= 1
                self._undo(k, saved_p[k], saved_x[k])
                pos[k] += 1
                continue
            if pos[k] == 0 and k == split and split < n:
                skip = prefix % self.shards != self.shard
                prefix += 1
                if skip:
                    pos[k] = len(choices[k])
            if pos[k] < len(choices[k]):
                x = choices[k][pos[k]]
                saved_x[k] = x
                saved_p[k] = self._insert(k, x)
                k += 1
                pos[k] = 0
            else:
                if k == 3:
                    return
                k -= 1
                self._undo(k, saved_p[k], saved_x[k])
                pos[k] += 1

    def _insert(self, k: int, x: int) -> int:
        parent, mask = self.parent, self.mask
        w = self.slots + k - 2
        bit = 1 << k
        p = parent[x]
        parent[w] = p
        parent[x] = w
        parent[k] = w
        mask[k] = bit
        mask[w] = mask[x] | bit
        a = p
        while a != 0:
            mask[a] |= bit
            a = parent[a]
        return p

    def _undo(self, k: int, p: int, x: int) -> None:
        parent, mask = self.parent, self.mask
        bit = 1 << k
        parent[x] = p
        a = p
        while a != 0:
            mask[a] ^= bit
            a = parent[a]

    def internal_edges(self) -> list[int]:
        """Nodes ``x`` whose edge to the parent joins two internal nodes."""
        s = self.slots
        return [x for x in self.nodes if x >= s and self.parent[x] >= s]


# -- tree reconstruction from clusters -------------------------------------------------


def _clusters_to_adjacency(n_leaves: int, clusters) -> list[list[int]]:
    """Adjacency of the tree whose edges below leaf 0 carry the given leaf masks.

    Leaf ``i`` becomes node ``i``; each non-singleton cluster becomes an
    internal node, numbered by (size, mask) order.
    """
    full = ((1 << n_leaves) - 1) ^ 1
    big = sorted({c for c in clusters if c & (c - 1)} | ({full} if full & (full - 1) else set()),
                 key=lambda c: (bin(c).count("1"), c))
    ids = {c: n_leaves + i for i, c in enumerate(big)}
    adj: list[list[int]] = [[] for _ in range(n_leaves + len(big))]

    def link(a: int, b: int) -> None:
        adj[a].append(b)
        adj[b].append(a)

    for v in range(1, n_leaves):
        single = 1 << v
        owner = next((c for c in big if c & single), None)
        link(v, ids[owner] if owner is not None else 0)
    for i, c in enumerate(big):
        owner = next((d for d in big[i + 1:] if d & c == c and d != c), None)
        link(ids[c], ids[owner] if owner is not None else 0)
    return adj


def _layout_from_key(n: int, key, delta: int = 3) -> Layout:
    adj = _clusters_to_adjacency(n, key)
    return Layout.identity(LeafTree(adj, delta))


def _rooted_from_key(n: int, key) -> RootedBinaryTree:
    # slots 1..n hold vertices 0..n-1; slot 0 marks the root.
    adj = _clusters_to_adjacency(n + 1, key)
    (root,) = adj[0]

    def nest(u: int, parent: int):
        if u <= n:
            return u - 1
        a, b = [y for y in adj[u] if y != parent]
        return (nest(a, u), nest(b, u))

    if n == 1:
        return RootedBinaryTree([()], 0)
    return RootedBinaryTree.from_nested(nest(root, 0))


# -- enumeration --------------------------------------------------------------------------


def _routing_contractions(walk: _Walk, delta: int) -> Iterator[frozenset[int]]:
    """Split sets of every tree obtained by contracting internal edges (degrees <= delta)."""
    inner = walk.internal_edges()
    mask, parent = walk.mask, walk.parent
    limit = delta - 2
    for sub in range(1 << len(inner)):
        # union-find over internal nodes joined by contracted edges
        root: dict[int, int] = {}

        def find(a: int) -> int:
            while root.get(a, a) != a:
                a = root[a]
            return a

        size: dict[int, int] = {}
        ok = True
        for i, x in enumerate(inner):
            if sub >> i & 1:
                ra, rb = find(x), find(parent[x])
                sa, sb = size.get(ra, 1), size.get(rb, 1)
                if sa + sb > limit:
                    ok = False
                    break
                root[ra] = rb
                size[rb] = sa + sb
        if ok:
            yield frozenset(mask[x] for i, x in enumerate(inner) if not sub >> i & 1)


def enumerate_trees(spec: EnumerationSpec) -> Iterator[Layout | RootedBinaryTree]:
    """Every labelled tree of the requested kind, exactly once."""
    spec.check_guard()
    n = spec.leaf_count
    if spec.mode == "rooted":
        if n == 1:
            yield RootedBinaryTree([()], 0)
            return
        walk = _Walk(n + 1)
        for _ in walk.run():
            yield _rooted_from_key(n, [walk.mask[x] for x in walk.nodes])
        return
    walk = _Walk(n)
    if spec.mode == "unrooted":
        for _ in walk.run():
            yield _layout_from_key(n, [walk.mask[x] for x in walk.nodes])
        return
    seen: set[frozenset[int]] = set()
    leaf_masks = [1 << v for v in range(1, n)]
    for _ in walk.run():
        for key in _routing_contractions(walk, spec.delta):
            if key not in seen:
                seen.add(key)
                yield _layout_from_key(n, list(key) + leaf_masks, spec.delta)


def count_trees(spec: EnumerationSpec) -> int:
    """Walk the whole space without materialising trees."""
    spec.check_guard()
    n = spec.leaf_count
    if spec.mode == "rooted":
        if n == 1:
            return 1
        return sum(1 for _ in _Walk(n + 1).run())
    walk = _Walk(n)
    if spec.mode == "unrooted":
        return sum(1 for _ in walk.run())
    seen: set[frozenset[int]] = set()
    for _ in walk.run():
        seen.update(_routing_contractions(walk, spec.delta))
    return len(seen)


# -- solving ------------------------------------------------------------------------------


def _scan(cut: list[int], n: int, mode: str, delta: int, shard: int, shards: int, want_min_edge: bool,
          cap: int = WITNESS_CAP):
    """Scan one shard; returns (best, count, sorted witness keys, evaluated, min edge congestion)."""
    shift = 1 if mode == "rooted" else 0
    slots = n + shift
    best = None
    count = 0
    keys: list[tuple[int, ...]] = []
    evaluated = 0
    min_edge = None
    if mode == "rooted" and n == 1:
        return (0, 1, [()], 1, None) if shard == 0 else (None, 0, [], 0, None)
    walk = _Walk(slots, shard, shards)
    nodes = walk.nodes
    mask = walk.mask

    def offer(val: int, key_masks) -> None:
        nonlocal best, count, keys
        if best is None or val < best:
            best, count, keys = val, 0, []
        if val == best:
            count += 1
            key = tuple(sorted(key_masks))
            if len(keys) < cap or key < keys[-1]:
                bisect.insort(keys, key)
                del keys[cap:]

    if mode == "routing":
        seen: set[frozenset[int]] = set()
        external = [1 << v for v in range(1, n)] + [((1 << n) - 1) ^ 1]
        ext_cost = sum(cut[m] for m in external)
        for _ in walk.run():
            for key in _routing_contractions(walk, delta):
                if key in seen:
                    continue
                seen.add(key)
                evaluated += 1
                val = ext_cost + sum(cut[m] for m in key)
                if best is None or val <= best:
                    offer(val, list(key) + external)
        return best, count, keys, evaluated, min_edge
    for _ in walk.run():
        evaluated += 1
        if shift:
            vals = [cut[mask[x] >> 1] for x in nodes]
        else:
            vals = [cut[mask[x]] for x in nodes]
        val = sum(vals)
        if want_min_edge:
            lo = min(v for x, v in zip(nodes, vals) if not (shift and walk.parent[x] == 0))
            min_edge = lo if min_edge is None else min(min_edge, lo)
        if best is None or val <= best:
            offer(val, [mask[x] for x in nodes])
    return best, count, keys, evaluated, min_edge


def _merge(results, cap: int = WITNESS_CAP):
    best = None
    for r in results:
        if r[0] is not None and (best is None or r[0] < best):
            best = r[0]
    count = sum(r[1] for r in results if r[0] == best)
    keys = sorted(k for r in results if r[0] == best for k in r[2])[:cap]
    evaluated = sum(r[3] for r in results)
    edges = [r[4] for r in results if r[4] is not None]
    return best, count, keys, evaluated, (min(edges) if edges else None)


def _run(cut: list[int], spec: EnumerationSpec, want_min_edge: bool = False, cap: int = WITNESS_CAP):
    n, shards = spec.leaf_count, spec.parallel_shards
    if shards == 1 or spec.mode == "routing":
        # routing dedup needs one global seen-set, so it never shards
        return _scan(cut, n, spec.mode, spec.delta, 0, 1, want_min_edge, cap)
    with ProcessPoolExecutor(max_workers=shards) as pool:
        futs = [
            pool.submit(_scan, cut, n, spec.mode, spec.delta, s, shards, want_min_edge, cap)
            for s in range(shards)
        ]
        return _merge([f.result() for f in futs], cap)


def _witness(key, spec: EnumerationSpec):
    n = spec.leaf_count
    if spec.mode == "rooted":
        return _rooted_from_key(n, key)
    return _layout_from_key(n, key, spec.delta)


def solve_min_tree_length(
    g: Multigraph, spec: EnumerationSpec, witness_limit: int = WITNESS_CAP
) -> ExactSolution:
    """Global minimum of tree length over the whole enumerated space.

    Keeps the ``witness_limit`` optimal trees with the smallest split keys, so
    the witness list does not depend on sharding.
    """
    if g.n != spec.leaf_count:
        raise InvalidArgument(f"graph has {g.n} vertices, spec expects {spec.leaf_count}")
    spec.check_guard()
    t0 = time.perf_counter()
    if witness_limit < 1:
        raise InvalidArgument("witness_limit must be >= 1")
    best, count, keys, evaluated, _ = _run(g.cut_table(), spec, cap=witness_limit)
    return ExactSolution(
        best_value=best,
        witnesses=[_witness(k, spec) for k in keys],
        trees_evaluated=evaluated,
        optimal_count=count,
        mode=spec.mode,
        wall_clock=time.perf_counter() - t0,
        witness_keys=keys,
    )


def verify_congested(g: Multigraph, spec: EnumerationSpec | None = None) -> bool:
    """Whether every edge of every enumerated layout carries at least the minimum degree."""
    spec = spec or EnumerationSpec(g.n)
    if g.n != spec.leaf_count:
        raise InvalidArgument("graph and spec sizes differ")
    spec.check_guard()
    if spec.mode == "routing":
        raise InvalidArgument("congestion check is defined over layout trees")
    *_, lowest = _run(g.cut_table(), spec, want_min_edge=True)
    return lowest is None or lowest >= g.min_degree()


# -- unlabelled shapes -----------------------------------------------------------------------


def enumerate_shapes(leaf_count: int, mode: str = "unrooted", delta: int = 3) -> list[Tree]:
    """One representative per isomorphism class.

    Rooted shapes are returned as unrooted trees on ``leaf_count + 1`` leaves
    where leaf 0 is the root marker.
    """
    mode = _ALIASES.get(mode, mode)
    if mode == "rooted":
        slots, label = leaf_count + 1, True
    else:
        slots, label = leaf_count, False
    if slots < 2:
        raise InvalidArgument("too few leaves")
    if slots == 2:
        shapes = [LeafTree([[1], [0]])]
    else:
        shapes = [LeafTree([[3], [3], [3], [0, 1, 2]])]
        for _ in range(3, slots):
            grown: dict[str, LeafTree] = {}
            for t in shapes:
                for e in t.edges():
                    new, _ = subdivide_edge(t, e)
                    code = canonical_form(new, {0: "r"} if label else None)
                    grown.setdefault(code, new)
            shapes = [grown[c] for c in sorted(grown)]
    if mode != "routing" or delta == 3:
        return list(shapes)
    out: dict[str, Tree] = {}
    for t in shapes:
        for c in _contractions(t, delta):
            out.setdefault(canonical_form(c), c)
    return [out[c] for c in sorted(out)]


def _contractions(t: LeafTree, delta: int) -> Iterator[LeafTree]:
    inner = list(t.edge_classes().internal)
    for r in range(len(inner) + 1):
        for chosen in combinations(inner, r):
            adj = {u: set(ns) for u, ns in enumerate(t.adj)}
            alias = {u: u for u in adj}

            def find(a: int) -> int:
                while alias[a] != a:
                    a = alias[a]
                return a

            for u, v in chosen:
                a, b = find(u), find(v)
                adj[a].discard(b)
                adj[b].discard(a)
                for y in adj.pop(b):
                    adj[y].discard(b)
                    adj[y].add(a)
                    adj[a].add(y)
                alias[b] = a
            if all(len(ns) <= delta for ns in adj.values()):
                ids = sorted(adj)
                idx = {u: i for i, u in enumerate(ids)}
                yield LeafTree([[idx[y] for y in adj[u]] for u in ids], delta)


def solve_min_sigma_ll(leaf_count: int, spec: EnumerationSpec | None = None) -> ExactSolution:
    """Minimum leaf-distance sum over unlabelled shapes; witnesses are the optimal shapes."""
    from .measures import sigma_ll

    spec = spec or EnumerationSpec(leaf_count)
    spec.check_guard()
    t0 = time.perf_counter()
    shapes = enumerate_shapes(leaf_count, spec.mode, spec.delta)
    if spec.mode == "rooted":
        vals = [_rooted_sigma(t) for t in shapes]
    else:
        vals = [sigma_ll(t) for t in shapes]
    best = min(vals)
    wits = [t for t, v in zip(shapes, vals) if v == best]
    return ExactSolution(best, wits, len(shapes), len(wits), spec.mode, time.perf_counter() - t0)


def _rooted_sigma(t: Tree) -> int:
    """Leaf-distance sum of a marker-rooted shape, ignoring the marker leaf."""
    leaves = [x for x in t.leaves() if x != 0]
    total = 0
    for a, b in combinations(leaves, 2):
        total += t.distances_from(a)[b]
    # the marker edge is not part of the rooted tree; paths never use it
    return total


# -- clique cover -------------------------------------------------------------------------------


def solve_clique_cover(g: Multigraph, sizes: list[int]) -> VertexPartition | None:
    """Partition into cliques of the given sizes, or ``None``.

    Vertices are placed in index order; among still-empty blocks of equal
    target size only the first is tried, so each partition is visited once.
    Returned blocks follow the order of ``sizes``.
    """
    if not g.is_simple():
        raise InvalidArgument("clique cover needs a simple graph")
    if sum(sizes) != g.n or any(s < 1 for s in sizes):
        raise InvalidArgument(f"sizes {sizes} do not sum to n={g.n}")
    k = len(sizes)
    blocks: list[list[int]] = [[] for _ in range(k)]

    def place(v: int) -> bool:
        if v == g.n:
            return True
        tried_empty: set[int] = set()
        for i in range(k):
            b = blocks[i]
            if len(b) >= sizes[i]:
                continue
            if not b:
                if sizes[i] in tried_empty:
                    continue
                tried_empty.add(sizes[i])
            if all(g.has_edge(v, u) for u in b):
                b.append(v)
                if place(v + 1):
                    return True
                b.pop()
        return False

    if not place(0):
        return None
    return VertexPartition.of(blocks)


def equal_cover_sizes(n: int, k: int) -> list[int]:
    if k < 1 or n % k:
        raise InvalidArgument(f"{n} vertices cannot split into {k} equal blocks")
    return [n // k] * k


def sigma_ll_via_complete(leaf_count: int, spec: EnumerationSpec | None = None) -> ExactSolution:
    """Labelled cross-check: minimum tree length of ``K_n`` over every labelled tree."""
    spec = spec or EnumerationSpec(leaf_count)
    return solve_min_tree_length(complete_graph(leaf_count), spec)
