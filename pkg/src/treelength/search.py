"""Restart descent over layout trees.

Two move kinds:

* NNI across an internal edge ``(u, v)``: with ``u``'s other subtrees ``A, B``
  and ``v``'s ``C, D``, exchanging ``B`` with ``C`` (or with ``D``) changes
  only the congestion of ``(u, v)`` itself, so the delta is
  ``cut(A | C) - cut(A | B)``.
* leaf swap: exchanging the vertices at leaves ``p`` and ``q`` changes the
  dilation of every graph edge at those vertices; with leaf distances ``D``
  the delta is ``sum_z (w(x,z) - w(y,z)) * (D(q, z) - D(p, z))``.

Moves are indexed NNI first (internal edges in sorted order, two per edge),
then swaps by vertex pair; ties always go to the lowest index.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field

from .errors import InvalidArgument
from .graph import Multigraph
from .trees import Layout, LeafTree

MOVE_KINDS = ("nni", "leaf_swap")
STRATEGIES = ("first-improvement", "steepest")


@dataclass(frozen=True)
class SearchConfig:
    seed: int = 0
    restarts: int = 1
    move_set: tuple[str, ...] = MOVE_KINDS
    strategy: str = "first-improvement"
    max_plateau_steps: int = 0
    check_incremental: bool = False

    def __post_init__(self) -> None:
        object.__setattr__(self, "move_set", tuple(self.move_set))
        if self.restarts < 1:
            raise InvalidArgument("restarts must be >= 1")
        if not self.move_set or any(m not in MOVE_KINDS for m in self.move_set):
            raise InvalidArgument(f"move_set must be a non-empty subset of {MOVE_KINDS}")
        if self.strategy not in STRATEGIES:
            raise InvalidArgument(f"strategy must be one of {STRATEGIES}")
        if self.max_plateau_steps < 0:
            raise InvalidArgument("max_plateau_steps must be >= 0")


@dataclass
class SearchResult:
    layout: Layout
    value: int
    trace: list[dict] = field(default_factory=list)

    def __iter__(self):
        # allows ``layout, value, trace = local_search(...)``
        return iter((self.layout, self.value, self.trace))


class _Cut:
    def __init__(self, g: Multigraph):
        self.g = g
        self.table = g.cut_table() if g.n <= 20 else None

    def __call__(self, mask: int) -> int:
        if self.table is not None:
            return self.table[mask]
        return self.g.cut_weight(mask)


class _State:
    """Mutable layout: nodes ``0..n-1`` are leaves, ``label[leaf]`` its vertex."""

    def __init__(self, g: Multigraph, adj: list[list[int]], label: list[int], cut: _Cut):
        self.g = g
        self.n = g.n
        self.adj = adj
        self.label = label
        self.cut = cut
        self.refresh()

    def refresh(self) -> None:
        n, adj = self.n, self.adj
        parent = [-1] * len(adj)
        parent[0] = 0
        order = [0]
        for x in order:
            for y in adj[x]:
                if parent[y] == -1:
                    parent[y] = x
                    order.append(y)
        below = [0] * len(adj)
        for x in reversed(order):
            if x < n:
                below[x] |= 1 << self.label[x]
            if x != 0:
                below[parent[x]] |= below[x]
        self.parent = parent
        self.below = below
        self.full = (1 << n) - 1
        self.value = sum(self.cut(below[x]) for x in order[1:])
        self._dist = None

    def side(self, u: int, v: int) -> int:
        """Vertices on ``v``'s side of edge ``(u, v)``."""
        if self.parent[v] == u:
            return self.below[v]
        return self.full ^ self.below[u]

    def leaf_dist(self) -> list[list[int]]:
        if self._dist is None:
            n, adj = self.n, self.adj
            rows = []
            for p in range(n):
                d = [-1] * len(adj)
                d[p] = 0
                q = [p]
                for x in q:
                    for y in adj[x]:
                        if d[y] < 0:
                            d[y] = d[x] + 1
                            q.append(y)
                rows.append(d[:n])
            self._dist = rows
        return self._dist

    # -- moves ---------------------------------------------------------------------

    def internal_edges(self) -> list[tuple[int, int]]:
        n = self.n
        return sorted((u, v) for u in range(n, len(self.adj)) for v in self.adj[u] if v > u)

    def moves(self, kinds) -> list[tuple]:
        out: list[tuple] = []
        if "nni" in kinds:
            for u, v in self.internal_edges():
                a, b = sorted(y for y in self.adj[u] if y != v)
                c, d = sorted(y for y in self.adj[v] if y != u)
                out.append(("nni", u, v, b, c))
                out.append(("nni", u, v, b, d))
        if "leaf_swap" in kinds:
            at = [0] * self.n
            for p in range(self.n):
                at[self.label[p]] = p
            for x in range(self.n):
                for y in range(x + 1, self.n):
                    out.append(("swap", at[x], at[y]))
        return out

    def delta(self, move: tuple) -> int:
        if move[0] == "nni":
            _, u, v, b, c = move
            (a,) = [y for y in self.adj[u] if y != v and y != b]
            before = self.side(u, a) | self.side(u, b)
            after = self.side(u, a) | self.side(v, c)
            return self.cut(after) - self.cut(before)
        _, p, q = move
        x, y = self.label[p], self.label[q]
        D = self.leaf_dist()
        g = self.g
        total = 0
        for r in range(self.n):
            z = self.label[r]
            if z == x or z == y:
                continue
            w = g.multiplicity(x, z) - g.multiplicity(y, z)
            if w:
                total += w * (D[q][r] - D[p][r])
        return total

    def apply(self, move: tuple) -> None:
        if move[0] == "nni":
            _, u, v, b, c = move
            adj = self.adj
            adj[u][adj[u].index(b)] = c
            adj[v][adj[v].index(c)] = b
            adj[b][adj[b].index(u)] = v
            adj[c][adj[c].index(v)] = u
        else:
            _, p, q = move
            self.label[p], self.label[q] = self.label[q], self.label[p]
        self.refresh()

    def key(self) -> tuple[int, ...]:
        masks = [self.below[x] for x in range(1, len(self.adj))]
        return tuple(sorted(min(m, self.full ^ m) for m in masks))

    def layout(self) -> Layout:
        phi = [0] * self.n
        for p in range(self.n):
            phi[self.label[p]] = p
        return Layout(LeafTree([list(ns) for ns in self.adj]), tuple(phi))


# -- initial layouts --------------------------------------------------------------------


def _random_adjacency(n: int, rng: random.Random) -> list[list[int]]:
    """Uniform labelled degree-3 tree on leaves ``0..n-1`` by random leaf insertion."""
    if n < 3:
        raise InvalidArgument("layout search needs n >= 3")
    adj: list[list[int]] = [[] for _ in range(2 * n - 2)]
    c = n
    for leaf in range(3):
        adj[leaf].append(c)
        adj[c].append(leaf)
    edges = [(0, c), (1, c), (2, c)]
    for k in range(3, n):
        i = rng.randrange(len(edges))
        a, b = edges[i]
        w = n + k - 2
        adj[a][adj[a].index(b)] = w
        adj[b][adj[b].index(a)] = w
        adj[w] = [a, b, k]
        adj[k] = [w]
        edges[i] = (a, w)
        edges.extend([(w, b), (w, k)])
    return adj


def initial_layout(g: Multigraph, seed: int | random.Random) -> Layout:
    rng = seed if isinstance(seed, random.Random) else random.Random(seed)
    return Layout.identity(LeafTree(_random_adjacency(g.n, rng)))


# -- descent ----------------------------------------------------------------------------------


def _tree_length_full(state: _State) -> int:
    from .measures import tree_length

    return tree_length(state.layout(), state.g)


def _descend(state: _State, config: SearchConfig) -> int:
    """Run descent in place; returns the number of applied moves."""
    steps = 0
    plateau = 0
    seen = {state.key()}
    while True:
        moves = state.moves(config.move_set)
        chosen, best_delta = None, 0
        for mv in moves:
            d = state.delta(mv)
            if d < best_delta:
                chosen, best_delta = mv, d
                if config.strategy == "first-improvement":
                    break
        if chosen is not None:
            expected = state.value + best_delta
            state.apply(chosen)
            seen.add(state.key())
            steps += 1
            plateau = 0
            if state.value != expected:
                raise AssertionError(f"incremental value {expected} != recomputed {state.value}")
            if config.check_incremental and _tree_length_full(state) != expected:
                raise AssertionError("incremental value disagrees with measures.tree_length")
            continue
        if plateau >= config.max_plateau_steps:
            return steps
        # sideways step into a layout not visited yet
        for mv in moves:
            if state.delta(mv) != 0:
                continue
            state.apply(mv)
            if state.key() not in seen:
                seen.add(state.key())
                break
            state.apply(_inverse(mv))
        else:
            return steps
        plateau += 1
        steps += 1


def _inverse(move: tuple) -> tuple:
    if move[0] == "nni":
        _, u, v, b, c = move
        return ("nni", u, v, c, b)
    return move


def local_search(g: Multigraph, config: SearchConfig | None = None) -> SearchResult:
    """Best local optimum over ``config.restarts`` random starts."""
    config = config or SearchConfig()
    if g.n < 3:
        raise InvalidArgument("layout search needs n >= 3")
    cut = _Cut(g)
    stream = random.Random(config.seed)
    seeds = [stream.getrandbits(64) for _ in range(config.restarts)]
    best: _State | None = None
    trace = []
    for r, s in enumerate(seeds):
        rng = random.Random(s)
        state = _State(g, _random_adjacency(g.n, rng), list(range(g.n)), cut)
        start = state.value
        steps = _descend(state, config)
        trace.append({"restart": r, "initial": start, "best": state.value, "moves": steps})
        if best is None or state.value < best.value:
            best = state
    assert best is not None
    return SearchResult(best.layout(), best.value, trace)


def move_deltas(layout: Layout, g: Multigraph, kinds=MOVE_KINDS) -> list[tuple[tuple, int, int]]:
    """``(move, incremental delta, recomputed delta)`` for every move of ``layout``.

    Exposed for testing the incremental evaluator against full re-evaluation.
    """
    from .measures import tree_length

    n = g.n
    tree = layout.tree
    # relabel nodes so leaves are 0..n-1 as the search state expects
    leaves = sorted(tree.leaves())
    others = sorted(set(range(len(tree))) - set(leaves))
    order = leaves + others
    idx = {u: i for i, u in enumerate(order)}
    adj = [[idx[y] for y in tree.adj[u]] for u in order]
    label = [layout.leaf_vertex[u] for u in leaves]
    base = tree_length(layout, g)
    out = []
    for mv in _State(g, adj, label, _Cut(g)).moves(kinds):
        st = _State(g, [list(a) for a in adj], list(label), _Cut(g))
        d = st.delta(mv)
        st.apply(mv)
        out.append((mv, d, tree_length(st.layout(), g) - base))
    return out
