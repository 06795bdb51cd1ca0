"""Finite undirected multigraphs on dense integer vertices.

Parallel edges are stored as a multiplicity per unordered pair, so a pair
joined by a thousand parallel edges costs one dictionary entry.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator, Mapping, Sequence

from .errors import InvalidArgument, ParseError

Pair = tuple[int, int]


def _norm(u: int, v: int) -> Pair:
    return (u, v) if u < v else (v, u)


class Multigraph:
    """Immutable multigraph with vertices ``0..n-1``.

    ``multiplicity`` maps unordered pairs to positive edge counts; absent
    pairs have no edges. Self-loops are rejected.
    """

    __slots__ = ("_n", "_mult", "_adj", "_edge_total")

    def __init__(self, vertex_count: int, multiplicity: Mapping[Pair, int] | None = None):
        if vertex_count < 0:
            raise InvalidArgument("vertex_count must be non-negative")
        mult: dict[Pair, int] = {}
        for (u, v), k in (multiplicity or {}).items():
            if u == v:
                raise InvalidArgument(f"self-loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise InvalidArgument(f"pair {(u, v)} out of range for n={vertex_count}")
            if k < 0:
                raise InvalidArgument(f"negative multiplicity on {(u, v)}")
            if k == 0:
                continue
            key = _norm(u, v)
            mult[key] = mult.get(key, 0) + int(k)
        adj: list[dict[int, int]] = [{} for _ in range(vertex_count)]
        for (u, v), k in mult.items():
            adj[u][v] = k
            adj[v][u] = k
        self._n = vertex_count
        self._mult = dict(sorted(mult.items()))
        self._adj = adj
        self._edge_total = sum(mult.values())

    # -- basic accessors -------------------------------------------------

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def n(self) -> int:
        return self._n

    @property
    def edge_total(self) -> int:
        """Number of edges with parallel edges counted individually."""
        return self._edge_total

    @property
    def m(self) -> int:
        return self._edge_total

    @property
    def pair_count(self) -> int:
        return len(self._mult)

    def multiplicity(self, u: int, v: int) -> int:
        if u == v:
            return 0
        return self._mult.get(_norm(u, v), 0)

    def pairs(self) -> list[tuple[Pair, int]]:
        """``((u, v), mult)`` for every present pair, lexicographically sorted, ``u < v``."""
        return list(self._mult.items())

    def has_edge(self, u: int, v: int) -> bool:
        return self.multiplicity(u, v) > 0

    def neighbors(self, u: int) -> Mapping[int, int]:
        return self._adj[u]

    def degree(self, u: int) -> int:
        """Weighted degree: parallel edges counted individually."""
        return sum(self._adj[u].values())

    def min_degree(self) -> int:
        return min((self.degree(u) for u in range(self._n)), default=0)

    def is_simple(self) -> bool:
        return all(k == 1 for k in self._mult.values())

    def is_connected(self) -> bool:
        if self._n <= 1:
            return True
        return len(self._reach(0)) == self._n

    def is_clique(self, vertices: Iterable[int]) -> bool:
        vs = list(vertices)
        return all(self.has_edge(u, v) for u, v in combinations(vs, 2))

    def _reach(self, s: int) -> set[int]:
        seen = {s}
        todo = [s]
        while todo:
            u = todo.pop()
            for v in self._adj[u]:
                if v not in seen:
                    seen.add(v)
                    todo.append(v)
        return seen

    def distances_from(self, s: int) -> list[int | None]:
        """BFS hop distances; ``None`` for unreachable vertices."""
        dist: list[int | None] = [None] * self._n
        dist[s] = 0
        q = deque([s])
        while q:
            u = q.popleft()
            for v in self._adj[u]:
                if dist[v] is None:
                    dist[v] = dist[u] + 1  # type: ignore[operator]
                    q.append(v)
        return dist

    # -- cuts --------------------------------------------------------------

    def cut_weight(self, side: int) -> int:
        """Total multiplicity of edges with exactly one endpoint in the bitmask ``side``."""
        total = 0
        for (u, v), k in self._mult.items():
            if ((side >> u) & 1) != ((side >> v) & 1):
                total += k
        return total

    def cut_table(self) -> list[int]:
        """``cut_weight`` for every subset bitmask; size ``2**n``."""
        n = self._n
        if n > 22:
            raise InvalidArgument(f"cut table for n={n} would need 2**{n} entries")
        deg = [self.degree(u) for u in range(n)]
        table = [0] * (1 << n)
        for mask in range(1, 1 << n):
            low = mask & -mask
            v = low.bit_length() - 1
            rest = mask ^ low
            inside = 0
            for w, k in self._adj[v].items():
                if (rest >> w) & 1:
                    inside += k
            table[mask] = table[rest] + deg[v] - 2 * inside
        return table

    # -- equality ------------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Multigraph):
            return NotImplemented
        return self._n == other._n and self._mult == other._mult

    def __hash__(self) -> int:
        return hash((self._n, tuple(self._mult.items())))

    def __repr__(self) -> str:
        return f"Multigraph(n={self._n}, pairs={len(self._mult)}, m={self._edge_total})"


@dataclass(frozen=True)
class VertexPartition:
    blocks: tuple[frozenset[int], ...]

    def __post_init__(self) -> None:
        seen: set[int] = set()
        for b in self.blocks:
            if not b:
                raise InvalidArgument("empty block in partition")
            if seen & b:
                raise InvalidArgument("partition blocks overlap")
            seen |= b

    @classmethod
    def of(cls, blocks: Iterable[Iterable[int]]) -> "VertexPartition":
        return cls(tuple(frozenset(b) for b in blocks))

    def covers(self, n: int) -> bool:
        return set().union(*self.blocks) == set(range(n)) if self.blocks else n == 0

    def is_clique_cover(self, g: Multigraph) -> bool:
        return self.covers(g.n) and all(g.is_clique(b) for b in self.blocks)

    def sizes(self) -> list[int]:
        return [len(b) for b in self.blocks]

    def as_lists(self) -> list[list[int]]:
        return [sorted(b) for b in self.blocks]


# -- constructors -------------------------------------------------------------


def empty_graph(n: int) -> Multigraph:
    return Multigraph(n)


def complete_graph(n: int, multiplicity: int = 1) -> Multigraph:
    if n < 1:
        raise InvalidArgument("complete_graph needs n >= 1")
    if multiplicity < 1:
        raise InvalidArgument("multiplicity must be positive")
    return Multigraph(n, {p: multiplicity for p in combinations(range(n), 2)})


def from_pairs(n: int, pairs: Iterable[Sequence[int]]) -> Multigraph:
    """Build a graph from ``(u, v)`` or ``(u, v, mult)`` tuples; repeats accumulate."""
    mult: dict[Pair, int] = {}
    for p in pairs:
        u, v = int(p[0]), int(p[1])
        k = int(p[2]) if len(p) > 2 else 1
        if u == v:
            raise InvalidArgument(f"self-loop at vertex {u}")
        key = _norm(u, v)
        mult[key] = mult.get(key, 0) + k
    return Multigraph(n, mult)


def path_graph(n: int) -> Multigraph:
    return from_pairs(n, ((i, i + 1) for i in range(n - 1)))


def cycle_graph(n: int) -> Multigraph:
    if n < 3:
        raise InvalidArgument("cycle needs n >= 3")
    return from_pairs(n, ((i, (i + 1) % n) for i in range(n)))


def star_graph(leaves: int) -> Multigraph:
    """K_{1,leaves} with the center at vertex 0."""
    return from_pairs(leaves + 1, ((0, i) for i in range(1, leaves + 1)))


def hypercube_graph(d: int) -> Multigraph:
    n = 1 << d
    return from_pairs(n, ((u, u ^ (1 << b)) for u in range(n) for b in range(d) if u < u ^ (1 << b)))


def complete_minus_matching(n: int) -> Multigraph:
    """K_n without the perfect matching {0,1},{2,3},..."""
    if n % 2:
        raise InvalidArgument("perfect matching needs even n")
    return from_pairs(n, (p for p in combinations(range(n), 2) if not (p[0] % 2 == 0 and p[1] == p[0] + 1)))


def complement(g: Multigraph) -> Multigraph:
    if not g.is_simple():
        raise InvalidArgument("complement is only defined for simple graphs")
    return Multigraph(g.n, {p: 1 for p in combinations(range(g.n), 2) if not g.has_edge(*p)})


def edge_disjoint_union(g1: Multigraph, g2: Multigraph) -> Multigraph:
    """Same vertex set; multiplicities add."""
    if g1.n != g2.n:
        raise InvalidArgument(f"vertex counts differ: {g1.n} vs {g2.n}")
    mult = dict(g1.pairs())
    for p, k in g2.pairs():
        mult[p] = mult.get(p, 0) + k
    return Multigraph(g1.n, mult)


def scaled(g: Multigraph, c: int) -> Multigraph:
    if c < 1:
        raise InvalidArgument("scale factor must be positive")
    return Multigraph(g.n, {p: k * c for p, k in g.pairs()})


def disjoint_sum(g1: Multigraph, g2: Multigraph) -> Multigraph:
    """Vertex-disjoint union; ``g2``'s vertices are shifted by ``g1.n``."""
    mult = dict(g1.pairs())
    for (u, v), k in g2.pairs():
        mult[(u + g1.n, v + g1.n)] = k
    return Multigraph(g1.n + g2.n, mult)


# -- text format ----------------------------------------------------------------


def _content_lines(text: str) -> Iterator[tuple[int, list[str]]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0].strip()
        if body:
            yield lineno, body.split()


def read_graph(text: str, source: str | None = None) -> Multigraph:
    """Parse the ``n m_pairs`` / ``u v [mult]`` format."""
    lines = _content_lines(text)
    try:
        lineno, head = next(lines)
    except StopIteration:
        raise ParseError("empty graph file", None, source) from None
    if len(head) != 2:
        raise ParseError("header must be 'n m_pairs'", lineno, source)
    try:
        n, m_pairs = int(head[0]), int(head[1])
    except ValueError:
        raise ParseError("header must hold two integers", lineno, source) from None
    if n < 0 or m_pairs < 0:
        raise ParseError("negative count in header", lineno, source)
    mult: dict[Pair, int] = {}
    count = 0
    for lineno, parts in lines:
        if len(parts) not in (2, 3):
            raise ParseError("pair line must be 'u v [mult]'", lineno, source)
        try:
            u, v = int(parts[0]), int(parts[1])
            k = int(parts[2]) if len(parts) == 3 else 1
        except ValueError:
            raise ParseError("non-integer field", lineno, source) from None
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"vertex index out of range for n={n}", lineno, source)
        if u == v:
            raise ParseError("self-loop", lineno, source)
        if k <= 0:
            raise ParseError("multiplicity must be positive", lineno, source)
        key = _norm(u, v)
        if key in mult:
            raise ParseError(f"duplicate pair {key}", lineno, source)
        mult[key] = k
        count += 1
    if count != m_pairs:
        raise ParseError(f"header announces {m_pairs} pairs, found {count}", None, source)
    return Multigraph(n, mult)


def write_graph(g: Multigraph) -> str:
    out = [f"{g.n} {g.pair_count}"]
    for (u, v), k in g.pairs():
        out.append(f"{u} {v}" if k == 1 else f"{u} {v} {k}")
    return "\n".join(out) + "\n"
