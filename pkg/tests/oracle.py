"""Independent brute-force references for the test-suite.

Nothing here imports the enumeration or measure code under test. Trees are
generated by recursive set splitting rather than leaf insertion, and scored
by explicit pairwise leaf distances.
"""

from __future__ import annotations

from functools import lru_cache
from itertools import combinations

import networkx as nx


def rooted_shapes(leaves: tuple[int, ...]):
    """All rooted binary trees over ``leaves`` as nested pairs, each exactly once."""
    if len(leaves) == 1:
        yield leaves[0]
        return
    first, rest = leaves[0], leaves[1:]
    # the side holding ``first`` is chosen as a subset; the other side must be non-empty
    for r in range(len(rest)):
        for extra in combinations(rest, r):
            left = (first,) + extra
            right = tuple(x for x in rest if x not in extra)
            for a in rooted_shapes(left):
                for b in rooted_shapes(right):
                    yield (a, b)


def unrooted_shapes(n: int):
    """Unrooted degree-3 trees on leaves ``0..n-1``: leaf 0 hangs above a rooted tree on the rest."""
    if n == 2:
        yield (0, 1)
        return
    for t in rooted_shapes(tuple(range(1, n))):
        yield (0, t)


def leaf_paths(nested, prefix=()):
    """Map leaf -> tuple of branch choices from the root."""
    if isinstance(nested, int):
        return {nested: prefix}
    out = {}
    for i, child in enumerate(nested):
        out.update(leaf_paths(child, prefix + (i,)))
    return out


def nested_distance(paths, a: int, b: int) -> int:
    pa, pb = paths[a], paths[b]
    common = 0
    while common < min(len(pa), len(pb)) and pa[common] == pb[common]:
        common += 1
    return len(pa) + len(pb) - 2 * common


def unrooted_distance(paths, a: int, b: int) -> int:
    # in ``(0, t)`` leaf 0 hangs off a degree-2 root; in the unrooted tree it
    # attaches straight to t's root, one step closer to everything
    d = nested_distance(paths, a, b)
    return d - 1 if 0 in (a, b) else d


def weighted_sum(nested, pairs: dict[tuple[int, int], int], rooted: bool = True) -> int:
    paths = leaf_paths(nested)
    dist = nested_distance if rooted else unrooted_distance
    return sum(k * dist(paths, u, v) for (u, v), k in pairs.items())


def brute_min_unrooted(n: int, pairs: dict[tuple[int, int], int]) -> tuple[int, int]:
    """(minimum, number of optimal trees)."""
    vals = [weighted_sum(t, pairs, rooted=False) for t in unrooted_shapes(n)]
    best = min(vals)
    return best, vals.count(best)


def brute_min_rooted(n: int, pairs: dict[tuple[int, int], int]) -> tuple[int, int]:
    if n == 1:
        return 0, 1
    vals = [weighted_sum(t, pairs) for t in rooted_shapes(tuple(range(n)))]
    best = min(vals)
    return best, vals.count(best)


def complete_pairs(n: int, k: int = 1) -> dict[tuple[int, int], int]:
    return {p: k for p in combinations(range(n), 2)}


def nx_path_sum(edges, phi, pairs) -> int:
    """Tree length via networkx shortest paths on an explicit tree."""
    t = nx.Graph()
    t.add_edges_from(edges)
    total = 0
    for (u, v), k in pairs.items():
        total += k * nx.shortest_path_length(t, phi[u], phi[v])
    return total


@lru_cache(maxsize=None)
def compatible_split_families(n: int) -> int:
    """Number of unrooted trees with n labelled leaves and internal degree >= 3.

    Counts sets of pairwise compatible nontrivial splits (one tree each).
    """
    full = (1 << n) - 1
    splits = []
    for mask in range(1, full):
        if mask & 1:
            continue  # normalise: side without leaf 0
        size = bin(mask).count("1")
        if 2 <= size <= n - 2:
            splits.append(mask)

    def compatible(a: int, b: int) -> bool:
        ca, cb = full ^ a, full ^ b
        return not (a & b) or not (a & cb) or not (ca & b) or not (ca & cb)

    count = 0

    def grow(start: int, chosen: list[int]) -> None:
        nonlocal count
        count += 1
        for i in range(start, len(splits)):
            s = splits[i]
            if all(compatible(s, c) for c in chosen):
                chosen.append(s)
                grow(i + 1, chosen)
                chosen.pop()

    grow(0, [])
    return count


def brute_clique_cover(adj: set[tuple[int, int]], n: int, sizes: list[int]) -> bool:
    """Whether some assignment of vertices to blocks of the given sizes makes every block a clique."""

    def edge(u, v):
        return (min(u, v), max(u, v)) in adj

    def assign(v: int, blocks: list[list[int]]) -> bool:
        if v == n:
            return all(len(b) == s for b, s in zip(blocks, sizes))
        for b, s in zip(blocks, sizes):
            if len(b) < s and all(edge(v, u) for u in b):
                b.append(v)
                if assign(v + 1, blocks):
                    return True
                b.pop()
        return False

    return assign(0, [[] for _ in sizes])


def min_nontrivial_cut(n: int, pairs: dict[tuple[int, int], int]) -> int:
    best = None
    for mask in range(1, (1 << n) - 1):
        c = sum(k for (u, v), k in pairs.items() if (mask >> u & 1) != (mask >> v & 1))
        best = c if best is None else min(best, c)
    return best
