"""Named small graphs shipped with the package so checks need no external data."""

from __future__ import annotations

from typing import Callable

from .errors import InvalidArgument
from .graph import (
    Multigraph,
    complete_graph,
    complete_minus_matching,
    cycle_graph,
    disjoint_sum,
    edge_disjoint_union,
    from_pairs,
    hypercube_graph,
    path_graph,
    star_graph,
)


def two_k4_joined() -> Multigraph:
    """Two disjoint K_4 on {0..3} and {4..7} joined by the edges 0-4 and 3-7."""
    g = disjoint_sum(complete_graph(4), complete_graph(4))
    return edge_disjoint_union(g, from_pairs(8, [(0, 4), (3, 7)]))


_BUILDERS: dict[str, Callable[[], Multigraph]] = {}
for _n in range(2, 10):
    _BUILDERS[f"P{_n}"] = lambda n=_n: path_graph(n)
    _BUILDERS[f"K{_n}"] = lambda n=_n: complete_graph(n)
for _n in range(3, 10):
    _BUILDERS[f"C{_n}"] = lambda n=_n: cycle_graph(n)
for _k in range(2, 8):
    _BUILDERS[f"S{_k}"] = lambda k=_k: star_graph(k)
for _n in (4, 6, 8):
    _BUILDERS[f"K{_n}-M"] = lambda n=_n: complete_minus_matching(n)
_BUILDERS["Q3"] = lambda: hypercube_graph(3)
_BUILDERS["2K4+2"] = two_k4_joined

# n = 8 instances for the 4-clique reduction, with the expected answer
CLIQUE4_CORPUS: dict[str, bool] = {
    "C8": True,
    "S7": False,
    "K8": True,
    "K8-M": True,
    "2K4+2": True,
    "Q3": True,
}


def names() -> list[str]:
    return sorted(_BUILDERS)


def get(name: str) -> Multigraph:
    """Build a named graph: ``P<n>``, ``C<n>``, ``K<n>``, ``S<k>`` (star with k leaves), ``K<n>-M``, ``Q3``, ``2K4+2``."""
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise InvalidArgument(f"unknown corpus graph {name!r}; known: {', '.join(names())}") from None


def small(max_n: int) -> dict[str, Multigraph]:
    """Every corpus graph with at most ``max_n`` vertices."""
    out = {}
    for name in names():
        g = get(name)
        if g.n <= max_n:
            out[name] = g
    return out
