from itertools import combinations

import networkx as nx
import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import multigraphs
from treelength.errors import InvalidArgument, ParseError
from treelength.graph import (
    Multigraph,
    VertexPartition,
    complement,
    complete_graph,
    complete_minus_matching,
    cycle_graph,
    disjoint_sum,
    edge_disjoint_union,
    empty_graph,
    from_pairs,
    hypercube_graph,
    path_graph,
    read_graph,
    scaled,
    star_graph,
    write_graph,
)


@pytest.mark.parametrize("n, k, pairs, total", [(4, 1, 6, 6), (1, 5, 0, 0), (4, 2, 6, 12), (5, 3, 10, 30)])
def test_complete_graph_counts(n, k, pairs, total):
    g = complete_graph(n, k)
    assert g.pair_count == pairs
    assert g.edge_total == total


def test_complete_graph_rejects_zero():
    with pytest.raises(InvalidArgument):
        complete_graph(0)


def test_multiplicity_is_symmetric_and_zero_when_absent():
    g = from_pairs(3, [(0, 1, 4)])
    assert g.multiplicity(0, 1) == g.multiplicity(1, 0) == 4
    assert g.multiplicity(0, 2) == 0
    assert g.multiplicity(1, 1) == 0
    assert not g.is_simple()


def test_self_loops_rejected():
    with pytest.raises(InvalidArgument):
        Multigraph(3, {(1, 1): 1})
    with pytest.raises(InvalidArgument):
        from_pairs(3, [(2, 2)])


def test_complement_examples():
    assert complement(complete_graph(4)) == empty_graph(4)
    assert complement(empty_graph(3)) == complete_graph(3)
    c5 = cycle_graph(5)
    comp = complement(c5)
    # self-complementary: the complement is again a 5-cycle
    assert nx.is_isomorphic(nx.Graph([p for p, _ in comp.pairs()]), nx.cycle_graph(5))


def test_complement_needs_simple_graph():
    with pytest.raises(InvalidArgument):
        complement(complete_graph(3, 2))


@given(multigraphs(simple=True))
def test_complement_is_involution(g):
    h = complement(g)
    assert h.is_simple() and h.n == g.n
    assert complement(h) == g
    assert g.pair_count + h.pair_count == g.n * (g.n - 1) // 2


@given(multigraphs(max_n=10))
def test_cut_table_matches_direct_cuts(g):
    table = g.cut_table()
    for mask in range(1 << g.n):
        assert table[mask] == g.cut_weight(mask)


@given(multigraphs())
def test_cut_of_single_vertex_is_its_degree(g):
    for v in range(g.n):
        assert g.cut_weight(1 << v) == g.degree(v)


@given(multigraphs(), multigraphs())
def test_edge_disjoint_union_adds_multiplicities(g, h):
    if g.n != h.n:
        with pytest.raises(InvalidArgument):
            edge_disjoint_union(g, h)
        return
    u = edge_disjoint_union(g, h)
    assert u.m == g.m + h.m
    for a, b in combinations(range(g.n), 2):
        assert u.multiplicity(a, b) == g.multiplicity(a, b) + h.multiplicity(a, b)


@given(multigraphs(), st.integers(1, 5))
def test_scaling(g, c):
    assert scaled(g, c).m == c * g.m


def test_disjoint_sum_shifts_second_graph():
    g = disjoint_sum(path_graph(2), path_graph(3))
    assert g.n == 5
    assert sorted(p for p, _ in g.pairs()) == [(0, 1), (2, 3), (3, 4)]
    assert not g.is_connected()


@pytest.mark.parametrize("g, nxg", [
    (path_graph(5), nx.path_graph(5)),
    (cycle_graph(6), nx.cycle_graph(6)),
    (star_graph(4), nx.star_graph(4)),
    (hypercube_graph(3), nx.hypercube_graph(3)),
])
def test_constructors_match_networkx(g, nxg):
    ours = nx.Graph([p for p, _ in g.pairs()])
    assert nx.is_isomorphic(ours, nxg)


def test_complete_minus_matching():
    g = complete_minus_matching(8)
    assert g.m == 28 - 4
    assert all(not g.has_edge(2 * i, 2 * i + 1) for i in range(4))
    with pytest.raises(InvalidArgument):
        complete_minus_matching(5)


@given(multigraphs(min_n=1))
def test_distances_match_networkx(g):
    nxg = nx.Graph()
    nxg.add_nodes_from(range(g.n))
    nxg.add_edges_from(p for p, _ in g.pairs())
    for s in range(g.n):
        want = nx.single_source_shortest_path_length(nxg, s)
        got = g.distances_from(s)
        for v in range(g.n):
            assert got[v] == want.get(v)


# -- text format ---------------------------------------------------------------


@given(multigraphs(min_n=0, max_n=8))
def test_write_read_round_trip(g):
    assert read_graph(write_graph(g)) == g


def test_read_graph_with_comments_and_multiplicity():
    text = "# a triangle\n3 3\n0 1\n1 2 5  # heavy\n\n0 2\n"
    g = read_graph(text)
    assert g.multiplicity(1, 2) == 5
    assert g.m == 7


@pytest.mark.parametrize("text, line", [
    ("3 1\n0 3\n", 2),
    ("3 1\n1 1\n", 2),
    ("3 2\n0 1\n1 0\n", 3),
    ("3 1\n0 1 0\n", 2),
    ("3 1\n0 x\n", 2),
    ("3\n", 1),
])
def test_read_graph_errors_carry_line(text, line):
    with pytest.raises(ParseError) as exc:
        read_graph(text, "g.txt")
    assert exc.value.line == line
    assert "g.txt" in str(exc.value)


def test_read_graph_count_mismatch():
    with pytest.raises(ParseError):
        read_graph("3 2\n0 1\n")
    with pytest.raises(ParseError):
        read_graph("")


# -- partitions ---------------------------------------------------------------------


def test_partition_invariants():
    p = VertexPartition.of([[0, 1], [2, 3]])
    assert p.covers(4)
    assert p.is_clique_cover(cycle_graph(4))
    assert not p.is_clique_cover(from_pairs(4, [(0, 1)]))
    with pytest.raises(InvalidArgument):
        VertexPartition.of([[0, 1], [1, 2]])
    with pytest.raises(InvalidArgument):
        VertexPartition.of([[0], []])
