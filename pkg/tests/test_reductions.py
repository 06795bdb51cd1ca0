import json

import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from conftest import multigraphs
from oracle import brute_min_rooted, brute_min_unrooted
from treelength import corpus
from treelength.errors import InvalidArgument, ReductionSoundnessError
from treelength.exact import EnumerationSpec, solve_clique_cover, solve_min_tree_length
from treelength.graph import Multigraph, complete_graph, cycle_graph, path_graph
from treelength.reductions import (
    ReductionArtifact,
    add_isolated,
    add_pendant,
    balanced_depth_sum,
    budget_separation,
    check_artifact,
    expected_subdivided_optimum,
    extract_clique4_answer,
    hanging_subtree_length,
    isolated_under_root,
    pad_to_k_power,
    pendant_optimum,
    pendant_shares_neighbor,
    reduce_clique4_multigraph,
    reduce_cliquek_routing,
    subdivide_all_edges,
    subdivision_structure,
    uniform_multiplicity,
)

# sweeps over all 10395 layouts of each reduced instance, frozen from the exhaustive run
BUDGET = {"C8": (112, 44), "S7": (98, 34), "K8": (392, 126), "K8-M": (336, 116)}


def test_clique4_construction():
    art = reduce_clique4_multigraph(cycle_graph(8))
    assert art.bookkeeping == {"M": 8 * 14, "l": 3}
    assert art.output_graph.multiplicity(0, 1) == 113
    assert art.output_graph.multiplicity(0, 2) == 112
    for bad in (cycle_graph(6), complete_graph(4, 2), Multigraph(4, {})):
        with pytest.raises(InvalidArgument):
            reduce_clique4_multigraph(bad)


def test_artifact_contract_rejects_tampering():
    art = reduce_clique4_multigraph(cycle_graph(4))
    with pytest.raises(ReductionSoundnessError):
        ReductionArtifact(art.kind, art.input_graph, art.output_graph, {"M": art.bookkeeping["M"] + 1})
    with pytest.raises(InvalidArgument):
        ReductionArtifact("nope", art.input_graph, art.output_graph, {})


@pytest.mark.parametrize("make", [
    lambda: reduce_clique4_multigraph(cycle_graph(8)),
    lambda: subdivide_all_edges(complete_graph(3, 2)),
    lambda: add_pendant(complete_graph(4), 2),
    lambda: add_isolated(cycle_graph(5)),
    lambda: pad_to_k_power(cycle_graph(6), 3),
    lambda: reduce_cliquek_routing(corpus.get("K6-M"), 3),
])
def test_artifact_json_round_trip(make):
    art = make()
    back = ReductionArtifact.from_dict(json.loads(art.to_json()))
    assert back.kind == art.kind and back.output_graph == art.output_graph
    assert back.input_graph == art.input_graph
    assert json.loads(back.to_json()) == json.loads(art.to_json())


@pytest.mark.parametrize("name, expect", list(corpus.CLIQUE4_CORPUS.items()))
def test_clique4_reduction_agrees_with_cover_solver(name, expect):
    res = check_artifact(reduce_clique4_multigraph(corpus.get(name)))
    assert res["pass"]
    assert (res["extracted"] is not None) == expect


def test_extracted_cover_is_valid():
    g = corpus.get("K8-M")
    art = reduce_clique4_multigraph(g)
    sol = solve_min_tree_length(art.output_graph, EnumerationSpec(8))
    part = extract_clique4_answer(art, sol)
    assert part is not None and part.is_clique_cover(g)
    assert sorted(len(b) for b in part.blocks) == [2, 2, 2, 2]


@pytest.mark.parametrize("name", list(BUDGET))
def test_budget_separation(name):
    res = budget_separation(reduce_clique4_multigraph(corpus.get(name)))
    assert (res["M"], res["max_original"]) == BUDGET[name]
    assert res["max_original"] < res["M"]
    assert res["non_family_at_min"] == 0
    assert res["min_sigma"] == 120


def test_subdivision_construction():
    g = complete_graph(3, 2)
    art = subdivide_all_edges(g)
    out = art.output_graph
    assert out.n == 3 + 6 and out.is_simple() and out.m == 12
    assert sorted(art.bookkeeping["subdivision"].values()) == [(0, 1), (0, 1), (0, 2), (0, 2), (1, 2), (1, 2)]
    assert uniform_multiplicity(g) == 2
    assert uniform_multiplicity(path_graph(3)) is None


def test_subdivision_formula_helpers():
    assert [balanced_depth_sum(t) for t in range(1, 6)] == [0, 2, 5, 8, 12]
    assert hanging_subtree_length(1) == 2
    assert hanging_subtree_length(2) == 8
    with pytest.raises(InvalidArgument):
        hanging_subtree_length(0)
    assert expected_subdivided_optimum(12, complete_graph(3, 2)) == 48
    assert expected_subdivided_optimum(2, complete_graph(2, 2)) == 10
    with pytest.raises(InvalidArgument):
        expected_subdivided_optimum(18, complete_graph(3, 3))


def test_subdivided_k2_exhaustive():
    g = complete_graph(2, 2)
    art = subdivide_all_edges(g)
    sol = solve_min_tree_length(art.output_graph, EnumerationSpec(4))
    assert (sol.best_value, sol.optimal_count) == (10, 2)
    assert brute_min_unrooted(4, dict(art.output_graph.pairs())) == (10, 2)


@pytest.mark.slow
def test_subdivided_k3_exhaustive():
    art = subdivide_all_edges(complete_graph(3, 2))
    res = check_artifact(art)
    assert res["pass"] and res["optimum"] == res["predicted"] == 48
    assert res["witnesses"] == 4014


def test_subdivision_structure_on_a_witness():
    art = subdivide_all_edges(complete_graph(2, 2))
    sol = solve_min_tree_length(art.output_graph, EnumerationSpec(4))
    for w in sol.witnesses:
        s = subdivision_structure(art, w, 2)
        assert s["optimal_base"] and s["external_only"] and s["owned_by_segment"]


@pytest.mark.parametrize("name, base, augmented, count", [("K4", 16, 21, 3), ("K5", 32, 38, 15)])
def test_pendant_on_congested_cliques(name, base, augmented, count):
    g = corpus.get(name)
    art = add_pendant(g, 0)
    sol = solve_min_tree_length(art.output_graph, EnumerationSpec(g.n + 1))
    assert (sol.best_value, sol.optimal_count) == (augmented, count)
    assert pendant_optimum(base, g, 0) == augmented
    assert all(pendant_shares_neighbor(art, w) for w in sol.witnesses)
    assert brute_min_unrooted(g.n + 1, dict(art.output_graph.pairs())) == (augmented, count)


@pytest.mark.parametrize("name, rooted, count", [("K4", 22, 3), ("K5", 39, 15)])
def test_isolated_vertex_under_root(name, rooted, count):
    pend = add_pendant(corpus.get(name), 0).output_graph
    art = add_isolated(pend)
    sol = solve_min_tree_length(art.output_graph, EnumerationSpec(art.output_graph.n, "rooted"))
    assert (sol.best_value, sol.optimal_count) == (rooted, count)
    assert all(isolated_under_root(art, w) for w in sol.witnesses)
    assert brute_min_rooted(art.output_graph.n, dict(art.output_graph.pairs())) == (rooted, count)


@settings(max_examples=15)
@given(multigraphs(min_n=3, max_n=5), st.data())
def test_isolated_lemma_when_min_degree_one(g, data):
    v = data.draw(st.integers(0, g.n - 1))
    pend = add_pendant(g, v)
    # the +1 needs every tree edge to carry traffic, so the graph must be connected
    assume(pend.output_graph.min_degree() == 1 and pend.output_graph.is_connected())
    res = check_artifact(add_isolated(pend.output_graph))
    assert res["min_degree_one"]
    assert res["pass"], res


@settings(max_examples=20)
@given(multigraphs(min_n=3, max_n=6))
def test_pendant_lemma_on_min_degree_anchor(g):
    v = min(range(g.n), key=g.degree)
    res = check_artifact(add_pendant(g, v))
    assert res["pass"], res
    if res["applies"]:
        assert res["augmented"] == res["predicted"] and res["pendant_siblings"]


def test_pendant_rejects_bad_anchor():
    with pytest.raises(InvalidArgument):
        add_pendant(complete_graph(4), 4)


@pytest.mark.parametrize("name", ["C6", "K6-M", "S5", "P6", "C9", "K6"])
def test_padding_preserves_cover_answer(name):
    g = corpus.get(name)
    art = pad_to_k_power(g, 3)
    assert art.bookkeeping["block_size"] == 2 ** art.bookkeeping["l"]
    assert check_artifact(art)["pass"]


@settings(max_examples=25)
@given(multigraphs(min_n=6, max_n=9, simple=True))
def test_padding_preserves_cover_answer_random(g):
    if g.n % 3:
        with pytest.raises(InvalidArgument):
            pad_to_k_power(g, 3)
        return
    art = pad_to_k_power(g, 3)
    k, side = 3, art.bookkeeping["block_size"]
    before = solve_clique_cover(g, [g.n // k] * k) is not None
    assert (solve_clique_cover(art.output_graph, [side] * k) is not None) == before


@pytest.mark.parametrize("name, expect", [("K6-M", True), ("C6", True), ("S5", False), ("P6", True)])
def test_routing_reduction(name, expect):
    res = check_artifact(reduce_cliquek_routing(corpus.get(name), 3))
    assert res["pass"]
    assert (res["oracle"] is not None) == expect


def test_routing_reduction_needs_right_order():
    with pytest.raises(InvalidArgument):
        reduce_cliquek_routing(cycle_graph(7), 3)
    art = reduce_cliquek_routing(complete_graph(3), 3)
    assert art.bookkeeping["l"] == 0
