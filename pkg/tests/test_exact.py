import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import multigraphs
from oracle import (
    brute_clique_cover,
    brute_min_rooted,
    brute_min_unrooted,
    compatible_split_families,
    complete_pairs,
    min_nontrivial_cut,
)
from treelength.canonical import FamilyParams, build_family_member
from treelength.errors import InvalidArgument, SizeGuardError
from treelength.exact import (
    EnumerationSpec,
    count_trees,
    double_factorial,
    enumerate_shapes,
    enumerate_trees,
    equal_cover_sizes,
    expected_count,
    sigma_ll_via_complete,
    solve_clique_cover,
    solve_min_sigma_ll,
    solve_min_tree_length,
    verify_congested,
)
from treelength.graph import complete_graph, cycle_graph, empty_graph, from_pairs, star_graph
from treelength.measures import alpha_beta, sigma_ll, tree_length
from treelength.trees import Layout, RootedBinaryTree, canonical_form, splits

# values below were computed by the brute-force oracle in tests/oracle.py and frozen
MIN_SIGMA_LL = {3: 6, 4: 16, 5: 32, 6: 54, 7: 84, 8: 120, 9: 166, 10: 218}
UNROOTED_SHAPES = {3: 1, 4: 1, 5: 1, 6: 2, 7: 2, 8: 4, 9: 6, 10: 11}
ROOTED_SHAPES = {1: 1, 2: 1, 3: 1, 4: 2, 5: 3, 6: 6, 7: 11, 8: 23}
ROUTING_COUNTS = {3: 1, 4: 4, 5: 26, 6: 236, 7: 2752}
ROUTING_N6_BY_DELTA = {3: 105, 4: 220, 5: 235, 6: 236}


def pairs_of(g):
    return dict(g.pairs())


def test_spec_validation_and_aliases():
    assert EnumerationSpec(4, "unrooted-deg3").mode == "unrooted"
    assert EnumerationSpec(4, "rooted-binary").mode == "rooted"
    assert EnumerationSpec(4, "routing-maxdeg", delta=4).mode == "routing"
    for bad in (dict(leaf_count=4, mode="nope"), dict(leaf_count=1), dict(leaf_count=4, delta=4),
                dict(leaf_count=4, mode="routing", delta=2), dict(leaf_count=4, parallel_shards=0)):
        with pytest.raises(InvalidArgument):
            EnumerationSpec(**bad)
    assert EnumerationSpec(1, "rooted").leaf_count == 1


@pytest.mark.parametrize("mode, soft, hard", [("unrooted", 10, 12), ("rooted", 9, 10), ("routing", 8, 9)])
def test_size_guards(mode, soft, hard):
    EnumerationSpec(soft, mode).check_guard()
    with pytest.raises(SizeGuardError):
        EnumerationSpec(soft + 1, mode).check_guard()
    EnumerationSpec(hard, mode, allow_large=True).check_guard()
    with pytest.raises(SizeGuardError):
        EnumerationSpec(hard + 1, mode, allow_large=True).check_guard()


def test_solver_refuses_guarded_sizes_and_mismatch():
    with pytest.raises(SizeGuardError):
        solve_min_tree_length(complete_graph(10), EnumerationSpec(10, "rooted"))
    with pytest.raises(InvalidArgument):
        solve_min_tree_length(complete_graph(5), EnumerationSpec(4))


def test_double_factorial():
    assert [double_factorial(k) for k in range(-1, 8)] == [1, 1, 1, 2, 3, 8, 15, 48, 105]


@pytest.mark.parametrize("n", range(2, 10))
def test_counts_match_double_factorials(n):
    assert count_trees(EnumerationSpec(n)) == expected_count(n, "unrooted")
    assert count_trees(EnumerationSpec(n, "rooted")) == expected_count(n, "rooted")


@pytest.mark.slow
def test_unrooted_count_at_soft_guard():
    assert count_trees(EnumerationSpec(10)) == 2027025 == double_factorial(15)


@pytest.mark.parametrize("n", range(3, 7))
def test_routing_counts_match_split_families(n):
    assert count_trees(EnumerationSpec(n, "routing", delta=n)) == compatible_split_families(n) == ROUTING_COUNTS[n]


def test_routing_count_seven_and_degree_bounds():
    assert count_trees(EnumerationSpec(7, "routing", delta=7)) == ROUTING_COUNTS[7]
    for delta, want in ROUTING_N6_BY_DELTA.items():
        assert count_trees(EnumerationSpec(6, "routing", delta=delta)) == want


@pytest.mark.parametrize("mode, n", [("unrooted", 6), ("rooted", 5), ("routing", 5)])
def test_enumeration_has_no_duplicates(mode, n):
    spec = EnumerationSpec(n, mode, delta=4 if mode == "routing" else 3)
    seen = set()
    for t in enumerate_trees(spec):
        if isinstance(t, RootedBinaryTree):
            key = frozenset(t.leaf_sets())
        else:
            key = frozenset(splits(t))
            assert max(len(a) for a in t.tree.adj) <= spec.delta
        assert key not in seen
        seen.add(key)
    assert len(seen) == count_trees(spec)


@pytest.mark.parametrize("mode, n", [("unrooted", 9), ("rooted", 8), ("routing", 6)])
def test_sharding_matches_single_process(mode, n):
    g = cycle_graph(n)
    kw = dict(delta=4) if mode == "routing" else {}
    one = solve_min_tree_length(g, EnumerationSpec(n, mode, **kw))
    many = solve_min_tree_length(g, EnumerationSpec(n, mode, parallel_shards=3, **kw))
    assert (one.best_value, one.optimal_count, one.trees_evaluated) == (many.best_value, many.optimal_count, many.trees_evaluated)
    assert one.witness_keys == many.witness_keys


def test_spot_values():
    k4 = complete_graph(4)
    assert solve_min_tree_length(k4, EnumerationSpec(4)).best_value == 16
    assert solve_min_tree_length(k4, EnumerationSpec(4, "rooted")).best_value == 19
    assert solve_min_tree_length(k4, EnumerationSpec(4, "routing", delta=4)).best_value == 12
    c8 = solve_min_tree_length(cycle_graph(8), EnumerationSpec(8))
    assert (c8.best_value, c8.optimal_count) == (26, 132)
    k8 = solve_min_tree_length(complete_graph(8), EnumerationSpec(8))
    assert (k8.best_value, k8.optimal_count) == (120, 315)
    assert solve_min_tree_length(complete_graph(8), EnumerationSpec(8, "rooted")).best_value == 127


def test_witnesses_realise_the_optimum():
    g = cycle_graph(7)
    sol = solve_min_tree_length(g, EnumerationSpec(7))
    assert sol.witnesses and len(sol.witnesses) <= min(100, sol.optimal_count)
    assert all(tree_length(w, g) == sol.best_value for w in sol.witnesses)
    rooted = solve_min_tree_length(g, EnumerationSpec(7, "rooted"))
    assert all(alpha_beta(w, g)[1] == rooted.best_value for w in rooted.witnesses)
    capped = solve_min_tree_length(g, EnumerationSpec(7), witness_limit=3)
    assert capped.witness_keys == sol.witness_keys[:3]


def test_empty_graph_has_zero_optimum():
    sol = solve_min_tree_length(empty_graph(5), EnumerationSpec(5))
    assert sol.best_value == 0 and sol.optimal_count == sol.trees_evaluated == 15


@settings(max_examples=25)
@given(multigraphs(min_n=3, max_n=7))
def test_unrooted_optimum_matches_oracle(g):
    best, count = brute_min_unrooted(g.n, pairs_of(g))
    sol = solve_min_tree_length(g, EnumerationSpec(g.n))
    assert (sol.best_value, sol.optimal_count) == (best, count)


@settings(max_examples=25)
@given(multigraphs(min_n=1, max_n=7))
def test_rooted_optimum_matches_oracle(g):
    best, count = brute_min_rooted(g.n, pairs_of(g))
    sol = solve_min_tree_length(g, EnumerationSpec(g.n, "rooted"))
    assert (sol.best_value, sol.optimal_count) == (best, count)


@settings(max_examples=20)
@given(multigraphs(min_n=2, max_n=6))
def test_rooted_never_beats_unrooted_and_routing_never_loses(g):
    u = solve_min_tree_length(g, EnumerationSpec(g.n)).best_value
    r = solve_min_tree_length(g, EnumerationSpec(g.n, "rooted")).best_value
    assert r >= u
    if g.n >= 3:
        assert solve_min_tree_length(g, EnumerationSpec(g.n, "routing", delta=4)).best_value <= u


@settings(max_examples=30)
@given(multigraphs(min_n=2, max_n=7))
def test_verify_congested_matches_cut_oracle(g):
    assert verify_congested(g) == (min_nontrivial_cut(g.n, pairs_of(g)) >= g.min_degree())


def test_verify_congested_examples():
    assert verify_congested(complete_graph(5))
    assert not verify_congested(from_pairs(4, [(0, 1, 3), (2, 3, 3), (1, 2)]))
    with pytest.raises(InvalidArgument):
        verify_congested(complete_graph(4), EnumerationSpec(4, "routing", delta=4))


@pytest.mark.parametrize("n", range(3, 11))
def test_min_sigma_ll_and_shape_counts(n):
    sol = solve_min_sigma_ll(n, EnumerationSpec(n, allow_large=True))
    assert sol.best_value == MIN_SIGMA_LL[n]
    assert sol.trees_evaluated == UNROOTED_SHAPES[n]
    member, _ = build_family_member(FamilyParams(3, 3, 2 * n - 1), contract=True)
    assert [canonical_form(w) for w in sol.witnesses] == [canonical_form(member)]


@pytest.mark.parametrize("n", range(3, 8))
def test_min_sigma_ll_matches_labelled_oracle(n):
    assert brute_min_unrooted(n, complete_pairs(n))[0] == MIN_SIGMA_LL[n]
    assert sigma_ll_via_complete(n).best_value == MIN_SIGMA_LL[n]


@pytest.mark.parametrize("n", range(1, 9))
def test_rooted_shape_counts(n):
    assert len(enumerate_shapes(n, "rooted")) == ROOTED_SHAPES[n]


def test_shapes_are_pairwise_non_isomorphic():
    shapes = enumerate_shapes(9)
    assert len({canonical_form(t) for t in shapes}) == len(shapes)
    assert all(sigma_ll(t) >= MIN_SIGMA_LL[9] for t in shapes)


def test_clique_cover_examples():
    part = solve_clique_cover(cycle_graph(8), equal_cover_sizes(8, 4))
    assert part is not None and part.is_clique_cover(cycle_graph(8))
    assert solve_clique_cover(star_graph(7), equal_cover_sizes(8, 4)) is None
    assert solve_clique_cover(complete_graph(6), [3, 3]) is not None
    assert solve_clique_cover(cycle_graph(6), [3, 3]) is None
    with pytest.raises(InvalidArgument):
        solve_clique_cover(complete_graph(6), [4, 3])
    with pytest.raises(InvalidArgument):
        equal_cover_sizes(7, 2)


@given(multigraphs(min_n=2, max_n=9, simple=True), st.data())
def test_clique_cover_matches_brute_force(g, data):
    sizes = []
    left = g.n
    while left:
        s = data.draw(st.integers(1, min(4, left)))
        sizes.append(s)
        left -= s
    part = solve_clique_cover(g, sizes)
    expect = brute_clique_cover({p for p, _ in g.pairs()}, g.n, sizes)
    assert (part is not None) == expect
    if part is not None:
        assert part.is_clique_cover(g)
        assert sorted(len(b) for b in part.blocks) == sorted(sizes)


def test_witness_layout_type():
    sol = solve_min_tree_length(complete_graph(4), EnumerationSpec(4))
    assert all(isinstance(w, Layout) for w in sol.witnesses)
