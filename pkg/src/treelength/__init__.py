"""Tree length of graphs embedded in trees: measures, exact and heuristic solvers, hardness gadgets."""

from .canonical import FamilyParams, build_family_member, capacity, central_nodes, is_family_member
from .errors import InvalidArgument, ParseError, ReductionSoundnessError, SizeGuardError
from .exact import (
    EnumerationSpec,
    ExactSolution,
    enumerate_trees,
    solve_clique_cover,
    solve_min_sigma_ll,
    solve_min_tree_length,
    verify_congested,
)
from .graph import Multigraph, VertexPartition, complete_graph, read_graph, write_graph
from .measures import congestions, dilations, measure_report, path_length, sigma_ll, tree_length, wiener
from .search import SearchConfig, initial_layout, local_search
from .trees import Layout, LeafTree, RootedBinaryTree, Tree, canonical_form

__all__ = [
    "EnumerationSpec",
    "ExactSolution",
    "FamilyParams",
    "InvalidArgument",
    "Layout",
    "LeafTree",
    "Multigraph",
    "ParseError",
    "ReductionSoundnessError",
    "RootedBinaryTree",
    "SearchConfig",
    "SizeGuardError",
    "Tree",
    "VertexPartition",
    "build_family_member",
    "canonical_form",
    "capacity",
    "central_nodes",
    "complete_graph",
    "congestions",
    "dilations",
    "enumerate_trees",
    "initial_layout",
    "is_family_member",
    "local_search",
    "measure_report",
    "path_length",
    "read_graph",
    "sigma_ll",
    "solve_clique_cover",
    "solve_min_sigma_ll",
    "solve_min_tree_length",
    "tree_length",
    "verify_congested",
    "wiener",
    "write_graph",
]
