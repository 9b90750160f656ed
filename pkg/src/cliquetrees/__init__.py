"""Clique trees, perfect sequences and boundary cliques of chordal graphs."""

from .boundary import (
    CliqueClass,
    CliqueClassification,
    boundary_cliques,
    boundary_components_check,
    boundary_pair_check,
    boundary_via_removal,
    boundary_via_separator,
    classify_cliques,
    inclusion_minimal_separators,
    is_boundary_clique,
    strongly_simplicial_cliques,
)
from .chordal import (
    PerfectSequence,
    all_perfect_sequences,
    is_chordal,
    is_perfect_elimination,
    is_perfect_sequence,
    make_sequence,
    maximal_cliques,
    maximum_cardinality_search,
    minimal_separators,
    simp_sep_partition,
    simplicial_vertices,
)
from .clique_tree import (
    CliqueTree,
    all_sequences_from_tree,
    all_trees_from_sequence,
    canonical_clique_tree,
    canonical_perfect_sequence,
    cliques_containing,
    count_clique_trees,
    endpoint_boundary_check,
    endpoint_component_check,
    endpoints,
    enumerate_clique_trees,
    final_clique_check,
    is_arbitrary_tree,
    is_clique_tree,
    is_unique_tree,
    sequence_from_tree,
    tree_from_sequence,
)
from .errors import (
    CliqueTreeError,
    DisconnectedGraphError,
    InvalidArgumentError,
    NotChordalError,
    ResourceLimitError,
    TheoremViolation,
    UnsupportedInputError,
)
from .graph import (
    Graph,
    closed_neighborhood,
    connected_components,
    induced_subgraph,
    is_clique,
    open_neighborhood,
    set_neighborhood,
)
from .io import parse_edge_list, read_edge_list
from .relation import (
    BipartiteGraph,
    WalkState,
    build_bipartite,
    in_relation,
    induced_subtree_restriction,
    is_connected,
    random_walk,
)

__version__ = "0.1.0"
