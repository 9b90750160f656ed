"""Randomized invariants over generated chordal graphs and arbitrary small graphs."""

from collections import Counter
from itertools import combinations

import networkx as nx
from hypothesis import given, settings
from hypothesis import strategies as st

from cliquetrees import boundary as bd
from cliquetrees import clique_tree as ct
from cliquetrees import relation as rel
from cliquetrees.chordal import (
    all_perfect_sequences,
    is_chordal,
    is_perfect_elimination,
    maximal_cliques,
    maximum_cardinality_search,
    minimal_separators,
)
from cliquetrees.generate import METHODS, random_chordal_graph
from cliquetrees.graph import Graph, is_clique

import oracles

chordal_graphs = st.builds(
    random_chordal_graph,
    st.integers(1, 9),
    st.integers(0, 2**32 - 1),
    st.sampled_from(METHODS),
)


@st.composite
def any_graphs(draw, max_n=7):
    n = draw(st.integers(0, max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(range(n), chosen)


@given(any_graphs())
def test_chordality_agrees_with_networkx(g):
    h = nx.Graph()
    h.add_nodes_from(g.vertices)
    h.add_edges_from(g.edges)
    assert is_chordal(g) == nx.is_chordal(h)
    assert is_perfect_elimination(g, maximum_cardinality_search(g)) == is_chordal(g)


@given(chordal_graphs)
def test_cliques_are_maximal_and_cover_edges(g):
    cliques = maximal_cliques(g)
    sets = [set(c) for c in cliques]
    assert all(is_clique(g, c) for c in cliques)
    assert not any(a < b for a in sets for b in sets)
    assert all(any({u, v} <= c for c in sets) for u, v in g.edges)


@given(chordal_graphs)
def test_separator_catalog(g):
    catalog = minimal_separators(g)
    k = len(maximal_cliques(g))
    assert sum(catalog.values()) == k - 1
    assert all(is_clique(g, s) for s in catalog)
    for s, nu in catalog.items():
        assert nu == oracles.multiplicity(g, frozenset(s))


@settings(max_examples=60)
@given(chordal_graphs)
def test_multiplicities_are_sequence_independent(g):
    if len(maximal_cliques(g)) > 6:
        return
    expected = Counter(minimal_separators(g))
    assert all(Counter(s.separators) == expected for s in all_perfect_sequences(g))


@settings(max_examples=60)
@given(chordal_graphs)
def test_count_matches_enumeration(g):
    trees = ct.enumerate_clique_trees(g)
    assert len(trees) == ct.count_clique_trees(g)
    assert len(set(trees)) == len(trees)
    assert all(ct.is_clique_tree(g, t) for t in trees)


@given(chordal_graphs, st.integers(0, 1000))
def test_round_trip_constructions(g, seed):
    t = ct.canonical_clique_tree(g)
    pi = ct.sequence_from_tree(t, seed % t.size, tiebreak=seed)
    assert rel.in_relation(t, pi)
    t2 = ct.tree_from_sequence(pi)
    assert ct.is_clique_tree(g, t2) and rel.in_relation(t2, pi)
    assert oracles.is_junction_tree(list(maximal_cliques(g)), t2.edges)


@given(chordal_graphs)
def test_boundary_tests_agree(g):
    if g.is_complete():
        return
    for i in range(len(maximal_cliques(g))):
        a = bd.is_boundary_clique(g, i)[0]
        assert a == bd.boundary_via_separator(g, i) == bd.boundary_via_removal(g, i)
    assert set(bd.strongly_simplicial_cliques(g)) <= set(bd.boundary_cliques(g))


@given(chordal_graphs)
def test_uniqueness_and_arbitrariness(g):
    conds = ct.uniqueness_conditions(g)
    assert len(set(conds)) == 1 and conds[0] == (ct.count_clique_trees(g) == 1)
    k = len(maximal_cliques(g))
    if k >= 2:
        assert ct.is_arbitrary_tree(g) == (ct.count_clique_trees(g) == k ** (k - 2))


@settings(max_examples=40)
@given(chordal_graphs, st.integers(0, 2**16))
def test_walk_states_are_valid(g, seed):
    rel.random_walk(g, steps=30, seed=seed, validate=True)
