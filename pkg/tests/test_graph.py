import pytest

from cliquetrees.errors import InvalidArgumentError
from cliquetrees.graph import (
    Graph,
    closed_neighborhood,
    components_after_removal,
    connected_components,
    induced_subgraph,
    is_clique,
    is_connected,
    open_neighborhood,
    set_neighborhood,
)

from conftest import PATH3, STAR, graph


def test_adjacency_is_symmetric_and_loop_free():
    g = graph((1, 2), (2, 3), (3, 1), (3, 4))
    for v in g.vertices:
        assert v not in g.adj(v)
        for w in g.adj(v):
            assert v in g.adj(w)
            assert w in g.vertices


def test_duplicate_and_reversed_edges_collapse():
    g = graph((1, 2), (2, 1), (1, 2))
    assert g.edges == ((1, 2),)


def test_self_loop_rejected():
    with pytest.raises(InvalidArgumentError):
        graph((1, 1))


def test_negative_vertex_rejected():
    with pytest.raises(InvalidArgumentError):
        Graph([-1])


def test_graph_is_hashable_value():
    assert graph((1, 2)) == graph((2, 1))
    assert len({graph((1, 2)), graph((2, 1))}) == 1


def test_induced_subgraph_examples():
    assert induced_subgraph(PATH3, {1, 2}) == graph((1, 2))
    assert induced_subgraph(STAR, STAR.vertices) == STAR
    tri = graph((1, 2), (2, 3), (1, 3))
    assert induced_subgraph(tri, {1, 3}).edges == ((1, 3),)


def test_induced_subgraph_unknown_vertex():
    with pytest.raises(InvalidArgumentError):
        induced_subgraph(PATH3, {1, 9})


def test_connected_components():
    assert connected_components(Graph([1, 2, 3])) == [(1,), (2,), (3,)]
    assert connected_components(PATH3) == [(1, 2, 3)]
    assert components_after_removal(STAR, {1}) == [(2,), (3,), (4,)]
    assert is_connected(PATH3)
    assert not is_connected(Graph([1, 2]))


def test_neighborhoods():
    g = graph((1, 2), (1, 3))
    assert open_neighborhood(g, 1) == (2, 3)
    assert closed_neighborhood(g, 1) == (1, 2, 3)
    lone = Graph([7])
    assert open_neighborhood(lone, 7) == ()
    assert closed_neighborhood(lone, 7) == (7,)
    assert open_neighborhood(PATH3, 2) == (1, 3)
    with pytest.raises(InvalidArgumentError):
        open_neighborhood(g, 42)


def test_set_neighborhood():
    p4 = graph((1, 2), (2, 3), (3, 4))
    assert set_neighborhood(p4, {2, 3}) == (1, 4)
    assert set_neighborhood(p4, p4.vertices) == ()
    assert set_neighborhood(graph((1, 2), (1, 3)), {1}) == (2, 3)


def test_is_clique():
    assert is_clique(PATH3, ())
    assert is_clique(PATH3, (2,))
    assert not is_clique(PATH3, (1, 3))
    assert is_clique(graph((1, 2), (2, 3), (1, 3)), (1, 2, 3))
