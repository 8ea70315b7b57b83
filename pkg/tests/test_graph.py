import networkx as nx
import numpy as np
import pytest

import config
from core.errors import SizeCapError, VertexRangeError
from core.graph import Graph, named_graph


def path3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])


def test_basic_queries():
    g = path3()
    assert g.order == 3
    assert g.edge_count == 2
    assert g.has_edge(1, 0)
    assert not g.has_edge(0, 2)
    assert g.degree(1) == 2
    assert g.open_neighborhood(1) == frozenset({0, 2})
    assert g.closed_neighborhood(0) == frozenset({0, 1})
    assert list(g.edges()) == [(0, 1), (1, 2)]


def test_invalid_graphs():
    with pytest.raises(ValueError):
        Graph.from_edges(2, [(1, 1)])
    with pytest.raises(VertexRangeError):
        Graph.from_edges(2, [(0, 2)])
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0])
    with pytest.raises(ValueError):
        Graph.from_matrix([[0, 1], [0, 0]])
    with pytest.raises(VertexRangeError):
        path3().degree(3)


def test_size_cap(monkeypatch):
    monkeypatch.setitem(config.GRAPH_CONFIG, "max_order", 4)
    with pytest.raises(SizeCapError):
        Graph.empty(5)


def test_complement_and_complete():
    assert Graph.complete(4).complement() == Graph.empty(4)
    assert Graph.complete(5).edge_count == 10
    assert path3().complement().edge_count == 1


def test_automorphism_check():
    c4 = Graph.from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.is_automorphism((1, 2, 3, 0))
    assert c4.is_automorphism((0, 3, 2, 1))
    assert not c4.is_automorphism((1, 0, 2, 3))
    assert not c4.is_automorphism((0, 0, 1, 2))


def test_structure_predicates():
    two_edges = Graph.from_edges(4, [(0, 2), (1, 3)])
    assert two_edges.components() == [[0, 2], [1, 3]]
    assert not two_edges.is_connected()
    assert two_edges.is_bipartite()
    k4 = Graph.complete(4)
    assert k4.triangle_count() == 4
    assert k4.has_triangle()
    assert not k4.is_bipartite()
    assert k4.is_regular() == 3
    assert path3().is_regular() is None


def test_induced_subgraph_labels():
    sub, labels = Graph.complete(5).induced_subgraph([4, 1, 3])
    assert labels == [1, 3, 4]
    assert sub == Graph.complete(3)


def test_matrix_and_networkx_round_trip():
    g = Graph.from_networkx(nx.petersen_graph())
    assert Graph.from_matrix(g.adjacency_matrix()) == g
    assert nx.is_isomorphic(g.to_networkx(), nx.petersen_graph())
    assert np.array_equal(g.adjacency_matrix(), g.adjacency_matrix().T)


def test_dot_output():
    assert path3().to_dot("P3") == "graph P3 {\n  0;\n  1;\n  2;\n  0 -- 1;\n  1 -- 2;\n}\n"
    assert path3().to_dot("C_4(±1)").startswith('graph "C_4(±1)" {')


def test_named_graphs():
    assert (named_graph("q3").order, named_graph("q3").edge_count) == (8, 12)
    assert (named_graph("icosahedron").order, named_graph("icosahedron").edge_count) == (12, 30)
    assert (named_graph("petersen").order, named_graph("petersen").edge_count) == (10, 15)
    assert named_graph("envelope").edge_count == 9
    assert named_graph("crown:4").edge_count == 12
    assert named_graph("k:5") == Graph.complete(5)
    assert named_graph("cycle:6").is_regular() == 2
    with pytest.raises(ValueError):
        named_graph("dodecahedron")
