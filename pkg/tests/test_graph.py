import pytest

from grundy import Graph


def test_basic_construction():
    g = Graph(4, [(0, 1), (1, 2), (2, 3)])
    assert g.n == 4
    assert g.m == 3
    assert g.neighbors(1) == (0, 2)
    assert g.degree(2) == 2
    assert g.has_edge(0, 1) and not g.has_edge(0, 2)


def test_duplicate_edges_collapse():
    g = Graph(3, [(0, 1), (1, 0), (0, 1)])
    assert g.m == 1


def test_rejects_self_loop_and_out_of_range():
    with pytest.raises(ValueError):
        Graph(3, [(1, 1)])
    with pytest.raises(ValueError):
        Graph(3, [(0, 3)])


def test_adjacency_sorted_ascending():
    g = Graph(5, [(3, 0), (3, 4), (3, 1), (3, 2)])
    assert g.neighbors(3) == (0, 1, 2, 4)
    assert g.edges == ((0, 3), (1, 3), (2, 3), (3, 4))


def test_components_and_connectivity():
    g = Graph(6, [(0, 1), (2, 3), (3, 4)])
    assert g.components() == [[0, 1], [2, 3, 4], [5]]
    assert not g.is_connected()
    assert Graph(1).is_connected()
    assert Graph(0).is_connected()


def test_is_tree():
    assert Graph(4, [(0, 1), (1, 2), (2, 3)]).is_tree()
    assert not Graph(3, [(0, 1), (1, 2), (0, 2)]).is_tree()
    assert not Graph(4, [(0, 1), (2, 3)]).is_tree()
    assert Graph(1).is_tree()


def test_induced_subgraph_relabels():
    g = Graph(5, [(0, 2), (2, 4), (4, 0), (1, 3)])
    sub, ids = g.induced_subgraph([0, 2, 4])
    assert ids == (0, 2, 4)
    assert sub.n == 3 and sub.m == 3
    with pytest.raises(ValueError):
        g.induced_subgraph([0, 0])


def test_with_edges():
    g = Graph(3, [(0, 1)])
    h = g.with_edges([(1, 2)])
    assert g.m == 1 and h.m == 2


def test_equality_and_hash():
    a = Graph(3, [(0, 1), (1, 2)])
    b = Graph(3, [(1, 2), (0, 1)])
    c = Graph(3, [(0, 1)])
    assert a == b and hash(a) == hash(b)
    assert a != c


def test_empty_graph():
    g = Graph(0)
    assert g.n == 0 and g.m == 0 and g.components() == []
