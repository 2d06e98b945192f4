import pytest
from src.graph.colored_graph import Color, ColoredGraph
from src.utils.errors import DuplicateEdge, LoopEdge, UnknownVertex


def test_add_edge_returns_new_board(board):
    g = board('0-1b', vertex_count=3)
    h = g.add_edge(1, 2, Color.RED)
    assert g.edge_count == 1 and h.edge_count == 2
    assert h.color(2, 1) is Color.RED
    assert g.color(1, 2) is None


def test_neighbors_by_color(board):
    g = board('0-1b 0-2r 0-3b')
    assert sorted(g.neighbors(0, Color.BLUE)) == [1, 3]
    assert g.neighbors(0, Color.RED) == [2]
    assert sorted(g.neighbors(0)) == [1, 2, 3]
    assert g.degree(0) == 3


def test_loop_rejected():
    with pytest.raises(LoopEdge):
        ColoredGraph(2).add_edge(1, 1, Color.BLUE)


def test_duplicate_rejected_in_either_orientation(board):
    g = board('0-1r')
    with pytest.raises(DuplicateEdge):
        g.add_edge(1, 0, Color.BLUE)


def test_vertex_must_exist_until_materialized():
    g = ColoredGraph(2)
    with pytest.raises(UnknownVertex):
        g.add_edge(0, 2, Color.RED)
    grown = g.ensure_vertices(2)
    assert grown.vertex_count == 3
    assert grown.add_edge(0, 2, Color.RED).has_edge(2, 0)
    assert g.ensure_vertices(1) is g


def test_is_legal(board):
    g = board('0-1r')
    assert not g.is_legal(0, 1)
    assert not g.is_legal(2, 2)
    assert g.is_legal(1, 5)


def test_equality_ignores_construction_order(board):
    assert board('0-1r 1-2b') == board('1-2b 0-1r')
    assert board('0-1r') != board('0-1b')
