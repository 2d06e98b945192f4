import itertools
import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import categorical_edge_match
from src.graph.colored_graph import Color, ColoredGraph
from src.graph.canonical import canonical_form, canonical_key, pair_orbit_representatives, vertex_orbits
from tests.test_paths import random_board


def relabeled(g: ColoredGraph, perm) -> ColoredGraph:
    return ColoredGraph(g.vertex_count, {(perm[u], perm[v]): c for (u, v), c in g.edges.items()})


def small_catalog():
    """Every 2-colored graph with at most three edges and no isolated vertex, on labeled vertices."""
    slots = list(itertools.combinations(range(6), 2))
    for size in range(4):
        for chosen in itertools.combinations(slots, size):
            used = sorted({v for e in chosen for v in e})
            if used != list(range(len(used))):
                continue
            for colors in itertools.product((Color.RED, Color.BLUE), repeat=size):
                yield ColoredGraph(len(used), dict(zip(chosen, colors)))


def as_networkx(g: ColoredGraph) -> nx.Graph:
    graph = nx.Graph()
    graph.add_nodes_from(g.vertices())
    graph.add_edges_from((u, v, {'color': int(c)}) for (u, v), c in g.edges.items())
    return graph


def test_catalog_classes_separated_by_key():
    match = categorical_edge_match('color', 0)
    classes = []
    for g in small_catalog():
        for rep in classes:
            if nx.is_isomorphic(as_networkx(rep), as_networkx(g), edge_match=match):
                assert canonical_key(g, 0) == canonical_key(rep, 0), (g, rep)
                break
        else:
            classes.append(g)
    assert len(classes) == 33
    assert len({canonical_key(g, 0) for g in classes}) == 33


def test_key_invariant_under_relabeling():
    rng = np.random.default_rng(5)
    for _ in range(30):
        g = random_board(rng, max_vertices=9)
        key = canonical_key(g)
        for _ in range(100):
            perm = [int(x) for x in rng.permutation(g.vertex_count)]
            assert canonical_key(relabeled(g, perm)) == key


def test_order_maps_equal_boards_onto_each_other(board):
    g = board('0-1b 1-2r 2-3b 3-4b 5-6r')
    h = relabeled(g, [6, 4, 0, 2, 1, 3, 5])
    fg, fh = canonical_form(g), canonical_form(h)
    assert fg.key == fh.key
    mapping = dict(zip(fg.order, fh.order))
    for (u, v), c in g.edges.items():
        assert h.color(mapping[u], mapping[v]) is c


def test_spare_isolated_vertices_are_folded(board):
    g = board('0-1r')
    assert canonical_key(g.ensure_vertices(5), 1) == canonical_key(g.ensure_vertices(2), 1)
    assert canonical_key(g, 1) != canonical_key(g.ensure_vertices(2), 1)
    assert canonical_key(g.ensure_vertices(5), 0) == canonical_key(g, 0)


def test_colors_matter(board):
    assert canonical_key(board('0-1r 1-2b')) != canonical_key(board('0-1b 1-2b'))


def test_orbits_of_blue_path(board):
    g = board('0-1b 1-2b 2-3b')
    form = canonical_form(g)
    assert vertex_orbits(form.order, form.generators) == [[0, 3], [1, 2]]
    pairs = [(0, 2), (1, 3), (0, 3)]
    assert len(pair_orbit_representatives(pairs, form.generators)) == 2


def test_orbits_of_identical_components(board):
    g = board('0-1r 2-3r 4-5b')
    form = canonical_form(g)
    assert vertex_orbits(form.order, form.generators) == [[0, 1, 2, 3], [4, 5]]


def test_orbits_of_star_leaves(board):
    g = board('0-1r 0-2r 0-3r 3-4b')
    form = canonical_form(g)
    assert vertex_orbits(form.order, form.generators) == [[0], [1, 2], [3], [4]]
