import networkx as nx
import pytest

from PlanarEuler.generator_utils import GridSpec, complete, complete_bipartite, cycle, fig2_vertex, grid, path, star
from PlanarEuler.canonical_utils import canonical_form
from PlanarEuler.graph_utils import (
    Graph,
    GraphError,
    add_edge,
    degree,
    degree_sequence,
    edge_count,
    edges,
    from_edge_list,
    from_networkx,
    has_triangle,
    is_biconnected,
    is_bipartite,
    is_connected,
    non_edges,
    relabel,
    remove_edge,
    remove_vertex,
    to_networkx,
)

from conftest import disjoint_edges, hexagon_with_hub


def test_from_edge_list_builds_triangle():
    g = from_edge_list(3, [(0, 1), (1, 2), (2, 0)])
    assert g.n == 3
    assert g.edge_count == 3
    assert list(edges(g)) == [(0, 1), (0, 2), (1, 2)]


def test_from_edge_list_deduplicates():
    g = from_edge_list(3, [(0, 1), (1, 0), (0, 1), (1, 2)])
    assert g.edge_count == edge_count(g) == 2


def test_single_vertex():
    g = from_edge_list(1, [])
    assert g.n == 1 and g.edge_count == 0


@pytest.mark.parametrize("pairs", [[(0, 0)], [(0, 3)], [(-1, 1)]])
def test_from_edge_list_rejects(pairs):
    with pytest.raises(GraphError):
        from_edge_list(3, pairs)


def test_graph_rejects_asymmetric_adjacency():
    with pytest.raises(GraphError, match="symmetric"):
        Graph(2, (0b10, 0b00))


def test_graph_rejects_self_loop_bit():
    with pytest.raises(GraphError, match="self-loop"):
        Graph(1, (0b1,))


def test_is_connected(witness):
    assert is_connected(path(5))
    assert not is_connected(disjoint_edges())
    assert is_connected(witness)
    assert is_connected(from_edge_list(0, []))
    assert is_connected(from_edge_list(1, []))


def test_is_biconnected():
    assert is_biconnected(cycle(4))
    assert not is_biconnected(path(3))
    assert is_biconnected(hexagon_with_hub())
    assert not is_biconnected(from_edge_list(2, [(0, 1)]))
    assert not is_biconnected(star(4))


def test_is_biconnected_agrees_with_networkx():
    for g in [cycle(7), grid(GridSpec(3, 4)), complete(5), path(6), hexagon_with_hub(), complete_bipartite(2, 5)]:
        assert is_biconnected(g) == nx.is_biconnected(to_networkx(g))


def test_has_triangle(witness):
    assert has_triangle(complete(4))
    assert not has_triangle(complete_bipartite(3, 3))
    assert not has_triangle(grid(GridSpec(4, 4)))
    assert not has_triangle(witness)


def test_is_bipartite(witness):
    assert is_bipartite(cycle(6))
    assert not is_bipartite(cycle(5))
    assert is_bipartite(grid(GridSpec(2, 3)))
    assert is_bipartite(witness)
    assert is_bipartite(disjoint_edges())


def test_remove_vertex_cycle_gives_path():
    for x in range(4):
        h = remove_vertex(cycle(4), x)
        assert h.n == 3
        assert canonical_form(h) == canonical_form(path(3))


def test_remove_vertex_witness_k(witness):
    h = remove_vertex(witness, fig2_vertex("k"))
    assert h.n == 8
    assert h.edge_count == 12


def test_remove_vertex_single_edge():
    h = remove_vertex(path(2), 0)
    assert h.n == 1 and h.edge_count == 0


def test_remove_vertex_compacts_ids():
    g = from_edge_list(4, [(0, 3), (1, 2)])
    h = remove_vertex(g, 1)
    assert list(edges(h)) == [(0, 2)]


def test_remove_vertex_out_of_range():
    with pytest.raises(GraphError):
        remove_vertex(cycle(4), 4)


def test_degree(witness):
    assert all(degree(cycle(5), v) == 2 for v in range(5))
    assert degree(star(4), 0) == 4
    assert degree(witness, fig2_vertex("c")) == 2
    with pytest.raises(GraphError):
        degree(cycle(5), 5)


@pytest.mark.parametrize("g", [path(7), cycle(9), grid(GridSpec(3, 5)), complete(6), star(5)])
def test_handshake_and_vertex_deletion(g):
    assert sum(degree(g, v) for v in range(g.n)) == 2 * g.edge_count
    for x in range(g.n):
        assert remove_vertex(g, x).edge_count == g.edge_count - degree(g, x)


def test_degree_sequence_non_increasing():
    assert degree_sequence(star(3)) == (3, 1, 1, 1)


def test_add_and_remove_edge():
    g = add_edge(path(3), 0, 2)
    assert g == cycle(3)
    assert remove_edge(g, 0, 2) == path(3)
    with pytest.raises(GraphError):
        remove_edge(path(3), 0, 2)
    with pytest.raises(GraphError):
        add_edge(path(3), 1, 1)


def test_non_edges_complement_edges():
    g = grid(GridSpec(2, 3))
    assert len(list(non_edges(g))) + g.edge_count == 15


def test_relabel():
    g = path(3)
    h = relabel(g, [1, 0, 2])
    assert list(edges(h)) == [(0, 1), (0, 2)]
    with pytest.raises(GraphError):
        relabel(g, [0, 0, 1])


def test_networkx_round_trip():
    g = grid(GridSpec(3, 3))
    assert from_networkx(to_networkx(g)) == g
    assert from_networkx(nx.petersen_graph()).edge_count == 15
