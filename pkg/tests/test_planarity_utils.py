import networkx as nx
import pytest

from PlanarEuler.enumeration.graphs import enumerate_graphs
from PlanarEuler.generator_utils import GridSpec, complete, complete_bipartite, cycle, grid, maximal_triangulation, path, star
from PlanarEuler.graph_utils import GraphError, from_edge_list, from_networkx, to_networkx
from PlanarEuler.planarity_utils import DisconnectedGraphError, NonPlanarError, face_count, is_planar

from conftest import disjoint_edges


def test_classics():
    assert is_planar(complete(4))
    assert not is_planar(complete(5))
    assert not is_planar(complete_bipartite(3, 3))
    assert is_planar(complete_bipartite(2, 7))
    assert not is_planar(from_networkx(nx.petersen_graph()))


@pytest.mark.parametrize("n", range(3, 31))
def test_triangulations_are_planar(n):
    assert is_planar(maximal_triangulation(n))


def test_agrees_with_networkx_on_all_graphs_with_six_vertices():
    for g in enumerate_graphs(6):
        assert bool(is_planar(g)) == nx.check_planarity(to_networkx(g))[0]


def test_edge_bound_prefilter():
    for g in enumerate_graphs(6):
        if g.edge_count > 3 * g.n - 6:
            assert not is_planar(g)


def test_face_count_families():
    assert face_count(path(7)) == 1
    assert face_count(star(5)) == 1
    assert face_count(cycle(9)) == 2
    for m, n in [(1, 1), (2, 2), (3, 5), (4, 4)]:
        assert face_count(grid(GridSpec(m, n))) == (m - 1) * (n - 1) + 1


def test_face_count_rejects_disconnected():
    with pytest.raises(DisconnectedGraphError, match="connected graphs only"):
        face_count(disjoint_edges())


def test_face_count_rejects_non_planar():
    with pytest.raises(NonPlanarError, match="non-planar input"):
        face_count(complete(5))


def test_face_count_rejects_empty_graph():
    with pytest.raises(GraphError):
        face_count(from_edge_list(0, []))
