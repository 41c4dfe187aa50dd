import pytest

from PlanarEuler.canonical_utils import canonical_form
from PlanarEuler.enumeration.lattice import (
    LatticeGraph,
    enumerate_lattice_subgraphs,
    three_square_unions,
    to_abstract,
)
from PlanarEuler.euler_utils import fvector_of
from PlanarEuler.generator_utils import GridSpec, cycle, grid, path
from PlanarEuler.graph_utils import GraphError, is_connected

UNIT_SQUARE = LatticeGraph.from_edges([((0, 0), (1, 0)), ((1, 0), (1, 1)), ((0, 1), (1, 1)), ((0, 0), (0, 1))])


def block(width, height):
    pairs = []
    for y in range(height):
        for x in range(width):
            if x + 1 < width:
                pairs.append(((x, y), (x + 1, y)))
            if y + 1 < height:
                pairs.append(((x, y), (x, y + 1)))
    return LatticeGraph.from_edges(pairs)


@pytest.fixture(scope="module")
def small_classes():
    return list(enumerate_lattice_subgraphs(1, 6))


@pytest.mark.parametrize("order, count", [(1, 1), (2, 2), (3, 6)])
def test_small_counts(order, count):
    assert len(list(enumerate_lattice_subgraphs(order, order))) == count


def test_four_vertices_include_square_and_path():
    classes = list(enumerate_lattice_subgraphs(4, 4))
    forms = {canonical_form(to_abstract(lg)) for lg in classes}
    assert canonical_form(cycle(4)) in forms
    assert canonical_form(path(4)) in forms
    assert UNIT_SQUARE.normalized() in classes


def test_no_translation_duplicates(small_classes):
    keys = [lg.to_masks() for lg in small_classes]
    assert len(set(keys)) == len(keys)
    assert all(lg == lg.normalized() for lg in small_classes)


def test_masks_round_trip(small_classes):
    for lg in small_classes:
        assert LatticeGraph.from_masks(*lg.to_masks()) == lg


def _parents(lg):
    """Classes obtained by deleting one edge, and its endpoint if that endpoint becomes isolated."""
    for p, q in lg.edges:
        vertices = set(lg.vertices)
        for v in (q, p):
            if len(vertices) > 1 and sum(v in e for e in lg.edges) == 1:
                vertices.discard(v)
                break
        parent = LatticeGraph(frozenset(vertices), lg.edges - {(p, q)})
        if is_connected(to_abstract(parent)):
            yield parent.to_masks()


def test_growth_closure(small_classes):
    seen = {lg.to_masks() for lg in small_classes}
    for lg in small_classes:
        if lg.edges:
            assert any(key in seen for key in _parents(lg))


def test_fvector_matches_abstract_graph(small_classes):
    for lg in small_classes:
        assert lg.fvector == fvector_of(to_abstract(lg))


def test_to_abstract():
    assert canonical_form(to_abstract(UNIT_SQUARE)) == canonical_form(cycle(4))
    assert canonical_form(to_abstract(block(3, 2))) == canonical_form(grid(GridSpec(2, 3)))
    assert to_abstract(block(4, 3)).edge_count == len(block(4, 3).edges)


def test_validation():
    with pytest.raises(GraphError, match="unit length"):
        LatticeGraph.from_edges([((0, 0), (1, 1))])
    with pytest.raises(GraphError, match="outside the vertex set"):
        LatticeGraph(frozenset({(0, 0)}), frozenset({((0, 0), (1, 0))}))
    with pytest.raises(GraphError):
        LatticeGraph(frozenset(), frozenset())


def test_normalized_anchor():
    lg = LatticeGraph.from_edges([((3, 5), (4, 5)), ((3, 5), (3, 6)), ((2, 6), (3, 6))]).normalized()
    assert min(lg.vertices, key=lambda p: (p[1], p[0])) == (0, 0)
    assert (-1, 1) in lg.vertices


def test_limits():
    with pytest.raises(GraphError):
        list(enumerate_lattice_subgraphs(1, 11))
    with pytest.raises(GraphError):
        list(enumerate_lattice_subgraphs(5, 4))


def test_three_square_unions():
    counts = three_square_unions()
    assert counts["edge_joined_translation"] == 6
    assert counts["edge_joined_isomorphism"] == 2
    assert counts["translation"] > counts["edge_joined_translation"]
    assert counts["isomorphism"] >= counts["edge_joined_isomorphism"]
