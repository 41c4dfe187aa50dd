import numpy as np
import pytest

from PlanarEuler.enumeration.graphs import theorem5_catalog, theorem5_extension, theorem5_parent_pool
from PlanarEuler.generator_utils import fig2_witness
from PlanarEuler.graph_utils import Graph, from_edge_list, relabel


def disjoint_edges() -> Graph:
    return from_edge_list(4, [(0, 1), (2, 3)])


def hexagon_with_hub() -> Graph:
    """A 6-cycle plus a seventh vertex joined to every other cycle vertex."""
    return from_edge_list(7, [(i, (i + 1) % 6) for i in range(6)] + [(6, 0), (6, 2), (6, 4)])


def shuffled(g: Graph, rng: np.random.Generator) -> Graph:
    return relabel(g, [int(v) for v in rng.permutation(g.n)])


@pytest.fixture
def rng():
    return np.random.default_rng(981011)


@pytest.fixture(scope="session")
def witness():
    return fig2_witness()


@pytest.fixture(scope="session")
def catalog():
    return theorem5_catalog()


@pytest.fixture(scope="session")
def extension():
    return theorem5_extension()


@pytest.fixture(scope="session")
def parent_pool():
    return theorem5_parent_pool()
