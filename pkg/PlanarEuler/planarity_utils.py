"""
============
Planarity test and face counting.
============

`is_planar` decides planarity with exact edge-count shortcuts in front of the left-right test from networkx.

`face_count` returns f2 of a connected planar graph through the Euler relation f0 - f1 + f2 = 2, counting
the unbounded face. Disconnected and non-planar graphs are rejected.
"""

from dataclasses import dataclass

import networkx as nx

from PlanarEuler.graph_utils import Graph, GraphError, edge_count, is_connected, to_networkx

# K3,3 has 9 edges and K5 has 10, so every graph with at most this many edges is planar
MAX_EDGES_ALWAYS_PLANAR = 8


class DisconnectedGraphError(GraphError):
    pass


class NonPlanarError(GraphError):
    pass


@dataclass(frozen=True)
class PlanarityVerdict:
    planar: bool

    def __bool__(self):
        return self.planar


def is_planar(g: Graph) -> PlanarityVerdict:
    """Decide whether g embeds in the plane.

    Parameters
    ----------
    g: Graph
        any simple graph

    Returns
    -------
    verdict: PlanarityVerdict
        truthy iff g is planar
    """
    m = edge_count(g)
    if g.n <= 4 or m <= MAX_EDGES_ALWAYS_PLANAR:
        return PlanarityVerdict(True)
    if m > 3 * g.n - 6:
        return PlanarityVerdict(False)
    planar, _ = nx.check_planarity(to_networkx(g))
    return PlanarityVerdict(bool(planar))


def face_count(g: Graph) -> int:
    """Number of faces f2 = 2 - f0 + f1 of a connected planar graph, unbounded face included.

    Parameters
    ----------
    g: Graph
        connected planar graph with at least one vertex

    Returns
    -------
    f2: int
    """
    if g.n == 0:
        raise GraphError("the empty graph has no faces; face counting needs at least one vertex")
    if not is_connected(g):
        raise DisconnectedGraphError(
            "face counting is defined for connected graphs only, got a disconnected graph on {} vertices".format(g.n)
        )
    if not is_planar(g):
        raise NonPlanarError(
            "non-planar input: a graph with {} vertices and {} edges has no plane embedding".format(g.n, g.edge_count)
        )
    return 2 - g.n + edge_count(g)
