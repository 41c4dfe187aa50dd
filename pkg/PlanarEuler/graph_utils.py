"""
============
Simple undirected graphs stored as per-vertex neighbour bitsets.
============

`Graph` is an immutable value: vertex ids are 0..n-1 and `adjacency[v]` is an int whose set bits are the
neighbours of v. One machine word per vertex covers the enumeration sizes (n <= 16), larger graphs such as
the 12x12 grid still work since python ints are unbounded.

`from_edge_list` builds a graph from (u, v) pairs.

`is_connected`, `is_biconnected`, `has_triangle` and `is_bipartite` are the structural predicates used as
enumeration filters.

`remove_vertex`, `add_edge`, `remove_edge` and `relabel` return new graphs.
"""

from dataclasses import dataclass
from typing import Iterable, Iterator, List, Sequence, Tuple

import networkx as nx


class GraphError(ValueError):
    """Raised for malformed graphs and out-of-range vertex ids."""


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class Graph:
    n: int
    adjacency: Tuple[int, ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError("vertex count cannot be negative, got {}".format(self.n))
        if len(self.adjacency) != self.n:
            raise GraphError(
                "adjacency has {} rows for {} vertices".format(len(self.adjacency), self.n)
            )
        full = (1 << self.n) - 1
        for v, mask in enumerate(self.adjacency):
            if mask & ~full:
                raise GraphError("vertex {} has a neighbour outside [0, {})".format(v, self.n))
            if mask >> v & 1:
                raise GraphError("self-loop at vertex {}".format(v))
            for u in iter_bits(mask):
                if not self.adjacency[u] >> v & 1:
                    raise GraphError("adjacency is not symmetric on edge ({}, {})".format(u, v))

    def __repr__(self):
        return "Graph(n={}, edges={})".format(self.n, list(edges(self)))

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adjacency[u] >> v & 1)

    def neighbors(self, v: int) -> List[int]:
        return list(iter_bits(self.adjacency[v]))

    @property
    def edge_count(self) -> int:
        return sum(mask.bit_count() for mask in self.adjacency) // 2


def _check_vertex(g: Graph, v: int) -> None:
    if not 0 <= v < g.n:
        raise GraphError("vertex id {} out of range for a graph on {} vertices".format(v, g.n))


def from_edge_list(
    n: int,
    edge_list: Iterable[Tuple[int, int]]
) -> Graph:
    """Build a simple graph on n vertices from (u, v) pairs. Repeated pairs collapse to one edge.

    Parameters
    ----------
    n: int
        number of vertices
    edge_list: Iterable[Tuple[int, int]]
        0-based endpoint pairs

    Returns
    -------
    g: Graph
    """
    if n < 0:
        raise GraphError("vertex count cannot be negative, got {}".format(n))
    rows = [0] * n
    for u, v in edge_list:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError("edge ({}, {}) has an endpoint outside [0, {})".format(u, v, n))
        if u == v:
            raise GraphError("self-loop ({}, {}) is not allowed in a simple graph".format(u, v))
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def empty_graph(n: int) -> Graph:
    return Graph(n, (0,) * n)


def edges(g: Graph) -> Iterator[Tuple[int, int]]:
    """Yield each edge once as (u, v) with u < v, in lexicographic order."""
    for u, mask in enumerate(g.adjacency):
        for v in iter_bits(mask >> (u + 1)):
            yield u, u + 1 + v


def edge_count(g: Graph) -> int:
    return g.edge_count


def degree(g: Graph, v: int) -> int:
    _check_vertex(g, v)
    return g.adjacency[v].bit_count()


def degree_sequence(g: Graph) -> Tuple[int, ...]:
    """Degrees in non-increasing order."""
    return tuple(sorted((mask.bit_count() for mask in g.adjacency), reverse=True))


def _component_mask(adjacency: Sequence[int], start: int, allowed: int) -> int:
    seen = 1 << start
    frontier = seen
    while frontier:
        reach = 0
        for v in iter_bits(frontier):
            reach |= adjacency[v]
        frontier = reach & allowed & ~seen
        seen |= frontier
    return seen


def is_connected(g: Graph) -> bool:
    """True iff g has one connected component. Graphs with at most one vertex are connected."""
    if g.n <= 1:
        return True
    full = (1 << g.n) - 1
    return _component_mask(g.adjacency, 0, full) == full


def is_biconnected(g: Graph) -> bool:
    """True iff g has at least 3 vertices, is connected and has no cut vertex."""
    if g.n < 3 or not is_connected(g):
        return False
    full = (1 << g.n) - 1
    for x in range(g.n):
        rest = full & ~(1 << x)
        start = 1 if x == 0 else 0
        if _component_mask(g.adjacency, start, rest) != rest:
            return False
    return True


def has_triangle(g: Graph) -> bool:
    for u, mask in enumerate(g.adjacency):
        for v in iter_bits(mask >> (u + 1)):
            if mask & g.adjacency[u + 1 + v]:
                return True
    return False


def is_bipartite(g: Graph) -> bool:
    """True iff g is 2-colourable, checked component by component."""
    colour = [-1] * g.n
    for root in range(g.n):
        if colour[root] != -1:
            continue
        colour[root] = 0
        stack = [root]
        while stack:
            v = stack.pop()
            for u in iter_bits(g.adjacency[v]):
                if colour[u] == -1:
                    colour[u] = 1 - colour[v]
                    stack.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True


def remove_vertex(g: Graph, x: int) -> Graph:
    """Delete vertex x and its edges. Vertices above x shift down by one so ids stay compact.

    Parameters
    ----------
    g: Graph
        input graph
    x: int
        vertex to delete

    Returns
    -------
    h: Graph
        graph on n - 1 vertices with edge count f1(g) - degree(g, x)
    """
    _check_vertex(g, x)
    low = (1 << x) - 1
    rows = []
    for v, mask in enumerate(g.adjacency):
        if v == x:
            continue
        rows.append((mask & low) | ((mask >> (x + 1)) << x))
    return Graph(g.n - 1, tuple(rows))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if u == v:
        raise GraphError("self-loop ({}, {}) is not allowed in a simple graph".format(u, v))
    rows = list(g.adjacency)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    return Graph(g.n, tuple(rows))


def remove_edge(g: Graph, u: int, v: int) -> Graph:
    _check_vertex(g, u)
    _check_vertex(g, v)
    if not g.has_edge(u, v):
        raise GraphError("({}, {}) is not an edge".format(u, v))
    rows = list(g.adjacency)
    rows[u] &= ~(1 << v)
    rows[v] &= ~(1 << u)
    return Graph(g.n, tuple(rows))


def non_edges(g: Graph) -> Iterator[Tuple[int, int]]:
    full = (1 << g.n) - 1
    for u, mask in enumerate(g.adjacency):
        missing = (full & ~mask) >> (u + 1)
        for v in iter_bits(missing):
            yield u, u + 1 + v


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """Relabel g so that vertex order[i] becomes vertex i.

    `order` must be a permutation of range(g.n).
    """
    if sorted(order) != list(range(g.n)):
        raise GraphError("relabelling order is not a permutation of range({})".format(g.n))
    position = [0] * g.n
    for i, v in enumerate(order):
        position[v] = i
    rows = []
    for v in order:
        mask = 0
        for u in iter_bits(g.adjacency[v]):
            mask |= 1 << position[u]
        rows.append(mask)
    return Graph(g.n, tuple(rows))


def to_networkx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(edges(g))
    return G


def from_networkx(G: nx.Graph) -> Graph:
    """Convert a networkx graph, mapping its nodes to 0..n-1 in sorted order."""
    nodes = sorted(G.nodes())
    index = {node: i for i, node in enumerate(nodes)}
    return from_edge_list(len(nodes), [(index[u], index[v]) for u, v in G.edges()])
