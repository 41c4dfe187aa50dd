"""
Canonical labelling of small graphs by individualisation and colour refinement.

The canonical form of a graph is the graph6 encoding of its relabelling whose upper-triangle bit string
(in graph6 order) is lexicographically least over the leaves of the search tree. Colour refinement and
individualisation only use label-invariant information, so the leaf set, and with it the minimum, is the
same for every relabelling of the input. Twin vertices (equal neighbourhoods apart from each other) are
interchangeable, so only one twin per cell is branched on.
"""

from typing import List, NewType, Optional, Sequence, Tuple

from PlanarEuler.graph_io import write_graph6
from PlanarEuler.graph_utils import Graph, GraphError, iter_bits, relabel

MAX_CANONICAL_ORDER = 16

CanonicalForm = NewType("CanonicalForm", bytes)


def _refine(neighbours: Sequence[Sequence[int]], colours: List[int]) -> List[int]:
    """Iterate 1-dimensional colour refinement until the partition is stable.

    Colours are re-ranked after every round so that they stay 0..k-1 in an order that only depends on
    the previous colours and neighbourhood colour multisets.
    """
    n_colours = len(set(colours))
    while True:
        signatures = [
            (colours[v], tuple(sorted(colours[u] for u in neighbours[v]))) for v in range(len(colours))
        ]
        ranks = {sig: rank for rank, sig in enumerate(sorted(set(signatures)))}
        colours = [ranks[sig] for sig in signatures]
        if len(ranks) == n_colours:
            return colours
        n_colours = len(ranks)


def _leaf_key(adjacency: Sequence[int], order: Sequence[int]) -> int:
    key = 0
    for j in range(1, len(order)):
        row = adjacency[order[j]]
        for i in range(j):
            key = (key << 1) | (row >> order[i] & 1)
    return key


def _are_twins(adjacency: Sequence[int], u: int, v: int) -> bool:
    return (adjacency[u] & ~(1 << v)) == (adjacency[v] & ~(1 << u))


def _search(
    adjacency: Sequence[int],
    neighbours: Sequence[Sequence[int]],
    colours: List[int],
    best: List[Optional[Tuple[int, Tuple[int, ...]]]],
) -> None:
    n = len(colours)
    cells = {}
    for v in range(n):
        cells.setdefault(colours[v], []).append(v)

    if len(cells) == n:
        order = tuple(sorted(range(n), key=colours.__getitem__))
        key = _leaf_key(adjacency, order)
        if best[0] is None or key < best[0][0]:
            best[0] = (key, order)
        return

    # first non-singleton cell in colour order
    target = next(cells[c] for c in sorted(cells) if len(cells[c]) > 1)
    tried: List[int] = []
    for v in target:
        if any(_are_twins(adjacency, v, t) for t in tried):
            continue
        tried.append(v)
        split = [2 * c + 1 for c in colours]
        split[v] -= 1
        _search(adjacency, neighbours, _refine(neighbours, split), best)


def canonical_labeling(g: Graph) -> Tuple[int, ...]:
    """Return the vertex order of the canonical relabelling: vertex order[i] becomes vertex i.

    Parameters
    ----------
    g: Graph
        graph with at most MAX_CANONICAL_ORDER vertices

    Returns
    -------
    order: Tuple[int, ...]
        a permutation of range(g.n)
    """
    if g.n > MAX_CANONICAL_ORDER:
        raise GraphError(
            "canonical labelling is limited to {} vertices, got {}".format(MAX_CANONICAL_ORDER, g.n)
        )
    if g.n == 0:
        return ()
    neighbours = [list(iter_bits(mask)) for mask in g.adjacency]
    colours = _refine(neighbours, [len(nbrs) for nbrs in neighbours])
    best: List[Optional[Tuple[int, Tuple[int, ...]]]] = [None]
    _search(g.adjacency, neighbours, colours, best)
    return best[0][1]


def canonical_graph(g: Graph) -> Graph:
    """The canonical representative of the isomorphism class of g."""
    return relabel(g, canonical_labeling(g))


def canonical_form(g: Graph) -> CanonicalForm:
    """Label-invariant encoding of the isomorphism class of g (graph6 bytes of `canonical_graph`)."""
    return CanonicalForm(write_graph6(canonical_graph(g)).encode("ascii"))
