"""
============
Exhaustive enumeration of small graphs up to isomorphism.
============

`enumerate_graphs` grows graphs one edge at a time from the empty graph on n vertices. The classes with
k + 1 edges are the canonical forms of all one-edge extensions of the classes with k edges; every graph
with k + 1 edges extends one of its k-edge subgraphs, so no class is missed, and dedup over canonical forms
emits each class once.

Properties that subgraphs inherit (planar, triangle-free, bipartite) prune the growth. Connectivity,
2-connectivity and the exact f-vector are checked when a class is emitted.

`theorem5_catalog` and `theorem5_extension` list the 2-connected triangle-free planar graphs on 7 vertices
with f-vectors (7, 9, 4) and (7, 10, 5). `theorem5_parent_pool` drops 2-connectivity from the first list, and
`extension_parents` finds the one-edge-deleted parents of the second list among any of them.
"""

import json
import logging
from dataclasses import dataclass
from functools import partial
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from PlanarEuler.canonical_utils import canonical_graph
from PlanarEuler.enumeration.pool import map_chunks, worker_pool
from PlanarEuler.euler_utils import Classification, FVector, classify, euler_polynomial, fvector_of
from PlanarEuler.graph_io import parse_graph6, write_graph6
from PlanarEuler.graph_utils import (
    Graph,
    add_edge,
    degree_sequence,
    edges,
    empty_graph,
    has_triangle,
    is_biconnected,
    is_bipartite,
    is_connected,
    non_edges,
    remove_edge,
)
from PlanarEuler.planarity_utils import is_planar

MAX_ORDER = 9
# a triangle-free planar graph on 9 vertices has at most 2 (9 - 2) = 14 edges
MAX_EDGES_AT_MAX_ORDER = 14

FILTER_NAMES = ("connected", "biconnected", "triangle-free", "planar", "bipartite")


class EnumerationSizeError(ValueError):
    pass


@dataclass(frozen=True)
class FilterSpec:
    connected: bool = False
    biconnected: bool = False
    triangle_free: bool = False
    planar: bool = False
    bipartite: bool = False
    edges: Optional[Tuple[int, int]] = None
    fvector: Optional[FVector] = None

    @classmethod
    def from_names(
        cls,
        names: str,
        edges: Optional[Tuple[int, int]] = None,
        fvector: Optional[FVector] = None
    ) -> "FilterSpec":
        """Build a filter from a comma list such as "connected,triangle-free,planar"."""
        flags = {}
        for name in filter(None, (part.strip() for part in names.split(","))):
            if name not in FILTER_NAMES:
                raise ValueError("unknown filter {!r}, expected a comma list of {}".format(name, ", ".join(FILTER_NAMES)))
            flags[name.replace("-", "_")] = True
        return cls(edges=edges, fvector=FVector(*fvector) if fvector is not None else None, **flags)

    def edge_range(self, n: int) -> Tuple[int, int]:
        """Effective [lo, hi] edge range, narrowed by an exact f-vector when one is given."""
        top = n * (n - 1) // 2
        lo, hi = self.edges if self.edges is not None else (0, top)
        if lo < 0 or lo > hi or hi > top:
            raise ValueError("edge range [{}, {}] must satisfy 0 <= lo <= hi <= {}".format(lo, hi, top))
        if self.fvector is not None:
            lo, hi = max(lo, self.fvector.f1), min(hi, self.fvector.f1)
        return lo, hi

    def hereditary_ok(self, g: Graph) -> bool:
        """Checks that survive edge deletion, so a failing graph has no passing supergraph."""
        if self.triangle_free and has_triangle(g):
            return False
        if self.bipartite and not is_bipartite(g):
            return False
        return not (self.planar or self.fvector is not None) or bool(is_planar(g))

    def accepts(self, g: Graph) -> bool:
        lo, hi = self.edge_range(g.n)
        if not lo <= g.edge_count <= hi:
            return False
        if (self.connected or self.fvector is not None) and not is_connected(g):
            return False
        if self.biconnected and not is_biconnected(g):
            return False
        if not self.hereditary_ok(g):
            return False
        if self.fvector is not None and fvector_of(g) != self.fvector:
            return False
        return True


def check_feasible(n: int, spec: FilterSpec) -> Tuple[int, int]:
    """Validate the enumeration size and return the edge range to grow to."""
    if n < 0:
        raise EnumerationSizeError("vertex count cannot be negative, got {}".format(n))
    if n > MAX_ORDER:
        raise EnumerationSizeError(
            "exhaustive enumeration is limited to n <= {}, got n = {}".format(MAX_ORDER, n)
        )
    if spec.fvector is not None and spec.fvector.f0 != n:
        raise EnumerationSizeError("f-vector {} does not have f0 = {}".format(tuple(spec.fvector), n))
    lo, hi = spec.edge_range(n)
    if n == MAX_ORDER and (spec.edges is None and spec.fvector is None or hi > MAX_EDGES_AT_MAX_ORDER):
        raise EnumerationSizeError(
            "n = {} needs an edge range with hi <= {} (the triangle-free planar edge bound); "
            "the unbounded space has 2^36 edge sets".format(MAX_ORDER, MAX_EDGES_AT_MAX_ORDER)
        )
    return lo, hi


def _extend_chunk(spec: FilterSpec, chunk: Sequence[Graph]) -> Dict[str, Graph]:
    """Canonical one-edge extensions of a chunk of classes that pass the hereditary filters."""
    found: Dict[str, Graph] = {}
    rejected = set()
    for g in chunk:
        for u, v in non_edges(g):
            if spec.triangle_free and g.adjacency[u] & g.adjacency[v]:
                continue
            h = canonical_graph(add_edge(g, u, v))
            key = write_graph6(h)
            if key in found or key in rejected:
                continue
            if spec.hereditary_ok(h):
                found[key] = h
            else:
                rejected.add(key)
    return found


def enumerate_graphs(
    n: int,
    spec: FilterSpec = FilterSpec(),
    jobs: int = 1,
    thread: bool = False
) -> Iterator[Graph]:
    """Yield one canonical representative per isomorphism class of n-vertex graphs passing `spec`.

    Parameters
    ----------
    n: int
        number of vertices, at most 9
    spec: FilterSpec
        filter flags, edge range and optional exact f-vector
    jobs: int
        number of workers used to extend each level
    thread: bool
        use threads instead of processes for the workers

    Returns
    -------
    graphs: Iterator[Graph]
        classes ordered by edge count, then by graph6 encoding of the canonical representative
    """
    lo, hi = check_feasible(n, spec)
    level = {write_graph6(empty_graph(n)): empty_graph(n)}
    extend = partial(_extend_chunk, spec)
    with worker_pool(jobs, thread) as executor:
        for k in range(hi + 1):
            if k >= lo:
                emitted = 0
                for key in sorted(level):
                    if spec.accepts(level[key]):
                        emitted += 1
                        yield level[key]
                logging.debug("n = {}, {} edges: {} classes grown, {} emitted".format(n, k, len(level), emitted))
            if k == hi or not level:
                break
            frontier = [level[key] for key in sorted(level)]
            merged: Dict[str, Graph] = {}
            for found in map_chunks(extend, frontier, jobs=jobs, executor=executor):
                for key, h in found.items():
                    merged.setdefault(key, h)
            level = merged


@dataclass(frozen=True)
class CatalogEntry:
    canonical: str
    edges: Tuple[Tuple[int, int], ...]
    fvector: FVector
    bipartite: bool
    degree_sequence: Tuple[int, ...]

    @classmethod
    def from_graph(cls, g: Graph) -> "CatalogEntry":
        rep = canonical_graph(g)
        return cls(
            canonical=write_graph6(rep),
            edges=tuple(edges(rep)),
            fvector=fvector_of(rep),
            bipartite=is_bipartite(rep),
            degree_sequence=degree_sequence(rep),
        )

    @property
    def graph(self) -> Graph:
        return parse_graph6(self.canonical)

    @property
    def classification(self) -> Classification:
        return classify(self.fvector)

    def to_dict(self) -> dict:
        return {
            "graph6": self.canonical,
            "edges": [list(e) for e in self.edges],
            "fvector": list(self.fvector),
            "delta": euler_polynomial(self.fvector).delta,
            "verdict": self.classification.value,
            "bipartite": self.bipartite,
            "degree_sequence": list(self.degree_sequence),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


THEOREM5_FVECTOR = FVector(7, 9, 4)
EXTENSION_FVECTOR = FVector(7, 10, 5)


def _triangle_free_biconnected(fvector: FVector) -> FilterSpec:
    return FilterSpec(connected=True, biconnected=True, triangle_free=True, planar=True, fvector=fvector)


def theorem5_catalog(jobs: int = 1) -> List[CatalogEntry]:
    """All 2-connected triangle-free planar graphs with f-vector (7, 9, 4), one entry per class."""
    catalog = [CatalogEntry.from_graph(g) for g in enumerate_graphs(7, _triangle_free_biconnected(THEOREM5_FVECTOR), jobs=jobs)]
    for entry in catalog:
        if entry.classification is not Classification.COMPLEX:
            raise RuntimeError("catalog entry {} is not complex".format(entry.canonical))
    logging.info("minimal triangle-free catalog: {} classes, {} bipartite".format(len(catalog), sum(e.bipartite for e in catalog)))
    return catalog


def theorem5_extension(jobs: int = 1) -> List[CatalogEntry]:
    """All 2-connected triangle-free planar graphs with f-vector (7, 10, 5), found by direct enumeration."""
    return [CatalogEntry.from_graph(g) for g in enumerate_graphs(7, _triangle_free_biconnected(EXTENSION_FVECTOR), jobs=jobs)]


def theorem5_parent_pool(jobs: int = 1) -> List[CatalogEntry]:
    """All connected triangle-free planar graphs with f-vector (7, 9, 4), 2-connected or not.

    Deleting an edge of a 2-connected graph leaves it connected, so every (7, 10, 5) class has a parent here
    even when none of its parents is 2-connected.
    """
    spec = FilterSpec(connected=True, triangle_free=True, planar=True, fvector=THEOREM5_FVECTOR)
    return [CatalogEntry.from_graph(g) for g in enumerate_graphs(7, spec, jobs=jobs)]


def extension_parents(
    extension: Sequence[CatalogEntry],
    catalog: Sequence[CatalogEntry]
) -> Dict[str, List[str]]:
    """For each extension class, the catalog classes obtained from it by deleting one edge.

    Returns
    -------
    parents: Dict[str, List[str]]
        graph6 of each extension entry mapped to the sorted graph6 codes of its catalog parents
    """
    known = {entry.canonical for entry in catalog}
    parents = {}
    for entry in extension:
        g = entry.graph
        found = set()
        for u, v in entry.edges:
            key = write_graph6(canonical_graph(remove_edge(g, u, v)))
            if key in known:
                found.add(key)
        parents[entry.canonical] = sorted(found)
    return parents
