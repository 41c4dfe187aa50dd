"""
============
Constructors for the named graph families and witness graphs.
============

`path`, `cycle`, `star`, `complete` and `complete_bipartite` build the classic families.

`grid` builds the rectangular grid P_m x P_n, and `grid_fvector` gives its f-vector in closed form.

`maximal_triangulation` builds a stacked triangulation on n vertices: start from a triangle and insert each
new vertex into a face, joined to the three corners of that face.

`fig2_witness` is the 9-vertex complex triangle-free planar graph, and `fig2_cascade` the graphs obtained
from it by deleting degree-2 vertices.
"""

from collections import deque
from dataclasses import dataclass
from typing import List, Optional, Tuple

from PlanarEuler.euler_utils import FVector
from PlanarEuler.graph_utils import Graph, GraphError, edges, from_edge_list, remove_edge, remove_vertex

FIG2_LABELS = "abcdefghk"

FIG2_EDGES = [
	("a", "b"), ("a", "d"), ("a", "e"), ("a", "g"),
	("h", "b"), ("h", "d"), ("h", "e"), ("h", "g"),
	("b", "c"), ("c", "d"),
	("e", "f"), ("f", "g"),
	("k", "b"), ("k", "g"),
]


@dataclass(frozen=True)
class GridSpec:
	m: int
	n: int

	def __post_init__(self):
		if self.m < 1 or self.n < 1:
			raise GraphError("grid dimensions must be positive, got {}x{}".format(self.m, self.n))


def path(n: int) -> Graph:
	"""Path P_n on n >= 1 vertices."""
	if n < 1:
		raise GraphError("a path needs at least one vertex, got n = {}".format(n))
	return from_edge_list(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
	"""Cycle C_n on n >= 3 vertices."""
	if n < 3:
		raise GraphError("a cycle needs at least 3 vertices, got n = {}".format(n))
	return from_edge_list(n, [(i, (i + 1) % n) for i in range(n)])


def star(k: int) -> Graph:
	"""Star K_{1,k}; vertex 0 is the centre."""
	return from_edge_list(k + 1, [(0, i) for i in range(1, k + 1)])


def complete(n: int) -> Graph:
	return from_edge_list(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
	return from_edge_list(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def grid(spec: GridSpec) -> Graph:
	"""Cartesian product P_m x P_n. Vertex (i, j) has id i * n + j.

	Parameters
	----------
	spec: GridSpec
		grid dimensions

	Returns
	-------
	g: Graph
		grid with mn vertices, 2mn - m - n edges and (m - 1)(n - 1) + 1 faces
	"""
	m, n = spec.m, spec.n
	pairs = []
	for i in range(m):
		for j in range(n):
			v = i * n + j
			if j + 1 < n:
				pairs.append((v, v + 1))
			if i + 1 < m:
				pairs.append((v, v + n))
	return from_edge_list(m * n, pairs)


def grid_fvector(spec: GridSpec) -> FVector:
	m, n = spec.m, spec.n
	return FVector(m * n, 2 * m * n - m - n, (m - 1) * (n - 1) + 1)


def maximal_triangulation(n: int) -> Graph:
	"""Stacked maximal planar triangulation on n >= 3 vertices.

	Faces are kept in a queue, both sides of the starting triangle included. Each new vertex goes into the
	oldest face, which is replaced by the three faces around the new vertex. Every step adds one vertex,
	three edges and two faces, so the result has f-vector (n, 3n - 6, 2n - 4).
	"""
	if n < 3:
		raise GraphError("a triangulation needs at least 3 vertices, got n = {}".format(n))
	pairs = [(0, 1), (1, 2), (0, 2)]
	faces = deque([(0, 1, 2), (0, 1, 2)])
	for v in range(3, n):
		a, b, c = faces.popleft()
		pairs.extend([(a, v), (b, v), (c, v)])
		faces.extend([(a, b, v), (b, c, v), (a, c, v)])
	return from_edge_list(n, pairs)


def triangulation_minus_edge(n: int, edge: Optional[Tuple[int, int]] = None) -> Graph:
	"""`maximal_triangulation(n)` with `edge` removed, by default its last edge.

	Every such graph is connected and planar with f-vector (n, 3n - 7, 2n - 5).
	"""
	g = maximal_triangulation(n)
	u, v = edge if edge is not None else list(edges(g))[-1]
	return remove_edge(g, u, v)


def fig2_vertex(label: str) -> int:
	if label not in FIG2_LABELS:
		raise GraphError("unknown witness vertex {!r}, expected one of {}".format(label, FIG2_LABELS))
	return FIG2_LABELS.index(label)


def fig2_witness() -> Graph:
	"""The complex triangle-free planar graph on 9 vertices a..h, k (ids 0..8), f-vector (9, 14, 7).

	The drawn segments b-c-d and e-f-g pass through c and f, so each counts as two edges.
	"""
	return from_edge_list(len(FIG2_LABELS), [(fig2_vertex(u), fig2_vertex(v)) for u, v in FIG2_EDGES])


def fig2_cascade() -> List[Graph]:
	"""The witness, then the witness minus c, then that graph minus f: orders 9, 8 and 7."""
	g9 = fig2_witness()
	c = fig2_vertex("c")
	g8 = remove_vertex(g9, c)
	# ids above c shift down by one
	f = fig2_vertex("f") - 1
	g7 = remove_vertex(g8, f)
	return [g9, g8, g7]
