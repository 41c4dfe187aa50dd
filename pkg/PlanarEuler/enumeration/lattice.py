"""
============
Connected subgraphs of the square lattice, up to translation.
============

`enumerate_lattice_subgraphs` grows connected lattice graphs one unit edge at a time, each new edge joining
two present vertices or a present vertex to a new one. Every connected lattice graph with at least one edge
loses an edge (a cycle edge, or a pendant edge together with its leaf) and stays connected, so growth from the
single vertex reaches every class. Each class is translated so that its least vertex in (y, x) order sits at
the origin before dedup.

`to_abstract` forgets coordinates. `three_square_unions` counts the connected unions of three unit squares.
"""

import itertools
import logging
from dataclasses import dataclass
from functools import partial
from typing import Dict, FrozenSet, Iterator, List, Sequence, Set, Tuple

from PlanarEuler.canonical_utils import canonical_form
from PlanarEuler.enumeration.pool import map_chunks, worker_pool
from PlanarEuler.euler_utils import FVector
from PlanarEuler.graph_utils import Graph, GraphError, from_edge_list, is_connected, iter_bits

Point = Tuple[int, int]
Edge = Tuple[Point, Point]

MAX_LATTICE_ORDER = 10

#Packed layout: vertex (x, y) has index y * WIDTH + x + OFFSET, with the anchor at (0, 0). Vertices of a
#normalised graph with at most MAX_LATTICE_ORDER vertices satisfy |x| < OFFSET and 0 <= y < OFFSET, so every
#index and every neighbour index fits in its row. Edge bit 2 * i is the edge from index i to its right
#neighbour, edge bit 2 * i + 1 the edge to the neighbour above.
WIDTH = 21
OFFSET = 10


def _index(p: Point) -> int:
	return p[1] * WIDTH + p[0] + OFFSET


def _point(i: int) -> Point:
	y, x = divmod(i, WIDTH)
	return (x - OFFSET, y)


@dataclass(frozen=True)
class LatticeGraph:
	vertices: FrozenSet[Point]
	edges: FrozenSet[Edge]

	def __post_init__(self):
		if not self.vertices:
			raise GraphError("a lattice graph needs at least one vertex")
		for p, q in self.edges:
			if p not in self.vertices or q not in self.vertices:
				raise GraphError("edge {}-{} has an endpoint outside the vertex set".format(p, q))
			if abs(p[0] - q[0]) + abs(p[1] - q[1]) != 1:
				raise GraphError("edge {}-{} does not have unit length".format(p, q))

	@classmethod
	def from_edges(cls, pairs: Sequence[Edge], extra_vertices: Sequence[Point] = ()) -> "LatticeGraph":
		"""Build from unit edges given as point pairs; endpoints are added to the vertex set."""
		vertices = set(extra_vertices)
		edges = set()
		for p, q in pairs:
			p, q = tuple(p), tuple(q)
			vertices.update((p, q))
			edges.add((min(p, q), max(p, q)))
		return cls(frozenset(vertices), frozenset(edges))

	@classmethod
	def from_masks(cls, vmask: int, emask: int) -> "LatticeGraph":
		vertices = frozenset(_point(i) for i in iter_bits(vmask))
		edges = set()
		for bit in iter_bits(emask):
			i, up = divmod(bit, 2)
			j = i + WIDTH if up else i + 1
			edges.add((_point(i), _point(j)))
		return cls(vertices, frozenset(edges))

	@property
	def order(self) -> int:
		return len(self.vertices)

	@property
	def fvector(self) -> FVector:
		"""f-vector of a connected lattice graph. The drawing on the lattice is a plane embedding."""
		v, e = len(self.vertices), len(self.edges)
		return FVector(v, e, 2 - v + e)

	def normalized(self) -> "LatticeGraph":
		"""Translate so the least vertex in (y, x) order is the origin."""
		x0, y0 = min(self.vertices, key=lambda p: (p[1], p[0]))
		def shift(p: Point) -> Point:
			return (p[0] - x0, p[1] - y0)

		return LatticeGraph(
			frozenset(shift(p) for p in self.vertices),
			frozenset((shift(p), shift(q)) for p, q in self.edges),
		)

	def to_masks(self) -> Tuple[int, int]:
		"""Packed (vertex, edge) bitmasks of the normalised graph."""
		g = self.normalized()
		if g.order > MAX_LATTICE_ORDER:
			raise GraphError("packed lattice graphs hold at most {} vertices, got {}".format(MAX_LATTICE_ORDER, g.order))
		vmask = 0
		for p in g.vertices:
			vmask |= 1 << _index(p)
		emask = 0
		for p, q in g.edges:
			emask |= 1 << (2 * _index(p) + (q[1] != p[1]))
		return vmask, emask


def to_abstract(lg: LatticeGraph) -> Graph:
	"""Forget coordinates. Vertices are numbered in (y, x) order."""
	order = sorted(lg.vertices, key=lambda p: (p[1], p[0]))
	ids = {p: i for i, p in enumerate(order)}
	return from_edge_list(len(order), [(ids[p], ids[q]) for p, q in lg.edges])


def _normalize(vmask: int, emask: int) -> Tuple[int, int]:
	shift = (vmask & -vmask).bit_length() - 1 - OFFSET
	if shift >= 0:
		return vmask >> shift, emask >> (2 * shift)
	return vmask << -shift, emask << (-2 * shift)


def _grow_chunk(v_max: int, chunk: Sequence[Tuple[int, int]]) -> Set[Tuple[int, int]]:
	"""Normalised one-edge extensions of a chunk of packed lattice graphs."""
	found = set()
	for vmask, emask in chunk:
		#lift one row so that neighbours below the anchor keep a non-negative index
		vmask, emask = vmask << WIDTH, emask << (2 * WIDTH)
		full = vmask.bit_count() >= v_max
		for i in iter_bits(vmask):
			for bit, j in ((2 * i, i + 1), (2 * i + 1, i + WIDTH), (2 * (i - 1), i - 1), (2 * (i - WIDTH) + 1, i - WIDTH)):
				if emask >> bit & 1:
					continue
				new_vertex = not vmask >> j & 1
				if new_vertex and full:
					continue
				found.add(_normalize(vmask | 1 << j, emask | 1 << bit))
	return found


def enumerate_lattice_subgraphs(
	v_min: int,
	v_max: int,
	jobs: int = 1,
	thread: bool = False
) -> Iterator[LatticeGraph]:
	"""Yield every connected lattice subgraph with v_min..v_max vertices, once per translation class.

	Subgraphs need not be induced: two present vertices at distance one may or may not be joined.

	Parameters
	----------
	v_min: int
		smallest vertex count to emit
	v_max: int
		largest vertex count to emit, at most 10
	jobs: int
		number of workers used to extend each level

	Returns
	-------
	graphs: Iterator[LatticeGraph]
		normalised graphs, grouped by edge count
	"""
	if v_max > MAX_LATTICE_ORDER:
		raise GraphError(
			"lattice enumeration is limited to v_max <= {}, got {}".format(MAX_LATTICE_ORDER, v_max)
		)
	if v_min < 1 or v_min > v_max:
		raise GraphError("vertex range [{}, {}] must satisfy 1 <= v_min <= v_max".format(v_min, v_max))

	level = {(1 << OFFSET, 0)}
	grow = partial(_grow_chunk, v_max)
	n_edges = 0
	total = 0
	with worker_pool(jobs, thread) as executor:
		while level:
			frontier = sorted(level)
			emitted = 0
			for vmask, emask in frontier:
				if v_min <= vmask.bit_count() <= v_max:
					emitted += 1
					yield LatticeGraph.from_masks(vmask, emask)
			total += emitted
			logging.debug("lattice level with {} edges: {} classes, {} emitted".format(n_edges, len(frontier), emitted))
			level = set()
			for found in map_chunks(grow, frontier, jobs=jobs, executor=executor):
				level |= found
			n_edges += 1
	logging.info("{} lattice classes with {}..{} vertices".format(total, v_min, v_max))


def _square(cell: Point) -> List[Edge]:
	x, y = cell
	return [((x, y), (x + 1, y)), ((x, y + 1), (x + 1, y + 1)), ((x, y), (x, y + 1)), ((x + 1, y), (x + 1, y + 1))]


def three_square_unions() -> Dict[str, int]:
	"""Count connected unions of three distinct unit squares of the lattice.

	Squares are named by their lower-left corner. A union counts when its graph is connected, so squares may
	meet along an edge or at a corner. The counts are given up to translation and up to graph isomorphism,
	for all such unions and for those whose squares are joined through shared edges only.

	Returns
	-------
	counts: Dict[str, int]
		keys "translation", "isomorphism", "edge_joined_translation" and "edge_joined_isomorphism"
	"""
	#a connected union of three squares fits in a window of three squares on each side of the first one
	cells = [(x, y) for y in range(0, 3) for x in range(-2, 3) if (y, x) > (0, 0)]
	translation, isomorphism = set(), set()
	edge_translation, edge_isomorphism = set(), set()
	for second, third in itertools.combinations(cells, 2):
		squares = [(0, 0), second, third]
		lg = LatticeGraph.from_edges([e for cell in squares for e in _square(cell)])
		g = to_abstract(lg)
		if not is_connected(g):
			continue
		key = lg.to_masks()
		form = canonical_form(g)
		translation.add(key)
		isomorphism.add(form)
		if _edge_joined(squares):
			edge_translation.add(key)
			edge_isomorphism.add(form)
	counts = {
		"translation": len(translation),
		"isomorphism": len(isomorphism),
		"edge_joined_translation": len(edge_translation),
		"edge_joined_isomorphism": len(edge_isomorphism),
	}
	logging.info("three-square unions: {}".format(counts))
	return counts


def _edge_joined(squares: Sequence[Point]) -> bool:
	"""True if the squares form a connected polyomino."""
	seen = {squares[0]}
	stack = [squares[0]]
	while stack:
		x, y = stack.pop()
		for cell in ((x + 1, y), (x - 1, y), (x, y + 1), (x, y - 1)):
			if cell in squares and cell not in seen:
				seen.add(cell)
				stack.append(cell)
	return len(seen) == len(squares)
