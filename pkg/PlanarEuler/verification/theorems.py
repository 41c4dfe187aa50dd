"""
============
Verifiers for the real/complex classification results.
============

Each `verify_*` function checks one claim over an explicitly bounded domain and returns a `TheoremReport`.
Bounds come from a `VerifyConfig`.

`verify_theorem1`: trees, cycles and square grids flip from complex to real at 5, 6 and 3.

`verify_theorem2`: rectangular grids are real except G_{1,1..4} and G_{2,2..3}.

`verify_theorem3`: every planar graph with f0 >= 18, and every triangle-free one with f0 >= 10, is real.

`verify_corollary`: maximal triangulations are complex exactly for 3 <= f0 <= 17.

`verify_theorem4`: connected lattice subgraphs with at least 7 vertices are real.

`verify_theorem5`: the minimal complex 2-connected triangle-free graphs on 7 vertices, checked against the
networkx graph atlas.

`verify_lemma1`, `verify_lemma2`, `verify_small_levels`, `verify_polynomial` and `verify_infrastructure`
cover the edge bounds, degree-2 deletion, the classification of graphs on at most 6 vertices, the algebra of
the Euler polynomial and the graph6 / canonical form machinery.

`run_verifiers` runs a selection of verifiers, optionally in a process pool.
"""

import logging
import time
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from functools import lru_cache
from typing import Callable, Dict, List, Sequence, Set, Tuple

import networkx as nx
import numpy as np

from PlanarEuler.canonical_utils import canonical_form, canonical_graph
from PlanarEuler.enumeration.graphs import (
    EXTENSION_FVECTOR,
    THEOREM5_FVECTOR,
    FilterSpec,
    enumerate_graphs,
    extension_parents,
    theorem5_catalog,
    theorem5_extension,
    theorem5_parent_pool,
)
from PlanarEuler.enumeration.lattice import enumerate_lattice_subgraphs, three_square_unions, to_abstract
from PlanarEuler.euler_utils import (
    Classification,
    FVector,
    classify,
    classify_graph,
    delete_degree2_preserves_complex,
    euler_polynomial,
    factorization_holds,
    fvector_of,
    numeric_all_real,
    numeric_roots,
    quadratic_bound_window,
    roots,
)
from PlanarEuler.generator_utils import (
    GridSpec,
    cycle,
    fig2_cascade,
    fig2_vertex,
    fig2_witness,
    grid,
    grid_fvector,
    maximal_triangulation,
    path,
    triangulation_minus_edge,
)
from PlanarEuler.graph_io import parse_graph6, write_graph6
from PlanarEuler.graph_utils import (
    Graph,
    degree,
    edges,
    from_networkx,
    has_triangle,
    is_biconnected,
    is_bipartite,
    is_connected,
    relabel,
    remove_vertex,
    to_networkx,
)
from PlanarEuler.planarity_utils import is_planar
from PlanarEuler.verification.report import TheoremReport, VerifyConfig

REAL = Classification.REAL
COMPLEX = Classification.COMPLEX

GRID_EXCEPTIONS = {(1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 3)}

#nx.graph_atlas_g() lists every graph on 0..7 vertices
ATLAS_MAX_ORDER = 7

#1 + 4 + 7 drawings, split by the length of the outer face
PUBLISHED_CATALOG_SIZE = 12

#relative gap below which the two cofactor roots of a boundary vector count as one double root
DOUBLE_ROOT_TOL = 1e-6


def _record(g: Graph, **extra) -> dict:
    record = {"graph6": write_graph6(g), "edges": [list(e) for e in edges(g)]}
    if g.n and is_connected(g) and is_planar(g):
        record["fvector"] = list(fvector_of(g))
    record.update(extra)
    return record


def _elapsed(start: float) -> float:
    return round(time.perf_counter() - start, 3)


@lru_cache(maxsize=None)
def connected_planar_graphs(n: int, jobs: int = 1) -> Tuple[Graph, ...]:
    """All connected planar graphs on n vertices, one per isomorphism class. Cached per process."""
    graphs = tuple(enumerate_graphs(n, FilterSpec(connected=True, planar=True), jobs=jobs))
    logging.info("{} connected planar graphs on {} vertices".format(len(graphs), n))
    return graphs


def verify_theorem1(config: VerifyConfig = VerifyConfig()) -> TheoremReport:
    start = time.perf_counter()
    bad = []
    for n in range(1, config.max_tree_order + 1):
        f = FVector(n, n - 1, 1)
        expected = REAL if n >= 5 else COMPLEX
        if fvector_of(path(n)) != f or classify(f) is not expected:
            bad.append({"family": "tree", "n": n, "fvector": list(f), "verdict": classify(f).value})
    for n in range(3, config.max_cycle_order + 1):
        f = FVector(n, n, 2)
        expected = REAL if n >= 6 else COMPLEX
        if fvector_of(cycle(n)) != f or classify(f) is not expected:
            bad.append({"family": "cycle", "n": n, "fvector": list(f), "verdict": classify(f).value})
    for n in range(2, config.max_square_grid + 1):
        verdict = classify_graph(grid(GridSpec(n, n)))
        if verdict is not (REAL if n >= 3 else COMPLEX):
            bad.append({"family": "square grid", "n": n, "verdict": verdict.value})

    #every tree on n vertices has f-vector (n, n - 1, 1), so each enumerated tree gets the same verdict
    tree_counts = {}
    for n in range(1, config.enumerated_tree_order + 1):
        trees = list(enumerate_graphs(n, FilterSpec(connected=True, edges=(n - 1, n - 1)), jobs=config.jobs))
        tree_counts[str(n)] = len(trees)
        expected = REAL if n >= 5 else COMPLEX
        bad.extend(_record(t, family="enumerated tree") for t in trees if classify_graph(t) is not expected)

    return TheoremReport.conclude(
        "1",
        "trees 1..{}, cycles 3..{}, square grids 2..{}, all trees up to {} vertices".format(
            config.max_tree_order, config.max_cycle_order, config.max_square_grid, config.enumerated_tree_order
        ),
        bad,
        _elapsed(start),
        {"tree_counts": tree_counts, "tree_flip": 5, "cycle_flip": 6, "square_grid_flip": 3},
    )


def verify_theorem2(config: VerifyConfig = VerifyConfig()) -> TheoremReport:
    start = time.perf_counter()
    bad = []
    exceptions = []
    pairs = 0
    for m in range(1, config.max_grid_side + 1):
        for n in range(m, config.max_grid_side + 1):
            pairs += 1
            spec = GridSpec(m, n)
            f = grid_fvector(spec)
            if fvector_of(grid(spec)) != f:
                bad.append({"grid": [m, n], "formula": list(f), "constructed": list(fvector_of(grid(spec)))})
            if classify(f) is COMPLEX:
                exceptions.append([m, n])
            if classify(f) is not (COMPLEX if (m, n) in GRID_EXCEPTIONS else REAL):
                bad.append({"grid": [m, n], "fvector": list(f), "verdict": classify(f).value})
    return TheoremReport.conclude(
        "2",
        "grids G_(m,n) with 1 <= m <= n <= {}".format(config.max_grid_side),
        bad,
        _elapsed(start),
        {"pairs": pairs, "exceptions": exceptions},
    )


def verify_theorem3(config: VerifyConfig = VerifyConfig()) -> TheoremReport:
    start = time.perf_counter()
    bad = []

    #worst cases: f1 = 3 f0 - 6 in general, f1 = 2 f0 - 4 when triangle-free
    f0 = np.arange(18, config.bound + 1, dtype=np.int64)
    margin = (f0 + 2) ** 2 - 8 * (3 * f0 - 4)
    bad.extend({"scan": "general", "f0": int(x)} for x in f0[margin < 0])
    general_equality = [int(x) for x in f0[margin == 0]]

    f0 = np.arange(10, config.bound + 1, dtype=np.int64)
    margin = (f0 + 2) ** 2 - 16 * (f0 - 1)
    bad.extend({"scan": "triangle-free", "f0": int(x)} for x in f0[margin < 0])
    triangle_free_equality = [int(x) for x in f0[margin == 0]]

    if general_equality[:1] != [18]:
        bad.append({"scan": "general", "expected_equality_at": 18, "found": general_equality})
    if triangle_free_equality[:1] != [10]:
        bad.append({"scan": "triangle-free", "expected_equality_at": 10, "found": triangle_free_equality})

    t17 = maximal_triangulation(17)
    if fvector_of(t17) != FVector(17, 45, 30) or classify_graph(t17) is not COMPLEX:
        bad.append(_record(t17, witness="maximal triangulation on 17 vertices"))
    w = fig2_witness()
    if has_triangle(w) or fvector_of(w) != FVector(9, 14, 7) or classify_graph(w) is not COMPLEX:
        bad.append(_record(w, witness="triangle-free graph on 9 vertices"))

    general_window = quadratic_bound_window(config.bound)
    triangle_free_window = quadratic_bound_window(config.bound, triangle_free=True)
    if general_window != tuple(range(3, 18)):
        bad.append({"window": "general", "found": list(general_window)})
    if triangle_free_window != tuple(range(3, 10)):
        bad.append({"window": "triangle-free", "found": list(triangle_free_window)})

    return TheoremReport.conclude(
        "3",
        "worst-case f-vectors for 18 <= f0 <= {0} (general) and 10 <= f0 <= {0} (triangle-free); "
        "sharpness witnesses on 17 and 9 vertices".format(config.bound),
        bad,
        _elapsed(start),
        {
            "general_equality": general_equality,
            "triangle_free_equality": triangle_free_equality,
            "general_window": [general_window[0], general_window[-1]] if general_window else [],
            "triangle_free_window": [triangle_free_window[0], triangle_free_window[-1]] if triangle_free_window else [],
        },
    )


def verify_corollary(config: VerifyConfig = VerifyConfig()) -> TheoremReport:
    start = time.perf_counter()
    bad = []
    complex_orders = []
    for n in range(3, config.max_triangulation_order + 1):
        f = FVector(n, 3 * n - 6, 2 * n - 4)
        if fvector_of(maximal_triangulation(n)) != f:
            bad.append(_record(maximal_triangulation(n), expected=list(f)))
        if classify(f) is COMPLEX:
            complex_orders.append(n)
        if classify(f) is not (COMPLEX if n <= 17 else REAL):
            bad.append({"fvector": list(f), "verdict": classify(f).value})

    #connected graphs on 17 vertices have 16..45 edges
    complex_edges = [f1 for f1 in range(16, 46) if classify(FVector(17, f1, f1 - 15)) is COMPLEX]
    if complex_edges != [44, 45]:
        bad.append({"order": 17, "complex_edge_counts": complex_edges})

    t17 = maximal_triangulation(17)
    for u, v in edges(t17):
        h = triangulation_minus_edge(17, (u, v))
        if not is_connected(h) or not is_planar(h) or fvector_of(h) != FVector(17, 44, 29) or classify_graph(h) is not COMPLEX:
            bad.append(_record(h, removed=[u, v]))

    return TheoremReport.conclude(
        "corollary",
        "maximal triangulations on 3..{} vertices; edge counts 16..45 on 17 vertices; "
        "all single-edge deletions of a 17-vertex triangulation".format(config.max_triangulation_order),
        bad,
        _elapsed(start),
        {"complex_orders": [complex_orders[0], complex_orders[-1]], "complex_edge_counts_at_17": complex_edges},
    )


def verify_lemma1(config: VerifyConfig = VerifyConfig()) -> TheoremReport:
    start = time.perf_counter()
    bad = []
    max_edges: Dict[str, List[int]] = {}
    for n in range(3, config.enumeration_max_order + 1):
        general, triangle_free = 0, 0
        for g in connected_planar_graphs(n, config.jobs):
            m = g.edge_count
            general = max(general, m)
            if m > 3 * (n - 2):
                bad.append(_record(g, bound="3(f0 - 2)"))
            if not has_triangle(g):
                triangle_free = max(triangle_free, m)
                if m > 2 * (n - 2):
                    bad.append(_record(g, bound="2(f0 - 2)"))
        max_edges[str(n)] = [general, triangle_free]
        if general != 3 * (n - 2) or triangle_free != 2 * (n - 2):
            bad.append({"order": n, "max_edges": general, "max_triangle_free_edges": triangle_free})
        if maximal_triangulation(n).edge_count != 3 * (n - 2):
            bad.append(_record(maximal_triangulation(n), bound="equality for triangulations"))
    return TheoremReport.conclude(
        "lemma1",
        "all connected planar graphs with 3..{} vertices".format(config.enumeration_max_order),
        bad,
        _elapsed(start),
        {"max_edges": max_edges},
    )


def verify_lemma2(config: VerifyConfig = VerifyConfig()) -> TheoremReport:
    """Degree-2 deletion keeps complex graphs complex.

    Only deletions that leave the graph connected are checked, since the face count of a disconnected
    graph is not defined here; the report is therefore partially checked.
    """
    start = time.perf_counter()
    bad = []
    checked = Counter()
    disconnecting = Counter()
    for n in config.lemma2_orders:
        for g in connected_planar_graphs(n, config.jobs):
            if classify_graph(g) is not COMPLEX:
                continue
            for x in range(n):
                if degree(g, x) != 2:
                    continue
                if not is_connected(remove_vertex(g, x)):
                    disconnecting[str(n)] += 1
                    continue
                checked[str(n)] += 1
                if not delete_degree2_preserves_complex(g, x):
                    bad.append(_record(g, vertex=x))

    g9, g8, g7 = fig2_cascade()
    cascade = [
        (g9, fig2_vertex("c"), g8),
        (g8, fig2_vertex("f") - 1, g7),
    ]
    for g, x, expected in cascade:
        if not delete_degree2_preserves_complex(g, x) or remove_vertex(g, x) != expected:
            bad.append(_record(g, vertex=x, step="witness cascade"))
    cascade_fvectors = [list(fvector_of(g)) for g in (g9, g8, g7)]

    return TheoremReport.conclude(
        "lemma2",
        "complex connected planar graphs on {} vertices, deletions that keep the graph connected; "
        "witness cascade 9 -> 8 -> 7".format(", ".join(map(str, config.lemma2_orders))),
        bad,
        _elapsed(start),
        {
            "checked_deletions": dict(checked),
            "skipped_disconnecting_deletions": dict(disconnecting),
            "cascade_fvectors": cascade_fvectors,
        },
        partial=True,
    )


def verify_theorem4(config: VerifyConfig = VerifyConfig()) -> TheoremReport:
    start = time.perf_counter()
    bad = []
    counts = Counter()
    cross_checked = 0
    for i, lg in enumerate(enumerate_lattice_subgraphs(config.lattice_min, config.lattice_max, jobs=config.jobs)):
        counts[str(lg.order)] += 1
        verdict = classify(lg.fvector)
        #spot check the Euler-relation f-vector against the abstract graph
        if i % 97 == 0:
            g = to_abstract(lg)
            cross_checked += 1
            if fvector_of(g) != lg.fvector or not is_bipartite(g):
                bad.append(_record(g, check="lattice f-vector"))
        if verdict is not REAL:
            bad.append({
                "vertices": sorted(map(list, lg.vertices)),
                "edges": sorted([list(p), list(q)] for p, q in lg.edges),
                "fvector": list(lg.fvector),
            })
    return TheoremReport.conclude(
        "4",
        "all connected lattice subgraphs with {}..{} vertices up to translation; larger grid graphs are "
        "triangle-free with f0 >= 10 and fall under theorem 3".format(config.lattice_min, config.lattice_max),
        bad,
        _elapsed(start),
        {"classes_by_order": dict(counts), "cross_checked": cross_checked, "three_square_unions": three_square_unions()},
    )


def atlas_classes(fvector: FVector, biconnected: bool = True) -> Set[str]:
    """Canonical graph6 codes of the connected triangle-free planar graphs with `fvector`, read from the
    networkx graph atlas, which lists every graph on at most 7 vertices.

    Independent of `enumerate_graphs`: only networkx decides connectivity, triangles and planarity.
    """
    f0, f1, _ = FVector(*fvector)
    if f0 > ATLAS_MAX_ORDER:
        raise ValueError("the graph atlas stops at {} vertices, got f0 = {}".format(ATLAS_MAX_ORDER, f0))
    found = set()
    for G in nx.graph_atlas_g():
        if G.number_of_nodes() != f0 or G.number_of_edges() != f1 or not nx.is_connected(G):
            continue
        if biconnected and not nx.is_biconnected(G):
            continue
        if any(nx.triangles(G).values()) or not nx.check_planarity(G)[0]:
            continue
        found.add(write_graph6(canonical_graph(from_networkx(G))))
    return found


def verify_theorem5(config: VerifyConfig = VerifyConfig()) -> TheoremReport:
    """The minimal complex 2-connected triangle-free graphs on 7 vertices and their 10-edge extensions.

    The published count of 12 splits drawings by outer face; it is reported next to the atlas count, and
    only a disagreement with the atlas is a counterexample.
    """
    start = time.perf_counter()
    bad = []
    catalog = theorem5_catalog(jobs=config.jobs)
    keys = {entry.canonical for entry in catalog}
    if len(keys) != len(catalog):
        bad.append({"catalog": "duplicate canonical forms"})
    atlas = atlas_classes(THEOREM5_FVECTOR)
    if keys != atlas:
        bad.append({"check": "catalog against graph atlas", "missing": sorted(atlas - keys), "extra": sorted(keys - atlas)})
    for entry in catalog:
        g = entry.graph
        if (
            entry.fvector != THEOREM5_FVECTOR
            or euler_polynomial(entry.fvector).delta != -7
            or not is_biconnected(g)
            or has_triangle(g)
            or min(entry.degree_sequence) < 2
            or sum(entry.degree_sequence) != 18
        ):
            bad.append(entry.to_dict())

    extension = theorem5_extension(jobs=config.jobs)
    extension_atlas = atlas_classes(EXTENSION_FVECTOR)
    extension_keys = {entry.canonical for entry in extension}
    if extension_keys != extension_atlas:
        bad.append({
            "check": "extension against graph atlas",
            "missing": sorted(extension_atlas - extension_keys),
            "extra": sorted(extension_keys - extension_atlas),
        })

    pool = theorem5_parent_pool(jobs=config.jobs)
    parents = extension_parents(extension, pool)
    bipartite_pool = {entry.canonical for entry in pool if entry.bipartite}
    #every face of a triangle-free plane graph with 10 edges and 5 faces is a 4-cycle
    for entry in extension:
        if (
            entry.fvector != EXTENSION_FVECTOR
            or entry.classification is not COMPLEX
            or euler_polynomial(entry.fvector).delta != -15
            or not entry.bipartite
            or not parents[entry.canonical]
            or not set(parents[entry.canonical]) <= bipartite_pool
        ):
            bad.append(entry.to_dict())
    without_biconnected = sorted(key for key, found in parents.items() if not keys & set(found))

    return TheoremReport.conclude(
        "5",
        "2-connected triangle-free planar graphs on 7 vertices with f-vectors (7, 9, 4) and (7, 10, 5), "
        "cross-checked against the networkx graph atlas; parents among all connected (7, 9, 4) graphs",
        bad,
        _elapsed(start),
        {
            "catalog_size": len(catalog),
            "catalog_bipartite": sum(entry.bipartite for entry in catalog),
            "catalog": [entry.canonical for entry in catalog],
            "atlas_catalog_size": len(atlas),
            "published_catalog_size": PUBLISHED_CATALOG_SIZE,
            "extension_size": len(extension),
            "extension_bipartite": sum(entry.bipartite for entry in extension),
            "parent_pool_size": len(pool),
            "extension_parents": parents,
            "extension_without_biconnected_parent": without_biconnected,
        },
    )


def verify_small_levels(config: VerifyConfig = VerifyConfig()) -> TheoremReport:
    start = time.perf_counter()
    bad = []
    table = {}
    for n in range(1, config.small_max_order + 1):
        real = 0
        graphs = connected_planar_graphs(n, config.jobs)
        for g in graphs:
            f = fvector_of(g)
            verdict = classify(f)
            real += verdict is REAL
            if n <= 4:
                expected = COMPLEX
            elif n == 5:
                expected = REAL if f.f2 == 1 else COMPLEX
            elif n == 6:
                expected = REAL if f.f2 <= 2 else COMPLEX
            else:
                continue
            if verdict is not expected:
                bad.append(_record(g, verdict=verdict.value))
        table[str(n)] = {"real": real, "complex": len(graphs) - real}
    return TheoremReport.conclude(
        "small",
        "all connected planar graphs with 1..{} vertices".format(config.small_max_order),
        bad,
        _elapsed(start),
        {"classes": table},
    )


def _generator_outputs(config: VerifyConfig) -> List[Graph]:
    graphs = [path(n) for n in range(1, config.max_tree_order + 1)]
    graphs += [cycle(n) for n in range(3, config.max_cycle_order + 1)]
    graphs += [grid(GridSpec(m, n)) for m in range(1, config.max_grid_side + 1) for n in range(m, config.max_grid_side + 1)]
    graphs += [maximal_triangulation(n) for n in range(3, config.max_triangulation_order + 1)]
    graphs += fig2_cascade()
    return graphs


def _oracle_disagrees(f: FVector) -> bool:
    p = euler_polynomial(f)
    real = classify(f) is REAL
    if roots(p).all_real != real:
        return True
    if p.delta != 0:
        return numeric_all_real(p) != real
    cofactor_roots = numeric_roots(p)[1:]
    return abs(cofactor_roots[0] - cofactor_roots[1]) >= DOUBLE_ROOT_TOL


def verify_polynomial(config: VerifyConfig = VerifyConfig()) -> TheoremReport:
    start = time.perf_counter()
    bad = []

    enumerated = [g for n in range(1, config.enumeration_max_order + 1) for g in connected_planar_graphs(n, config.jobs)]
    fvectors = Counter(fvector_of(g) for g in enumerated + _generator_outputs(config))
    for f in fvectors:
        if not factorization_holds(f):
            bad.append({"check": "factorization", "fvector": list(f)})

    pairs = 0
    for f0 in range(1, config.bound + 1):
        f1 = np.arange(f0 - 1, max(f0 - 1, 3 * f0 - 6) + 1, dtype=np.int64)
        f2 = f1 - f0 + 2
        one = np.sign((f0 + 2) ** 2 - 8 * (f1 + 2))
        two = np.sign((f0 - 2) ** 2 - 8 * f2)
        pairs += len(f1)
        for x in f1[one != two]:
            bad.append({"check": "inequality equivalence", "fvector": [f0, int(x), int(x) - f0 + 2]})

    boundary = []
    for f in sorted(fvectors):
        if euler_polynomial(f).delta == 0:
            boundary.append(list(f))
        if _oracle_disagrees(f):
            bad.append({"check": "root oracle", "fvector": list(f)})

    return TheoremReport.conclude(
        "polynomial",
        "factorization over {} enumerated graphs and {} distinct f-vectors; inequality equivalence for "
        "f0 <= {}; root oracle on each of them".format(len(enumerated), len(fvectors), config.bound),
        bad,
        _elapsed(start),
        {"enumerated_graphs": len(enumerated), "equivalence_pairs": pairs, "boundary_fvectors": boundary},
    )


def verify_infrastructure(config: VerifyConfig = VerifyConfig()) -> TheoremReport:
    start = time.perf_counter()
    bad = []
    pool = list(enumerate_graphs(config.roundtrip_order, jobs=config.jobs))
    for g in pool:
        text = write_graph6(g)
        if parse_graph6(text) != g:
            bad.append({"check": "graph6 round trip", "graph6": text})
        if nx.to_graph6_bytes(to_networkx(g), header=False).strip() != text.encode("ascii"):
            bad.append({"check": "graph6 agrees with networkx", "graph6": text})

    rng = np.random.default_rng(config.seed)
    sample = pool + [g for g in _generator_outputs(config) if g.n <= 10]
    sample = [sample[i] for i in sorted(rng.choice(len(sample), min(config.relabel_sample, len(sample)), replace=False))]
    for g in sample:
        form = canonical_form(g)
        for _ in range(config.relabelings):
            h = relabel(g, [int(v) for v in rng.permutation(g.n)])
            if canonical_form(h) != form:
                bad.append(_record(g, check="canonical form invariance", relabelled=write_graph6(h)))
                break

    return TheoremReport.conclude(
        "infrastructure",
        "graph6 round trip over all {} graphs on {} vertices; canonical form under {} relabelings of {} graphs".format(
            len(pool), config.roundtrip_order, config.relabelings, len(sample)
        ),
        bad,
        _elapsed(start),
        {"roundtrip_graphs": len(pool), "relabel_sample": len(sample)},
    )


VERIFIERS: Dict[str, Callable[[VerifyConfig], TheoremReport]] = {
    "1": verify_theorem1,
    "2": verify_theorem2,
    "3": verify_theorem3,
    "4": verify_theorem4,
    "5": verify_theorem5,
    "corollary": verify_corollary,
    "lemma1": verify_lemma1,
    "lemma2": verify_lemma2,
    "small": verify_small_levels,
    "polynomial": verify_polynomial,
    "infrastructure": verify_infrastructure,
}

THEOREM_IDS = tuple(VERIFIERS) + ("all",)


def _run_one(theorem: str, config: VerifyConfig) -> TheoremReport:
    logging.info("verifying {}".format(theorem))
    report = VERIFIERS[theorem](config)
    logging.info("{}: {} in {:.1f}s".format(theorem, report.status.value, report.seconds))
    return report


def run_verifiers(theorems: Sequence[str], config: VerifyConfig = VerifyConfig()) -> List[TheoremReport]:
    """Run the named verifiers ("all" expands to every one) and return their reports in order.

    With config.jobs > 1 and several verifiers, the verifiers run in a process pool and each one
    enumerates in a single process.
    """
    selected: List[str] = []
    for theorem in theorems:
        if theorem not in THEOREM_IDS:
            raise ValueError("unknown theorem {!r}, expected one of {}".format(theorem, ", ".join(THEOREM_IDS)))
        for name in VERIFIERS if theorem == "all" else [theorem]:
            if name not in selected:
                selected.append(name)

    if config.jobs <= 1 or len(selected) == 1:
        return [_run_one(name, config) for name in selected]

    inner = config.override(jobs=1)
    with ProcessPoolExecutor(min(config.jobs, len(selected))) as exc:
        return list(exc.map(_run_one, selected, [inner] * len(selected)))
