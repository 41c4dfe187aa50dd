"""
Command-line interface: `planar-euler {classify,gen,enumerate,verify,sweep}`.

Machine-readable output goes to stdout and diagnostics to stderr. Exit codes: 0 success or verified,
1 a verifier found a counterexample, 2 usage or input error.
"""

import argparse
import json
import logging
import sys
from typing import Optional, Sequence, Tuple

from PlanarEuler.enumeration.graphs import CatalogEntry, FilterSpec, enumerate_graphs
from PlanarEuler.euler_utils import FVector, classify, euler_polynomial, fvector_of, roots
from PlanarEuler.generator_utils import (
    GridSpec,
    complete,
    cycle,
    fig2_witness,
    grid,
    maximal_triangulation,
    path,
    star,
)
from PlanarEuler.graph_io import read_graph, write_edge_list, write_graph6, write_json_graph
from PlanarEuler.graph_utils import Graph, edges, is_connected
from PlanarEuler.planarity_utils import is_planar
from PlanarEuler.verification.report import VerifyConfig
from PlanarEuler.verification.sweep import FRONTIER_COLUMNS, SWEEP_COLUMNS, frontier_rows, sweep_rows, write_csv
from PlanarEuler.verification.theorems import THEOREM_IDS, run_verifiers

EXIT_OK = 0
EXIT_REFUTED = 1
EXIT_USAGE = 2

#family name -> number of integer arguments and constructor
FAMILIES = {
    "path": (1, path),
    "cycle": (1, cycle),
    "grid": (2, lambda m, n: grid(GridSpec(m, n))),
    "triangulation": (1, maximal_triangulation),
    "fig2": (0, fig2_witness),
    "star": (1, star),
    "complete": (1, complete),
}

WRITERS = {"graph6": write_graph6, "edgelist": write_edge_list, "json": write_json_graph}


def _edge_range(text: str) -> Tuple[int, int]:
    try:
        lo, hi = (int(part) for part in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError("expected lo:hi, got {!r}".format(text))
    return lo, hi


def _fvector(text: str) -> FVector:
    try:
        return FVector(*(int(part) for part in text.split(",")))
    except (TypeError, ValueError):
        raise argparse.ArgumentTypeError("expected f0,f1,f2, got {!r}".format(text))


def _read_input(source: str) -> str:
    if source == "-":
        return sys.stdin.read()
    with open(source) as f:
        return f.read()


def classification_record(g: Graph) -> dict:
    f = fvector_of(g)
    p = euler_polynomial(f)
    return {
        "fvector": list(f),
        "polynomial": str(p),
        "coefficients": list(p.coefficients),
        "delta": p.delta,
        "roots": roots(p).to_dict(),
        "verdict": classify(f).value,
    }


def _format_text(record: dict) -> str:
    roots_text = ", ".join(
        "{:.6g}{:+.6g}i".format(re, im) if im else "{:.6g}".format(re) for re, im in record["roots"]["approximations"]
    )
    return "\n".join([
        "f-vector: {}".format(tuple(record["fvector"])),
        "polynomial: {}".format(record["polynomial"]),
        "delta: {}".format(record["delta"]),
        "roots: {}".format(roots_text),
        "verdict: {}".format(record["verdict"]),
    ])


def cmd_classify(args) -> int:
    g = read_graph(_read_input(args.input), args.format)
    record = classification_record(g)
    print(json.dumps(record) if args.output == "json" else _format_text(record))
    return EXIT_OK


def cmd_gen(args) -> int:
    arity, build = FAMILIES[args.family]
    if len(args.params) != arity:
        raise ValueError("family {} takes {} integer argument(s), got {}".format(args.family, arity, len(args.params)))
    g = build(*args.params)
    sys.stdout.write(WRITERS[args.format](g).rstrip("\n") + "\n")
    return EXIT_OK


def cmd_enumerate(args) -> int:
    spec = FilterSpec.from_names(args.filter, edges=args.edges, fvector=args.fvector)
    count = 0
    for g in enumerate_graphs(args.n, spec, jobs=args.jobs):
        if args.format == "json":
            if g.n and is_connected(g) and is_planar(g):
                line = CatalogEntry.from_graph(g).to_json()
            else:
                line = json.dumps({"graph6": write_graph6(g), "edges": [list(e) for e in edges(g)]})
        else:
            line = write_graph6(g)
        sys.stdout.write(line + "\n")
        count += 1
    logging.info("{} classes".format(count))
    return EXIT_OK


def cmd_verify(args) -> int:
    config = VerifyConfig.from_json(args.config_file) if args.config_file else VerifyConfig()
    config = config.override(bound=args.bound, jobs=args.jobs)
    reports = run_verifiers(args.theorem or ["all"], config)
    for report in reports:
        sys.stdout.write(report.to_json() + "\n")
    refuted = [report.theorem for report in reports if not report.ok]
    if refuted:
        logging.error("refuted: {}".format(", ".join(refuted)))
        return EXIT_REFUTED
    return EXIT_OK


def cmd_sweep(args) -> int:
    if args.frontier:
        count = write_csv(frontier_rows(args.f0_max, args.f0_min), FRONTIER_COLUMNS, sys.stdout)
    else:
        count = write_csv(sweep_rows(args.f0_max, args.f0_min), SWEEP_COLUMNS, sys.stdout)
    logging.debug("{} rows written".format(count))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="planar-euler",
        description="Classify planar graphs as real or complex by the roots of their Euler polynomial.",
    )
    verbosity = parser.add_mutually_exclusive_group()
    verbosity.add_argument("-v", "--verbose", action="store_true", help="debug logging on stderr")
    verbosity.add_argument("-q", "--quiet", action="store_true", help="only warnings and errors on stderr")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("classify", help="f-vector, Euler polynomial, roots and verdict of one graph")
    p.add_argument("input", nargs="?", default="-", help="graph file, '-' for stdin")
    p.add_argument("--format", choices=sorted(WRITERS), default=None, help="input format, detected if omitted")
    p.add_argument("--output", choices=["json", "text"], default="json")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("gen", help="emit a member of a named graph family")
    p.add_argument("family", choices=sorted(FAMILIES))
    p.add_argument("params", nargs="*", type=int)
    p.add_argument("--format", choices=sorted(WRITERS), default="edgelist")
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("enumerate", help="stream isomorphism classes passing a filter")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--filter", default="", help="comma list of connected, biconnected, triangle-free, planar, bipartite")
    p.add_argument("--edges", type=_edge_range, default=None, help="edge-count range lo:hi")
    p.add_argument("--fvector", type=_fvector, default=None, help="exact f-vector f0,f1,f2")
    p.add_argument("--format", choices=["graph6", "json"], default="graph6")
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_enumerate)

    p = sub.add_parser("verify", help="run theorem verifiers and emit JSON reports")
    p.add_argument("--theorem", action="append", choices=THEOREM_IDS, help="repeatable, default all")
    p.add_argument("--bound", type=int, default=None, help="upper f0 of the arithmetic scans")
    p.add_argument("--jobs", type=int, default=None)
    p.add_argument("--config-file", type=str, default=None, help="JSON file of VerifyConfig fields")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="CSV table of the real/complex frontier in the (f0, f1) plane")
    p.add_argument("--f0-max", type=int, default=30)
    p.add_argument("--f0-min", type=int, default=1)
    p.add_argument("--frontier", action="store_true", help="one row per f0 with the largest real f1")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as err:
        return EXIT_USAGE if err.code else EXIT_OK

    level = logging.DEBUG if args.verbose else logging.WARNING if args.quiet else logging.INFO
    logging.basicConfig(level=level, stream=sys.stderr, format="%(asctime)s %(levelname)s %(message)s")

    try:
        return args.func(args)
    except (ValueError, OSError) as err:
        print("error: {}".format(err), file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
