"""
The (f0, f1) real/complex table against the linear edge bounds, written as CSV for plotting.

`sweep_rows` lists every f-vector of a connected planar graph with f0 in range, `frontier_rows` gives one row
per f0 with the largest real edge count next to the two linear caps.
"""

import csv
from typing import IO, Dict, Iterable, Iterator, Sequence

from PlanarEuler.euler_utils import FVector, classify, euler_polynomial, quadratic_edge_bound

SWEEP_COLUMNS = ("f0", "f1", "f2", "delta", "verdict", "lemma1a_cap", "lemma1b_cap")
FRONTIER_COLUMNS = ("f0", "quadratic_cap", "lemma1a_cap", "lemma1b_cap")


def linear_caps(f0: int):
    """Largest f1 of a connected planar graph, and of a triangle-free one, on f0 vertices."""
    if f0 < 3:
        return f0 - 1, f0 - 1
    return 3 * (f0 - 2), 2 * (f0 - 2)


def sweep_rows(f0_max: int, f0_min: int = 1) -> Iterator[Dict[str, object]]:
    if f0_min < 1 or f0_min > f0_max:
        raise ValueError("f0 range [{}, {}] must satisfy 1 <= f0_min <= f0_max".format(f0_min, f0_max))
    for f0 in range(f0_min, f0_max + 1):
        cap_a, cap_b = linear_caps(f0)
        for f1 in range(f0 - 1, cap_a + 1):
            f = FVector(f0, f1, f1 - f0 + 2)
            yield {
                "f0": f0,
                "f1": f1,
                "f2": f.f2,
                "delta": euler_polynomial(f).delta,
                "verdict": classify(f).value,
                "lemma1a_cap": cap_a,
                "lemma1b_cap": cap_b,
            }


def frontier_rows(f0_max: int, f0_min: int = 1) -> Iterator[Dict[str, object]]:
    if f0_min < 1 or f0_min > f0_max:
        raise ValueError("f0 range [{}, {}] must satisfy 1 <= f0_min <= f0_max".format(f0_min, f0_max))
    for f0 in range(f0_min, f0_max + 1):
        cap_a, cap_b = linear_caps(f0)
        yield {"f0": f0, "quadratic_cap": quadratic_edge_bound(f0), "lemma1a_cap": cap_a, "lemma1b_cap": cap_b}


def write_csv(rows: Iterable[Dict[str, object]], columns: Sequence[str], stream: IO[str]) -> int:
    writer = csv.DictWriter(stream, fieldnames=list(columns), lineterminator="\n")
    writer.writeheader()
    count = 0
    for row in rows:
        writer.writerow(row)
        count += 1
    return count
