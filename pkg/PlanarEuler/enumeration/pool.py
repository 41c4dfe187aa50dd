#Worker-pool helpers shared by the abstract and lattice enumerators.

#Work units are independent chunks of an enumeration frontier. Results come back in submission order so
#the merge step, which owns the dedup set, stays deterministic.

import logging
from concurrent.futures import Executor, ProcessPoolExecutor, ThreadPoolExecutor
from contextlib import contextmanager
from typing import Callable, Iterator, List, Optional, Sequence, TypeVar

T = TypeVar("T")
R = TypeVar("R")

#chunks per worker, so that slow chunks do not leave the other workers idle
CHUNKS_PER_JOB = 4


def split_chunks(items: Sequence[T], jobs: int) -> List[Sequence[T]]:
    n_chunks = max(1, min(len(items), jobs * CHUNKS_PER_JOB))
    size = -(-len(items) // n_chunks) if items else 1
    return [items[i:i + size] for i in range(0, len(items), size)]


@contextmanager
def worker_pool(jobs: int = 1, thread: bool = False) -> Iterator[Optional[Executor]]:
    """One executor for a whole enumeration, or None when everything runs in this process."""
    if jobs <= 1:
        yield None
        return
    exc_type = ThreadPoolExecutor if thread else ProcessPoolExecutor
    logging.debug("Starting a {} with {} workers".format(exc_type.__name__, jobs))
    with exc_type(jobs) as exc:
        yield exc


def map_chunks(
    func: Callable[[Sequence[T]], R],
    items: Sequence[T],
    jobs: int = 1,
    executor: Optional[Executor] = None,
) -> Iterator[R]:
    """
    Apply `func` to chunks of `items`, yielding one result per chunk in order.

    Args:
        func: picklable top-level function taking a chunk
        items: the frontier to partition
        jobs: number of workers; 1 runs everything in this process
        executor: the running pool from `worker_pool`, reused across levels

    Returns:
        Iterator of per-chunk results
    """
    if executor is None or jobs <= 1 or len(items) <= 1:
        yield func(items)
        return

    chunks = split_chunks(items, jobs)
    logging.debug("Submitting {} chunks of up to {} items to {} workers".format(len(chunks), len(chunks[0]), jobs))
    yield from executor.map(func, chunks)
