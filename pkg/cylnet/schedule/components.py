__all__ = ["THREADS_VARIABLE", "parallel_map", "threads_from_env"]

# ================> Python Standard  and third-party <==========
from noodles import (gather, run_parallel, schedule)
from typing import (Callable, Iterable, List)

import logging
import os

# Starting logger
logger = logging.getLogger(__name__)

THREADS_VARIABLE = "CYLNET_THREADS"
# ==============================> Tasks <=====================================


def threads_from_env() -> int:
    """
    Number of worker threads requested through ``CYLNET_THREADS``,
    0 (serial) when unset.
    """
    value = os.environ.get(THREADS_VARIABLE, "0")
    try:
        n = int(value)
    except ValueError:
        raise ValueError(f"{THREADS_VARIABLE} must be an integer, got: {value!r}")
    if n < 0:
        raise ValueError(f"{THREADS_VARIABLE} must be >= 0, got: {n}")
    return n


@schedule
def apply_task(func: Callable, item: object) -> object:
    return func(item)


def parallel_map(func: Callable, items: Iterable, n_threads: int = None) -> List:
    """
    Apply `func` to every item, keeping the input order. The items are
    scheduled as independent noodles tasks and run on `n_threads` worker
    threads; with 0 threads (the default from ``CYLNET_THREADS``) or a
    single item the map is serial.
    """
    items = list(items)
    n_threads = threads_from_env() if n_threads is None else n_threads
    if n_threads == 0 or len(items) < 2:
        return [func(x) for x in items]

    logger.info(f"scheduling {len(items)} tasks on {n_threads} threads")
    workflow = gather(*[apply_task(func, x) for x in items])
    return list(run_parallel(workflow, n_threads=n_threads))
