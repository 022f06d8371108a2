# src/utils/partition.py
import logging
from concurrent.futures import ThreadPoolExecutor
from typing import Callable, List, Sequence, TypeVar

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


def chunk(items: Sequence[T], parts: int) -> List[Sequence[T]]:
    """Split items into at most `parts` contiguous, nonempty, order-preserving slices."""
    parts = max(1, min(parts, len(items)))
    size, extra = divmod(len(items), parts)
    chunks, start = [], 0
    for i in range(parts):
        end = start + size + (1 if i < extra else 0)
        chunks.append(items[start:end])
        start = end
    return [c for c in chunks if len(c)]


def run_partitioned(items: Sequence[T], work: Callable[[Sequence[T]], R], threads: int = 1) -> List[R]:
    """Apply `work` to contiguous chunks of `items` and return the results in chunk order.

    Callers merge the partial results themselves, so the outcome never depends on
    scheduling.
    """
    if threads <= 1 or len(items) <= 1:
        return [work(items)]
    chunks = chunk(items, threads)
    logger.debug(f"Running {len(chunks)} chunks on {threads} threads.")
    with ThreadPoolExecutor(max_workers=threads, thread_name_prefix="VestWorker") as pool:
        return list(pool.map(work, chunks))
