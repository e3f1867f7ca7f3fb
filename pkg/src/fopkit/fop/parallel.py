"""Process-pool fan-out of sweep chunks.

Workers return per-chunk first occurrences; the caller merges them by minimal sweep index,
so the result does not depend on how chunks are scheduled.
"""

from collections.abc import Iterator
from functools import partial
from multiprocessing import Pool

from fopkit.fop.engine import ChunkTask, DedupKey, first_occurrences
from fopkit.infrastructure.logging import get_logger

logger = get_logger(__name__)


def map_chunks(
    tasks: list[ChunkTask], key: DedupKey, workers: int
) -> Iterator[dict[int, tuple[int, int, int, int, int]]]:
    """Run first_occurrences over tasks in a pool, yielding partial maps in task order."""
    logger.debug(f"Dispatching {len(tasks)} chunks to {workers} workers")
    with Pool(workers) as pool:
        yield from pool.imap(partial(first_occurrences, key=key), tasks)
