"""Thread scheduling for compiled, GIL-releasing kernels.

Work is cut into blocks whose boundaries do not depend on the thread count;
threads only decide who runs which block, and block results are combined in
block order. Outputs are therefore identical for every thread count.
"""

import os
from concurrent.futures import ThreadPoolExecutor
from functools import lru_cache

import numpy as np


def resolve_threads(threads=None):
    if threads is None:
        return os.cpu_count() or 1
    threads = int(threads)
    if threads < 1:
        raise ValueError(f"threads must be >= 1, got {threads}")
    return threads


@lru_cache(maxsize=None)
def _pool(threads):
    return ThreadPoolExecutor(max_workers=threads, thread_name_prefix="netkit")


def run_blocks(fn, blocks, threads=None):
    """``[fn(b) for b in blocks]``, possibly on several threads."""
    threads = resolve_threads(threads)
    blocks = list(blocks)
    if threads == 1 or len(blocks) <= 1:
        return [fn(b) for b in blocks]
    return list(_pool(threads).map(fn, blocks))


def block_ranges(total, nblocks):
    """Split ``range(total)`` into at most ``nblocks`` contiguous ranges."""
    nblocks = max(1, min(int(nblocks), int(total)))
    edges = np.linspace(0, total, nblocks + 1).astype(np.int64)
    return [(int(a), int(b)) for a, b in zip(edges[:-1], edges[1:]) if b > a]


def ordered_sum(arrays, out=None):
    """Sum arrays strictly left to right."""
    it = iter(arrays)
    acc = next(it).copy() if out is None else out
    for a in it:
        acc += a
    return acc
