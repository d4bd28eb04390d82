"""Small shared helpers."""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor


def thread_cap() -> int:
    """Worker cap from HPC_THREADS (default 1 = serial)."""
    raw = os.environ.get("HPC_THREADS", "")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def parallel_map(func, items):
    """Map preserving input order; parallel only when HPC_THREADS > 1.

    Results are collected in submission order, so output is
    deterministic regardless of scheduling.
    """
    items = list(items)
    cap = thread_cap()
    if cap <= 1 or len(items) <= 1:
        return [func(x) for x in items]
    with ThreadPoolExecutor(max_workers=min(cap, len(items))) as pool:
        return list(pool.map(func, items))
