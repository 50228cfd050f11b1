"""Small numeric helpers: big-integer logs, ordered parallel map."""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

_LOG2 = math.log(2.0)


def log_int(n: int) -> float:
    """Natural log of a positive integer of arbitrary size."""
    if n <= 0:
        raise ValueError("log_int needs a positive integer")
    b = n.bit_length()
    if b <= 900:
        return math.log(n)
    shift = b - 64
    return math.log(n >> shift) + shift * _LOG2


def log_fraction(x: Fraction) -> float:
    """Natural log of a positive Fraction whose parts may be huge."""
    if x <= 0:
        raise ValueError("log_fraction needs a positive value")
    return log_int(x.numerator) - log_int(x.denominator)


def thread_count() -> int:
    """Worker cap from CFDIM_THREADS (>=1, default 1)."""
    raw = os.environ.get("CFDIM_THREADS", "1")
    try:
        n = int(raw)
    except ValueError:
        return 1
    return max(1, n)


def map_ordered(fn, items, threads: int | None = None) -> list:
    """Map preserving input order; optional thread pool.

    Results are combined by the caller in input order, so the output is
    identical for any worker count.
    """
    items = list(items)
    if threads is None:
        threads = thread_count()
    if threads <= 1 or len(items) <= 1:
        return [fn(it) for it in items]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))
