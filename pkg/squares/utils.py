"""Utilities for activity logging and partitioned work."""
import logging
from concurrent.futures import ProcessPoolExecutor

logger = logging.getLogger('squares.activity')


def log_activity(action, subject, extra=None):
    """Log a computed, cached or skipped result for a subject (a discriminant, a form, a row)."""
    if action not in ('computed', 'cached', 'skipped'):
        return
    if extra:
        logger.info('%s %s %s', action, subject, extra)
    else:
        logger.info('%s %s', action, subject)


def split_range(lo, hi, parts):
    """Split lo..hi (inclusive) into at most `parts` contiguous (start, stop) ranges."""
    size = hi - lo + 1
    if size <= 0:
        return []
    parts = max(1, min(parts, size))
    step, extra = divmod(size, parts)
    ranges = []
    start = lo
    for i in range(parts):
        stop = start + step + (1 if i < extra else 0) - 1
        ranges.append((start, stop))
        start = stop + 1
    return ranges


def run_partitioned(func, chunks, workers=1):
    """Apply func to each argument tuple; results come back in chunk order."""
    if workers <= 1 or len(chunks) <= 1:
        return [func(*args) for args in chunks]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(func, *zip(*chunks)))
