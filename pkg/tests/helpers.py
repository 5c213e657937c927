"""Brute-force oracles used to pin expected values independently of the
library's own algorithms."""

import functools


def partitions_of(total, max_part=None):
    """All partitions of `total` as weakly decreasing tuples."""
    if total == 0:
        yield ()
        return
    if max_part is None or max_part > total:
        max_part = total
    for first in range(max_part, 0, -1):
        for rest in partitions_of(total - first, first):
            yield (first,) + rest


@functools.lru_cache(maxsize=None)
def partitions_upto(limit):
    """All partitions with at most `limit` boxes, as a tuple of tuples."""
    out = []
    for total in range(limit + 1):
        out.extend(partitions_of(total))
    return tuple(out)


def count_partitions(total, allowed=None):
    """Number of partitions of `total`, optionally with an allowed-part
    predicate; 1 for total 0, 0 for negative totals."""
    if total < 0:
        return 0
    return sum(
        1
        for p in partitions_of(total)
        if allowed is None or all(allowed(part) for part in p)
    )


@functools.lru_cache(maxsize=None)
def _distinct_odd(remaining, max_part):
    if remaining == 0:
        return 1
    part = min(max_part, remaining)
    if part % 2 == 0:
        part -= 1
    total = 0
    while part >= 1:
        total += _distinct_odd(remaining - part, part - 2)
        part -= 2
    return total


def count_distinct_odd(total):
    """Partitions of `total` into distinct odd parts."""
    if total < 0:
        return 0
    return _distinct_odd(total, total)


def naive_series_mul(a: dict, b: dict, order: int) -> dict:
    """Schoolbook product of exponent->coefficient maps, truncated."""
    out: dict[int, int] = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = ea + eb
            if e < order:
                out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def series_to_dict(s) -> dict:
    """Exponent->coefficient map of a QSeries, nonzero entries only."""
    return {
        s.lowest + idx: c
        for idx, c in enumerate(s.coeffs)
        if c
    }


def colors_by_cell(parts, charge, n):
    """Tally of cell colors computed cell by cell."""
    counts = [0] * n
    for row, length in enumerate(parts, start=1):
        for col in range(1, length + 1):
            counts[(col - row + charge) % n] += 1
    return tuple(counts)
