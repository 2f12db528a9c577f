"""Parameter-space sweeps over two- and three-action sets.

Work items are independent solves, so they are farmed out to a process pool
when ``jobs > 1``. Results are sorted before returning, which makes the
output identical for any worker count.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence, TypeVar

from ..core import Convention, SubtractionSet
from .discrepancy import Criterion, first_discrepancy

JOBS_ENV = "CUMSUB_JOBS"

T = TypeVar("T")
R = TypeVar("R")


def default_jobs() -> int:
    raw = os.environ.get(JOBS_ENV, "")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def parallel_map(fn: Callable[[T], R], items: Sequence[T], jobs: int | None = None) -> list[R]:
    """Order-preserving map, in-process for ``jobs == 1``."""
    jobs = default_jobs() if jobs is None else max(1, jobs)
    if jobs == 1 or len(items) < 2:
        return [fn(item) for item in items]
    chunk = max(1, len(items) // (jobs * 8))
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        return list(pool.map(fn, items, chunksize=chunk))


@dataclass(frozen=True, order=True)
class ScanPoint:
    set: SubtractionSet
    first_heap: int | None
    criterion: Criterion

    @property
    def coords(self) -> tuple[int | None, ...]:
        """``(s3, s2, s1)``; ``s3`` is None for two-action sets."""
        acts = self.set.actions
        return (None,) * (3 - len(acts)) + tuple(acts)


def pairs(smax: int, smin: int = 1) -> list[SubtractionSet]:
    return [SubtractionSet(c) for c in itertools.combinations(range(smin, smax + 1), 2)]


def triples(smax: int, smin: int = 1) -> list[SubtractionSet]:
    return [SubtractionSet(c) for c in itertools.combinations(range(smin, smax + 1), 3)]


@dataclass(frozen=True)
class _FirstHeap:
    hmax: int
    criterion: Criterion
    base: Convention = Convention.FvF
    other: Convention = Convention.AvA

    def __call__(self, s: SubtractionSet) -> ScanPoint:
        h = first_discrepancy(s, self.base, self.other, self.hmax, self.criterion)
        return ScanPoint(s, h, self.criterion)


def scan_sets(
    sets: Iterable[SubtractionSet],
    hmax: int = 300,
    criterion: Criterion = Criterion.DIFF_OF_DIFF,
    jobs: int | None = None,
    base: Convention = Convention.FvF,
    other: Convention = Convention.AvA,
) -> list[ScanPoint]:
    """Scan points (only those with a discrepancy) sorted by set."""
    work = sorted(sets)
    found = parallel_map(_FirstHeap(hmax, Criterion(criterion), base, other), work, jobs)
    return sorted(p for p in found if p.first_heap is not None)


def scan_two_action(
    smax: int, hmax: int = 300, criterion: Criterion = Criterion.DIFF_OF_DIFF, jobs: int | None = None
) -> list[ScanPoint]:
    if smax < 2:
        raise ValueError("smax must be at least 2")
    return scan_sets(pairs(smax), hmax, criterion, jobs)


def scan_three_action(
    smax: int, hmax: int = 300, criterion: Criterion = Criterion.DIFF_OF_DIFF, jobs: int | None = None
) -> list[ScanPoint]:
    if smax < 3:
        raise ValueError("smax must be at least 3")
    return scan_sets(triples(smax), hmax, criterion, jobs)


def scan_ava_vs_zero_sum(
    size: int, smax: int, hmax: int = 300, jobs: int | None = None
) -> list[ScanPoint]:
    if size == 2:
        sets = pairs(smax)
    elif size == 3:
        sets = triples(smax)
    else:
        raise ValueError("size must be 2 or 3")
    return scan_sets(sets, hmax, Criterion.ZS_VS_AVA, jobs)
