from __future__ import annotations

import enum

from ..core import Convention, DiscrepancyRecord, SubtractionSet
from ..solver import outcome_arrays, zero_sum_solve


class Criterion(str, enum.Enum):
    DIFF_OF_DIFF = "diff_of_diff"
    COMPONENTWISE = "componentwise"
    ZS_VS_AVA = "zs_vs_ava"

    @classmethod
    def parse(cls, text: str) -> "Criterion":
        return cls(text.strip().lower().replace("-", "_"))


def discrepancy_table(
    s: SubtractionSet, base: Convention, other: Convention, hmax: int
) -> list[DiscrepancyRecord]:
    """Per-heap ``other - base`` differences of each player's utility."""
    arrays = outcome_arrays(s, hmax, (base, other))
    b1, b2 = arrays[base]
    y1, y2 = arrays[other]
    records = []
    for h in range(hmax + 1):
        d1 = y1[h] - b1[h]
        d2 = y2[h] - b2[h]
        records.append(DiscrepancyRecord(h, d1, d2, d1 - d2))
    return records


def mismatch_flags(
    s: SubtractionSet,
    hmax: int,
    criterion: Criterion = Criterion.DIFF_OF_DIFF,
    base: Convention = Convention.FvF,
    other: Convention = Convention.AvA,
) -> list[bool]:
    """``flags[h]`` is True when heap ``h`` meets ``criterion``.

    ``zs_vs_ava`` ignores ``base``/``other`` and compares the zero-sum value
    with the AvA utility gap.
    """
    criterion = Criterion(criterion)
    if criterion is Criterion.ZS_VS_AVA:
        zs = zero_sum_solve(s, hmax)
        a1, a2 = outcome_arrays(s, hmax, (Convention.AvA,))[Convention.AvA]
        return [zs[h] != a1[h] - a2[h] for h in range(hmax + 1)]
    arrays = outcome_arrays(s, hmax, (base, other))
    b1, b2 = arrays[base]
    y1, y2 = arrays[other]
    if criterion is Criterion.DIFF_OF_DIFF:
        return [y1[h] - y2[h] != b1[h] - b2[h] for h in range(hmax + 1)]
    return [y1[h] != b1[h] or y2[h] != b2[h] for h in range(hmax + 1)]


def first_discrepancy(
    s: SubtractionSet,
    base: Convention = Convention.FvF,
    other: Convention = Convention.AvA,
    hmax: int = 300,
    criterion: Criterion = Criterion.DIFF_OF_DIFF,
) -> int | None:
    flags = mismatch_flags(s, hmax, criterion, base, other)
    for h, hit in enumerate(flags):
        if hit:
            return h
    return None
