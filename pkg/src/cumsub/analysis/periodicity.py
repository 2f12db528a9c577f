from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class PeriodicityReport:
    preperiod: int
    period: int
    additive_constant: int
    verified_up_to: int


def holds(f: Sequence[int], preperiod: int, period: int, constant: int) -> bool:
    return all(f[h + period] == f[h] + constant for h in range(preperiod, len(f) - period))


def detect_periodicity(
    f: Sequence[int],
    pmax: int,
    mode: str = "pure",
    min_window: int | None = None,
) -> PeriodicityReport | None:
    """Smallest period ``p <= pmax`` (then smallest preperiod) with
    ``f[h + p] == f[h] + c`` for every ``h >= N`` in the sequence.

    ``c`` is forced to 0 in ``pure`` mode. A candidate only counts if the
    relation is checked on at least ``min_window`` heaps (default ``pmax``),
    which keeps a short tail from passing as periodic.
    """
    if mode not in ("pure", "additive"):
        raise ValueError(f"unknown mode {mode!r}")
    if pmax < 1:
        raise ValueError("pmax must be positive")
    n = len(f)
    if n <= 2 * pmax:
        raise ValueError(f"need more than {2 * pmax} terms, got {n}")
    window = pmax if min_window is None else min_window
    for p in range(1, pmax + 1):
        last = n - p - 1
        c = f[last + p] - f[last] if mode == "additive" else 0
        h = last
        while h >= 0 and f[h + p] - f[h] == c:
            h -= 1
        start = h + 1
        if n - p - start < window:
            continue
        if not holds(f, start, p, c):
            raise AssertionError(f"periodicity recheck failed for p={p}, N={start}")
        return PeriodicityReport(start, p, c, n - 1)
    return None
