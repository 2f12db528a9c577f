"""Backward-induction solver for cumulative self-interest subtraction games.

For each convention ``X`` and heap ``h`` the mover picks the feasible actions
maximising ``s + o2[d(X)][h - s]``; among those, a friendly mover keeps the
ones that maximise the opponent's continuation ``o1[d(X)][h - s]`` and an
antagonistic mover the ones that minimise it. FvF and AvA are their own duals;
FvA and AvF reference each other and are filled in a single joint pass.
"""

from __future__ import annotations

import functools
import sys
from dataclasses import dataclass
from typing import Iterable, Sequence

from .core import (
    ALL_CONVENTIONS,
    Convention,
    OutcomePair,
    PositionSolution,
    SubtractionSet,
    dual,
)

__all__ = [
    "BudgetExceeded",
    "SolveTable",
    "solve",
    "outcome_arrays",
    "zero_sum_solve",
    "play_line",
    "zs_play_line",
    "naive_pspe",
    "naive_zero_sum",
]

DEFAULT_NAIVE_BUDGET = 2_000_000


class BudgetExceeded(RuntimeError):
    pass


def _passes(conventions: Iterable[Convention]) -> list[tuple[Convention, ...]]:
    wanted = set(conventions)
    groups = []
    if Convention.FvF in wanted:
        groups.append((Convention.FvF,))
    if Convention.FvA in wanted or Convention.AvF in wanted:
        groups.append((Convention.FvA, Convention.AvF))
    if Convention.AvA in wanted:
        groups.append((Convention.AvA,))
    return groups


def outcome_arrays(
    s: SubtractionSet,
    hmax: int,
    conventions: Iterable[Convention] = ALL_CONVENTIONS,
) -> dict[Convention, tuple[list[int], list[int]]]:
    """``{X: (o1, o2)}`` lists indexed by heap, without move sets.

    This is the hot loop of every scanner, so it stays allocation-free.
    Asking for one of FvA/AvF computes both.
    """
    if hmax < 0:
        raise ValueError("hmax must be non-negative")
    acts = s.actions
    lo = acts[0]
    n = hmax + 1
    out: dict[Convention, tuple[list[int], list[int]]] = {}
    for group in _passes(conventions):
        arrays = {x: ([0] * n, [0] * n) for x in group}
        plan = []
        for x in group:
            d1, d2 = arrays[dual(x)]
            o1, o2 = arrays[x]
            plan.append((o1, o2, d1, d2, x.mover_friendly))
        for h in range(lo, n):
            for o1, o2, d1, d2, friendly in plan:
                best = -1
                key = 0
                for a in acts:
                    if a > h:
                        break
                    r = h - a
                    v = a + d2[r]
                    if v > best:
                        best = v
                        key = d1[r]
                    elif v == best:
                        k = d1[r]
                        if (k > key) if friendly else (k < key):
                            key = k
                o1[h] = best
                o2[h] = key
        out.update(arrays)
    return out


@dataclass(frozen=True)
class SolveTable:
    set: SubtractionSet
    hmax: int
    o1: dict[Convention, tuple[int, ...]]
    o2: dict[Convention, tuple[int, ...]]
    best_own: dict[Convention, tuple[tuple[int, ...], ...]]
    moves: dict[Convention, tuple[tuple[int, ...], ...]]

    @property
    def conventions(self) -> tuple[Convention, ...]:
        return tuple(x for x in ALL_CONVENTIONS if x in self.o1)

    def outcome(self, x: Convention, h: int) -> OutcomePair:
        return OutcomePair(self.o1[x][h], self.o2[x][h])

    def position(self, x: Convention, h: int) -> PositionSolution:
        return PositionSolution(
            heap=h,
            outcome=self.outcome(x, h),
            best_own=self.best_own[x][h],
            pspe_moves=self.moves[x][h],
        )

    def __getitem__(self, x: Convention) -> list[PositionSolution]:
        return [self.position(x, h) for h in range(self.hmax + 1)]


def solve(
    s: SubtractionSet,
    hmax: int,
    conventions: Iterable[Convention] = ALL_CONVENTIONS,
) -> SolveTable:
    """Full PSPE table including the indifference set and refined moves."""
    if hmax < 0:
        raise ValueError("hmax must be non-negative")
    acts = s.actions
    n = hmax + 1
    o1s: dict[Convention, list[int]] = {}
    o2s: dict[Convention, list[int]] = {}
    bests: dict[Convention, list[tuple[int, ...]]] = {}
    movess: dict[Convention, list[tuple[int, ...]]] = {}
    for group in _passes(conventions):
        for x in group:
            o1s[x], o2s[x] = [0] * n, [0] * n
            bests[x], movess[x] = [()] * n, [()] * n
        for h in range(acts[0], n):
            for x in group:
                dx = dual(x)
                d1, d2 = o1s[dx], o2s[dx]
                opts = [(a + d2[h - a], d1[h - a], a) for a in acts if a <= h]
                top = max(v for v, _, _ in opts)
                tied = [(k, a) for v, k, a in opts if v == top]
                pick = max if x.mover_friendly else min
                target = pick(k for k, _ in tied)
                o1s[x][h] = top
                o2s[x][h] = target
                bests[x][h] = tuple(a for _, a in tied)
                movess[x][h] = tuple(a for k, a in tied if k == target)
    return SolveTable(
        set=s,
        hmax=hmax,
        o1={x: tuple(v) for x, v in o1s.items()},
        o2={x: tuple(v) for x, v in o2s.items()},
        best_own={x: tuple(v) for x, v in bests.items()},
        moves={x: tuple(v) for x, v in movess.items()},
    )


def zero_sum_solve(s: SubtractionSet, hmax: int) -> list[int]:
    """Optimal first-mover score when the second mover's removals count negative."""
    if hmax < 0:
        raise ValueError("hmax must be non-negative")
    acts = s.actions
    zs = [0] * (hmax + 1)
    for x in range(acts[0], hmax + 1):
        zs[x] = max(a - zs[x - a] for a in acts if a <= x)
    return zs


def play_line(t: SolveTable, x: Convention, h: int) -> list[tuple[int, int]]:
    """PSPE move sequence from ``h``, taking the smallest refined move each turn.

    Movers are numbered relative to the root: 1 moves first, 2 second.
    """
    if h > t.hmax:
        raise ValueError(f"heap {h} is beyond the table (hmax={t.hmax})")
    line = []
    conv, mover = x, 1
    while t.moves[conv][h]:
        a = t.moves[conv][h][0]
        line.append((mover, a))
        h -= a
        conv, mover = dual(conv), 3 - mover
    return line


def zs_play_line(s: SubtractionSet, h: int) -> list[tuple[int, int]]:
    zs = zero_sum_solve(s, h)
    line = []
    mover = 1
    while h >= s.min_action:
        a = max((a for a in s.actions if a <= h), key=lambda a: (a - zs[h - a], -a))
        line.append((mover, a))
        h -= a
        mover = 3 - mover
    return line


def _tree_size(acts: Sequence[int], h: int) -> int:
    # number of nodes the un-memoised recursion visits
    count = [1] * (h + 1)
    for k in range(h + 1):
        count[k] = 1 + sum(count[k - a] for a in acts if a <= k)
    return count[h]


def naive_pspe(
    s: SubtractionSet,
    x: Convention,
    h: int,
    budget: int | None = DEFAULT_NAIVE_BUDGET,
    memo: bool = False,
) -> OutcomePair:
    """Reference PSPE outcome computed on the game tree with named players.

    Alice moves first and Bob second; each keeps a fixed tie rule for the
    whole game, so this never consults ``dual``. With ``memo=False`` the full
    tree is walked and ``BudgetExceeded`` is raised up front when it has more
    than ``budget`` nodes. ``memo=True`` caches subgame values per
    ``(heap, mover)`` and is exempt from the budget.
    """
    acts = s.actions
    friendly = (x.mover_friendly, x.other_friendly)
    if not memo and budget is not None:
        size = _tree_size(acts, h)
        if size > budget:
            raise BudgetExceeded(f"game tree of {s} at h={h} has {size} nodes (budget {budget})")

    def value(heap: int, mover: int) -> tuple[int, int]:
        best = None
        for a in acts:
            if a > heap:
                continue
            totals = list(sub(heap - a, 1 - mover))
            totals[mover] += a
            if best is None:
                best = totals
                continue
            own, other = totals[mover], totals[1 - mover]
            if own > best[mover]:
                best = totals
            elif own == best[mover]:
                better = other > best[1 - mover] if friendly[mover] else other < best[1 - mover]
                if better:
                    best = totals
        return (0, 0) if best is None else (best[0], best[1])

    sub = functools.lru_cache(maxsize=None)(value) if memo else value
    limit = sys.getrecursionlimit()
    if h // max(acts[0], 1) + 100 > limit:
        sys.setrecursionlimit(h // acts[0] + 200)
    try:
        alice, bob = sub(h, 0)
    finally:
        sys.setrecursionlimit(limit)
    return OutcomePair(alice, bob)


def naive_zero_sum(s: SubtractionSet, x: int) -> int:
    """Un-memoised minimax over the game tree; only for small heaps."""
    moves = [a for a in s.actions if a <= x]
    if not moves:
        return 0
    return max(a - naive_zero_sum(s, x - a) for a in moves)
