"""Seeded sampling of distinct subtraction sets."""

from __future__ import annotations

import itertools
import math
import random
import re
from dataclasses import dataclass

from ..core import SubtractionSet

SAMPLER_ALGORITHM = "py-random-mt19937/combination-sample-v1"

# rejection sampling degrades once the request covers much of the space
_ENUMERATE_FRACTION = 0.5


class InfeasibleSample(ValueError):
    pass


def sample_random_sets(size: int, max_val: int, count: int, seed: int) -> list[SubtractionSet]:
    """``count`` distinct ``size``-subsets of ``{1..max_val}``, uniform, no replacement."""
    if size < 1 or size > max_val:
        raise InfeasibleSample(f"cannot draw {size}-subsets of 1..{max_val}")
    total = math.comb(max_val, size)
    if count > total:
        raise InfeasibleSample(f"asked for {count} sets but only {total} exist")
    rng = random.Random(seed)
    population = range(1, max_val + 1)
    if count > total * _ENUMERATE_FRACTION:
        combos = list(itertools.combinations(population, size))
        return [SubtractionSet(c) for c in rng.sample(combos, count)]
    seen: set[tuple[int, ...]] = set()
    out = []
    while len(out) < count:
        combo = tuple(sorted(rng.sample(population, size)))
        if combo not in seen:
            seen.add(combo)
            out.append(SubtractionSet(combo))
    return out


def derive_seed(seed: int, size: int) -> int:
    return seed * 1_000_003 + size


@dataclass(frozen=True)
class SampleSpec:
    sizes: tuple[int, ...]
    count: int
    max_val: int

    @classmethod
    def parse(cls, text: str) -> "SampleSpec":
        """Parse ``"sizes=3..10,count=200,max=25"``; ``sizes`` may also be ``3`` or ``3..3``."""
        m = re.fullmatch(
            r"\s*sizes?=(\d+)(?:\.\.(\d+))?\s*,\s*count=(\d+)\s*,\s*max=(\d+)\s*", text
        )
        if not m:
            raise ValueError(f"bad sample spec {text!r}; expected sizes=A..B,count=N,max=M")
        lo = int(m.group(1))
        hi = int(m.group(2) or lo)
        if hi < lo:
            raise ValueError(f"empty size range in {text!r}")
        return cls(tuple(range(lo, hi + 1)), int(m.group(3)), int(m.group(4)))

    def draw(self, seed: int) -> list[SubtractionSet]:
        sets: list[SubtractionSet] = []
        for size in self.sizes:
            sets.extend(sample_random_sets(size, self.max_val, self.count, derive_seed(seed, size)))
        return sets

    def __str__(self) -> str:
        lo, hi = self.sizes[0], self.sizes[-1]
        return f"sizes={lo}..{hi},count={self.count},max={self.max_val}"
