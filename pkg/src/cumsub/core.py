"""Domain types shared by the solver, the analysis tools and the CLI.

Subtraction sets are stored ascending. The named accessors ``s1``, ``s2`` and
``s3`` index from the largest action downwards, so for ``{3, 5}`` we have
``s1 == 5`` and ``s2 == 3``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterable


class InvalidSubtractionSet(ValueError):
    pass


class PreconditionError(ValueError):
    """An operation was called on a set outside its domain."""


@dataclass(frozen=True, order=True)
class SubtractionSet:
    actions: tuple[int, ...]

    def __init__(self, actions: Iterable[int]):
        acts = tuple(int(a) for a in actions)
        if not acts:
            raise InvalidSubtractionSet("subtraction set must be non-empty")
        if any(a < 1 for a in acts):
            raise InvalidSubtractionSet(f"actions must be positive: {acts}")
        if any(b <= a for a, b in zip(acts, acts[1:])):
            if len(set(acts)) != len(acts):
                raise InvalidSubtractionSet(f"duplicate actions: {acts}")
            acts = tuple(sorted(acts))
        object.__setattr__(self, "actions", acts)

    @classmethod
    def parse(cls, text: str) -> "SubtractionSet":
        """Parse ``"3,5"`` or ``"{3, 5}"``."""
        body = text.strip().strip("{}")
        try:
            values = [int(tok) for tok in body.split(",") if tok.strip()]
        except ValueError as exc:
            raise InvalidSubtractionSet(f"not an action list: {text!r}") from exc
        return cls(values)

    def __len__(self) -> int:
        return len(self.actions)

    def __iter__(self):
        return iter(self.actions)

    def __contains__(self, a: object) -> bool:
        return a in self.actions

    def __str__(self) -> str:
        return "{" + ",".join(map(str, self.actions)) + "}"

    def __repr__(self) -> str:
        return f"SubtractionSet({list(self.actions)})"

    @property
    def min_action(self) -> int:
        return self.actions[0]

    @property
    def max_action(self) -> int:
        return self.actions[-1]

    def largest(self, rank: int) -> int:
        """The ``rank``-th largest action, 1-based."""
        if not 1 <= rank <= len(self.actions):
            raise PreconditionError(f"{self} has no action of rank {rank}")
        return self.actions[-rank]

    def s1(self) -> int:
        return self.largest(1)

    def s2(self) -> int:
        return self.largest(2)

    def s3(self) -> int:
        return self.largest(3)

    def as_csv(self) -> str:
        return ",".join(map(str, self.actions))


class RegimeKind(str, enum.Enum):
    DOMINANT = "dominant"
    BALANCED = "balanced"
    NON_DOMINANT = "non_dominant"


@dataclass(frozen=True)
class Regime:
    kind: RegimeKind
    delta: int

    @property
    def is_dominant(self) -> bool:
        # balanced is the boundary case of dominance
        return self.kind is not RegimeKind.NON_DOMINANT


class Convention(str, enum.Enum):
    """Tie-breaking pair; first letter is the player to move, second the other."""

    FvF = "FvF"
    FvA = "FvA"
    AvF = "AvF"
    AvA = "AvA"

    @property
    def mover_friendly(self) -> bool:
        return self.value[0] == "F"

    @property
    def other_friendly(self) -> bool:
        return self.value[2] == "F"

    @classmethod
    def parse(cls, text: str) -> "Convention":
        for conv in cls:
            if conv.value.lower() == text.strip().lower():
                return conv
        raise ValueError(f"unknown convention {text!r}")

    def __str__(self) -> str:
        return self.value


ALL_CONVENTIONS: tuple[Convention, ...] = (
    Convention.FvF,
    Convention.FvA,
    Convention.AvF,
    Convention.AvA,
)


def dual(x: Convention) -> Convention:
    """Convention seen from the next position, after the players swap roles."""
    return Convention(x.value[2] + "v" + x.value[0])


def classify_regime(s: SubtractionSet) -> Regime:
    if len(s) != 2:
        raise PreconditionError(f"regime is defined for two-action sets only, got {s}")
    small, big = s.actions
    if 2 * small == big:
        kind = RegimeKind.BALANCED
    elif 2 * small < big:
        kind = RegimeKind.DOMINANT
    else:
        kind = RegimeKind.NON_DOMINANT
    return Regime(kind, big - small)


def feasible(s: SubtractionSet, h: int) -> tuple[int, ...]:
    return tuple(a for a in s.actions if a <= h)


@dataclass(frozen=True)
class OutcomePair:
    o1: int
    o2: int

    def __iter__(self):
        yield self.o1
        yield self.o2

    def __str__(self) -> str:
        return f"({self.o1},{self.o2})"

    @classmethod
    def parse(cls, text: str) -> "OutcomePair":
        a, b = text.strip().strip("()").split(",")
        return cls(int(a), int(b))


@dataclass(frozen=True)
class PositionSolution:
    heap: int
    outcome: OutcomePair
    best_own: tuple[int, ...]
    pspe_moves: tuple[int, ...]


@dataclass(frozen=True)
class DiscrepancyRecord:
    heap: int
    d1: int
    d2: int
    diff_of_diff: int
