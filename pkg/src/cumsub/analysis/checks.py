"""Counterexample searches for the structural claims about these games.

Every checker returns a list of violations; an empty list means the claim
held up to ``hmax``. Checkers raise ``PreconditionError`` for sets outside
the claim's hypothesis.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Mapping

from ..core import (
    ALL_CONVENTIONS,
    Convention,
    PreconditionError,
    SubtractionSet,
    classify_regime,
)
from ..solver import outcome_arrays, zero_sum_solve
from .discrepancy import Criterion, first_discrepancy, mismatch_flags
from .periodicity import detect_periodicity

F, FA, AF, A = Convention.FvF, Convention.FvA, Convention.AvF, Convention.AvA

Arrays = Mapping[Convention, tuple[list[int], list[int]]]

# (id, player index 0/1, left convention, operator, right convention)
MONOTONICITY_RELATIONS = (
    ("o1_FvF >= o1_FvA", 0, F, ">=", FA),
    ("o2_FvF == o2_FvA", 1, F, "==", FA),
    ("o1_FvF == o1_AvF", 0, F, "==", AF),
    ("o2_FvF >= o2_AvF", 1, F, ">=", AF),
    ("o1_AvA == o1_FvA", 0, A, "==", FA),
    ("o2_AvA <= o2_FvA", 1, A, "<=", FA),
    ("o1_AvA <= o1_AvF", 0, A, "<=", AF),
    ("o2_AvA == o2_AvF", 1, A, "==", AF),
)

_OPS = {
    ">=": lambda a, b: a >= b,
    "<=": lambda a, b: a <= b,
    "==": lambda a, b: a == b,
}


def _arrays(s: SubtractionSet, hmax: int, arrays: Arrays | None, convs=ALL_CONVENTIONS) -> Arrays:
    if arrays is not None:
        return arrays
    return outcome_arrays(s, hmax, convs)


def check_conservation(
    s: SubtractionSet, hmax: int, arrays: Arrays | None = None
) -> list[tuple[int, Convention]]:
    """Heaps where the unclaimed remainder is negative or reachable."""
    arrays = _arrays(s, hmax, arrays)
    bad = []
    for x, (o1, o2) in arrays.items():
        for h in range(hmax + 1):
            slack = h - o1[h] - o2[h]
            if not 0 <= slack < s.min_action or o1[h] < 0 or o2[h] < 0:
                bad.append((h, x))
    return sorted(bad, key=lambda t: (t[0], t[1].value))


def check_first_player_advantage(
    s: SubtractionSet, x: Convention, hmax: int, arrays: Arrays | None = None
) -> list[int]:
    o1, o2 = _arrays(s, hmax, arrays, (x,))[x]
    return [h for h in range(hmax + 1) if o2[h] > o1[h]]


def check_tiebreak_monotonicity(
    s: SubtractionSet, hmax: int, arrays: Arrays | None = None
) -> list[tuple[int, str]]:
    arrays = _arrays(s, hmax, arrays)
    bad = []
    for h in range(hmax + 1):
        for rel_id, player, left, op, right in MONOTONICITY_RELATIONS:
            if not _OPS[op](arrays[left][player][h], arrays[right][player][h]):
                bad.append((h, rel_id))
    return bad


def check_main_theorem(
    s: SubtractionSet, hmax: int, arrays: Arrays | None = None
) -> list[tuple[int, int]]:
    """``(heap, player)`` where AvA pays that player more than FvF."""
    arrays = _arrays(s, hmax, arrays, (F, A))
    bad = []
    for player in (0, 1):
        fvf, ava = arrays[F][player], arrays[A][player]
        bad.extend((h, player + 1) for h in range(hmax + 1) if ava[h] > fvf[h])
    return sorted(bad)


def check_dominant_equality(
    s: SubtractionSet, hmax: int, arrays: Arrays | None = None
) -> list[tuple[int, tuple[Convention, Convention]]]:
    if not classify_regime(s).is_dominant:
        raise PreconditionError(f"{s} is not in the dominant regime")
    arrays = _arrays(s, hmax, arrays)
    bad = []
    for h in range(hmax + 1):
        for i, x in enumerate(ALL_CONVENTIONS):
            for y in ALL_CONVENTIONS[i + 1:]:
                if (arrays[x][0][h], arrays[x][1][h]) != (arrays[y][0][h], arrays[y][1][h]):
                    bad.append((h, (x, y)))
    return bad


def is_consecutive_ratio(s: SubtractionSet) -> bool:
    """True for two-action sets with ``s1/s2 == (k+1)/k``."""
    r = Fraction(s.s1(), s.s2())
    return r.numerator - r.denominator == 1


def predicted_first_discrepancy_2action(s: SubtractionSet, bound: int = 64) -> int | None:
    """First FvF/AvA discrepancy heap from the conjectured closed form.

    Looks for ``(i, k)`` with ``(i+1)/i > s1/s2 > (i+2)/(k+i)``, taking the
    largest such ``i`` and then the smallest ``k``, and returns
    ``(i+2)*s2 + i*k*s1``.
    """
    if len(s) != 2:
        raise PreconditionError(f"need a two-action set, got {s}")
    if classify_regime(s).is_dominant:
        raise PreconditionError(f"{s} is in the dominant regime")
    if is_consecutive_ratio(s):
        raise PreconditionError(f"{s} has ratio (k+1)/k")
    s2, s1 = s.s2(), s.s1()
    r = Fraction(s1, s2)
    for i in range(bound, 0, -1):
        if not Fraction(i + 1, i) > r:
            continue
        for k in range(1, bound + 1):
            if r > Fraction(i + 2, k + i):
                return (i + 2) * s2 + i * k * s1
    return None


def is_additive(s: SubtractionSet) -> bool:
    return len(s) == 3 and s.s1() == s.s2() + s.s3()


def predicted_first_discrepancy_additive(s: SubtractionSet) -> int:
    if not is_additive(s):
        raise PreconditionError(f"{s} is not of the form {{a, b, a+b}}")
    s3, s2, s1 = s.actions
    if s2 % s3 == 0:
        raise PreconditionError(f"{s} has integer ratio s2/s3")
    i = s2 // s3
    return (i + 2) * s2 + i * s1


def check_ratio_conjecture(s: SubtractionSet, hmax: int) -> list[int]:
    """Sets with ``s1/s2 = (k+1)/k`` should never show an FvF/AvA discrepancy."""
    if len(s) != 2 or not is_consecutive_ratio(s):
        raise PreconditionError(f"{s} is not a two-action (k+1)/k set")
    h = first_discrepancy(s, F, A, hmax, Criterion.DIFF_OF_DIFF)
    return [] if h is None else [h]


def check_first_formula(s: SubtractionSet, hmax: int) -> list[tuple[int | None, int | None]]:
    """``[(predicted, observed)]`` when the two-action closed form misses.

    The search horizon is stretched to the predicted heap if that lies
    beyond ``hmax``, so a late discrepancy is not mistaken for a miss.
    """
    predicted = predicted_first_discrepancy_2action(s)
    horizon = max(hmax, predicted or 0)
    observed = first_discrepancy(s, F, A, horizon, Criterion.DIFF_OF_DIFF)
    return [] if observed == predicted else [(predicted, observed)]


def check_additive_formula(s: SubtractionSet, hmax: int) -> list[tuple[int | None, int | None]]:
    if not is_additive(s):
        raise PreconditionError(f"{s} is not of the form {{a, b, a+b}}")
    s3, s2, _ = s.actions
    if s2 % s3 == 0:
        observed = first_discrepancy(s, F, A, hmax, Criterion.DIFF_OF_DIFF)
        return [] if observed is None else [(None, observed)]
    predicted = predicted_first_discrepancy_additive(s)
    observed = first_discrepancy(s, F, A, max(hmax, predicted), Criterion.DIFF_OF_DIFF)
    return [] if observed == predicted else [(predicted, observed)]


def zs_ava_claimed_equal(s: SubtractionSet) -> bool:
    if len(s) == 2:
        return True
    if len(s) == 3:
        s3, s2, s1 = s.actions
        return s2 <= 2 * s3 or s1 >= s2 + s3
    return False


def check_zs_ava(s: SubtractionSet, hmax: int) -> list[int]:
    """Heaps where the zero-sum value differs from the AvA utility gap."""
    if not zs_ava_claimed_equal(s):
        raise PreconditionError(f"no coincidence claim covers {s}")
    flags = mismatch_flags(s, hmax, Criterion.ZS_VS_AVA)
    return [h for h, hit in enumerate(flags) if hit]


def check_dominant_extension(s: SubtractionSet, hmax: int) -> list[int]:
    """``{s3,s2,s1}`` with ``s1 >= 2*s2`` and a discrepancy-free ``{s3,s2}``
    should be discrepancy-free as well."""
    if len(s) != 3:
        raise PreconditionError(f"need a three-action set, got {s}")
    s3, s2, s1 = s.actions
    if s1 < 2 * s2:
        raise PreconditionError(f"{s} has s1 < 2*s2")
    pair = SubtractionSet((s3, s2))
    if first_discrepancy(pair, F, A, hmax, Criterion.DIFF_OF_DIFF) is not None:
        raise PreconditionError(f"{pair} already has a discrepancy")
    h = first_discrepancy(s, F, A, hmax, Criterion.DIFF_OF_DIFF)
    return [] if h is None else [h]


def periodicity_sequences(s: SubtractionSet, hmax: int) -> dict[str, list[int]]:
    arrays = outcome_arrays(s, hmax, (F, A))
    (f1, f2), (a1, a2) = arrays[F], arrays[A]
    return {
        "o_zs": zero_sum_solve(s, hmax),
        "delta1": [a - f for a, f in zip(a1, f1)],
        "delta2": [a - f for a, f in zip(a2, f2)],
    }


def check_periodicity(s: SubtractionSet, hmax: int) -> list[str]:
    """Names of sequences with no period dividing ``2 * max S`` within ``hmax``."""
    period = 2 * s.max_action
    if hmax + 1 <= 2 * period:
        raise PreconditionError(f"hmax={hmax} is too short for period {period}")
    bad = []
    for name, seq in periodicity_sequences(s, hmax).items():
        report = detect_periodicity(seq, period, "pure")
        if report is None or period % report.period:
            bad.append(name)
    return bad
