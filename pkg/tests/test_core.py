import pickle

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cumsub import (
    ALL_CONVENTIONS,
    Convention,
    PreconditionError,
    RegimeKind,
    SubtractionSet,
    classify_regime,
    dual,
    feasible,
)
from cumsub.core import InvalidSubtractionSet

from .conftest import subtraction_sets


@pytest.mark.parametrize(
    "x, expected",
    [
        (Convention.FvF, Convention.FvF),
        (Convention.AvF, Convention.FvA),
        (Convention.FvA, Convention.AvF),
        (Convention.AvA, Convention.AvA),
    ],
)
def test_dual_table(x, expected):
    assert dual(x) is expected


def test_dual_is_involution_with_two_fixed_points():
    assert all(dual(dual(x)) is x for x in ALL_CONVENTIONS)
    assert {x for x in ALL_CONVENTIONS if dual(x) is x} == {Convention.FvF, Convention.AvA}


@pytest.mark.parametrize(
    "acts, kind, delta",
    [
        ((3, 5), RegimeKind.NON_DOMINANT, 2),
        ((2, 4), RegimeKind.BALANCED, 2),
        ((2, 5), RegimeKind.DOMINANT, 3),
    ],
)
def test_classify_regime(acts, kind, delta):
    regime = classify_regime(SubtractionSet(acts))
    assert regime.kind is kind
    assert regime.delta == delta


def test_balanced_counts_as_dominant():
    assert classify_regime(SubtractionSet([2, 4])).is_dominant
    assert not classify_regime(SubtractionSet([3, 5])).is_dominant


@pytest.mark.parametrize("acts", [(3,), (1, 2, 3)])
def test_classify_regime_rejects_other_sizes(acts):
    with pytest.raises(PreconditionError):
        classify_regime(SubtractionSet(acts))


@given(st.integers(1, 60), st.integers(1, 60))
def test_regimes_partition_pairs(a, b):
    if a == b:
        return
    s = SubtractionSet(sorted((a, b)))
    small, big = s.actions
    kind = classify_regime(s).kind
    assert (kind is RegimeKind.BALANCED) == (2 * small == big)
    assert (kind is RegimeKind.DOMINANT) == (2 * small < big)
    assert (kind is RegimeKind.NON_DOMINANT) == (2 * small > big)


@pytest.mark.parametrize(
    "acts, h, expected",
    [((3, 5), 4, (3,)), ((3, 5), 2, ()), ((4, 5, 9), 9, (4, 5, 9))],
)
def test_feasible(acts, h, expected):
    assert feasible(SubtractionSet(acts), h) == expected


@given(subtraction_sets(), st.integers(0, 40))
def test_feasible_is_monotone_in_heap(s, h):
    assert set(feasible(s, h)) <= set(feasible(s, h + 1))
    assert all(a <= h for a in feasible(s, h))


def test_set_accessors_index_from_largest():
    s = SubtractionSet([3, 8, 11, 13])
    assert (s.s1(), s.s2(), s.s3()) == (13, 11, 8)
    assert (s.min_action, s.max_action) == (3, 13)
    with pytest.raises(PreconditionError):
        SubtractionSet([2, 5]).s3()


@pytest.mark.parametrize("bad", [[], [0, 3], [-1], [3, 3]])
def test_invalid_sets(bad):
    with pytest.raises(InvalidSubtractionSet):
        SubtractionSet(bad)


def test_parse_and_sorting():
    assert SubtractionSet.parse("{5, 3}").actions == (3, 5)
    assert SubtractionSet.parse("4,5,9") == SubtractionSet([9, 4, 5])
    with pytest.raises(InvalidSubtractionSet):
        SubtractionSet.parse("3,x")


def test_types_are_immutable_and_picklable():
    s = SubtractionSet([3, 5])
    with pytest.raises(AttributeError):
        s.actions = (1,)
    assert pickle.loads(pickle.dumps(s)) == s
