import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cumsub import (
    ALL_CONVENTIONS,
    BudgetExceeded,
    Convention,
    OutcomePair,
    SubtractionSet,
    dual,
    naive_pspe,
    outcome_arrays,
    play_line,
    solve,
    zero_sum_solve,
    zs_play_line,
)
from cumsub.solver import naive_zero_sum

from .conftest import conventions, golden_moves, golden_outcome, subtraction_sets

F, FA, AF, A = Convention.FvF, Convention.FvA, Convention.AvF, Convention.AvA
S35 = SubtractionSet([3, 5])
S459 = SubtractionSet([4, 5, 9])
S3_8_11_13 = SubtractionSet([3, 8, 11, 13])


@pytest.mark.parametrize(
    "s, x, h, outcome, moves",
    [
        (S35, F, 14, (8, 6), (3,)),
        (S35, A, 14, (8, 5), None),
        (S35, F, 15, (10, 5), None),
        (S459, F, 61, (33, 28), (5, 9)),
        (S459, FA, 61, (32, 29), (4,)),
        (S3_8_11_13, F, 28, (14, 14), (11,)),
        (S3_8_11_13, AF, 28, (14, 13), (3,)),
        (S3_8_11_13, F, 36, (22, 14), (8,)),
        (S3_8_11_13, FA, 36, (22, 13), (11,)),
    ],
)
def test_solve_examples(s, x, h, outcome, moves):
    t = solve(s, h)
    assert tuple(t.outcome(x, h)) == outcome
    if moves is not None:
        assert t.moves[x][h] == moves


@pytest.mark.parametrize("x", ALL_CONVENTIONS)
def test_below_min_action_is_terminal(x):
    t = solve(S35, 2)
    for h in range(3):
        pos = t.position(x, h)
        assert pos.outcome == OutcomePair(0, 0)
        assert pos.best_own == () and pos.pspe_moves == ()


def test_table_1(golden_3_5):
    t = solve(S35, 15)
    for row in golden_3_5:
        h = int(row["heap"])
        assert t.outcome(F, h) == golden_outcome(row["FvF"])
        assert t.outcome(A, h) == golden_outcome(row["AvA"])


@pytest.mark.parametrize("name, s, hmax", [("3_8_11_13", S3_8_11_13, 49), ("4_5_9", S459, 99)])
def test_appendix_tables(name, s, hmax, request):
    rows = request.getfixturevalue(f"golden_{name}")
    assert len(rows) == hmax + 1
    t = solve(s, hmax)
    for row in rows:
        h = int(row["heap"])
        for x in ALL_CONVENTIONS:
            assert t.outcome(x, h) == golden_outcome(row[x.value]), (h, x)
            assert t.moves[x][h] == golden_moves(row[f"{x.value}_moves"]), (h, x)
            if x is not F:
                assert t.o1[x][h] - t.o1[F][h] == int(row[f"{x.value}_d_alpha"])
                assert t.o2[x][h] - t.o2[F][h] == int(row[f"{x.value}_d_beta"])


def test_fast_arrays_match_table():
    for s in (S35, S459, S3_8_11_13, SubtractionSet([1, 2, 7])):
        t = solve(s, 120)
        arrays = outcome_arrays(s, 120)
        for x in ALL_CONVENTIONS:
            assert arrays[x] == (list(t.o1[x]), list(t.o2[x]))


@given(subtraction_sets(max_size=4, max_action=9), st.integers(0, 40))
def test_partial_conventions_match_full_solve(s, hmax):
    full = solve(s, hmax)
    for x in ALL_CONVENTIONS:
        alone = solve(s, hmax, (x,))
        assert alone.o1[x] == full.o1[x] and alone.o2[x] == full.o2[x]
        assert alone.moves[x] == full.moves[x]


@settings(max_examples=60, deadline=None)
@given(subtraction_sets(min_size=2, max_size=4, max_action=10), conventions, st.integers(0, 30))
def test_matches_tree_oracle(s, x, h):
    t = solve(s, h)
    assert t.outcome(x, h) == naive_pspe(s, x, h, memo=True)


@settings(max_examples=40, deadline=None)
@given(subtraction_sets(min_size=2, max_size=3, max_action=9), conventions, st.integers(0, 24))
def test_matches_unmemoised_oracle_when_tree_is_small(s, x, h):
    try:
        ref = naive_pspe(s, x, h, budget=50_000)
    except BudgetExceeded:
        return
    assert solve(s, h).outcome(x, h) == ref


@pytest.mark.parametrize(
    "s, x, h, expected",
    [(S35, F, 14, (8, 6)), (S35, A, 10, (5, 5)), (S35, A, 2, (0, 0)), (S459, F, 1, (0, 0))],
)
def test_naive_examples(s, x, h, expected):
    assert tuple(naive_pspe(s, x, h)) == expected


def test_naive_budget_guard():
    with pytest.raises(BudgetExceeded):
        naive_pspe(SubtractionSet([1, 2]), F, 60, budget=10_000)


@settings(max_examples=60, deadline=None)
@given(subtraction_sets(max_size=4, max_action=10), st.integers(0, 80))
def test_conservation_and_move_sets(s, hmax):
    t = solve(s, hmax)
    for x in ALL_CONVENTIONS:
        for h in range(hmax + 1):
            pos = t.position(x, h)
            slack = h - pos.outcome.o1 - pos.outcome.o2
            assert 0 <= slack < s.min_action
            assert set(pos.pspe_moves) <= set(pos.best_own)
            assert all(a <= h for a in pos.best_own)
            assert bool(pos.pspe_moves) == (h >= s.min_action)


@settings(max_examples=40, deadline=None)
@given(subtraction_sets(max_size=4, max_action=10), conventions, st.integers(0, 60))
def test_refined_moves_are_outcome_equivalent(s, x, h):
    t = solve(s, h)
    dx = dual(x)
    pairs = {(a + t.o2[dx][h - a], t.o1[dx][h - a]) for a in t.moves[x][h]}
    assert len(pairs) <= 1
    if pairs:
        assert pairs == {tuple(t.outcome(x, h))}


@settings(max_examples=40, deadline=None)
@given(subtraction_sets(max_size=4, max_action=10), conventions, st.integers(0, 60))
def test_play_line_reconciles_with_table(s, x, h):
    t = solve(s, h)
    line = play_line(t, x, h)
    mine = sum(a for m, a in line if m == 1)
    theirs = sum(a for m, a in line if m == 2)
    assert (mine, theirs) == tuple(t.outcome(x, h))


def test_play_line_examples():
    assert play_line(solve(S35, 14), F, 14) == [(1, 3), (2, 3), (1, 5), (2, 3)]
    assert play_line(solve(S35, 14), F, 0) == []
    assert play_line(solve(S459, 61), FA, 61)[0] == (1, 4)
    with pytest.raises(ValueError):
        play_line(solve(S35, 10), F, 11)


# zero-sum ---------------------------------------------------------------------

def test_zero_sum_examples():
    zs = zero_sum_solve(S35, 14)
    assert zs[2] == 0
    # frozen from naive_zero_sum (un-memoised minimax)
    assert zs[14] == naive_zero_sum(S35, 14) == 3
    assert zero_sum_solve(SubtractionSet([1]), 9) == [n % 2 for n in range(10)]


@settings(max_examples=40, deadline=None)
@given(subtraction_sets(max_size=3, max_action=8), st.integers(0, 22))
def test_zero_sum_matches_minimax(s, x):
    assert zero_sum_solve(s, x)[x] == naive_zero_sum(s, x)


@given(subtraction_sets(max_size=5, max_action=15), st.integers(0, 200))
def test_zero_sum_value_bounded_by_max_action(s, hmax):
    assert all(abs(v) <= s.max_action for v in zero_sum_solve(s, hmax))


def test_zs_play_line_examples():
    assert zs_play_line(S35, 14) == [(1, 5), (2, 5), (1, 3)]
    assert zs_play_line(S35, 2) == []
    assert zs_play_line(S35, 5) == [(1, 5)]


@given(subtraction_sets(max_size=4, max_action=10), st.integers(0, 80))
def test_zs_play_line_score(s, h):
    line = zs_play_line(s, h)
    score = sum(a if m == 1 else -a for m, a in line)
    assert score == zero_sum_solve(s, h)[h]
