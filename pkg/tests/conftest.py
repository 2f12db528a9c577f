from __future__ import annotations

import csv
from pathlib import Path

import pytest
from hypothesis import strategies as st

from cumsub import Convention, OutcomePair, SubtractionSet

DATA = Path(__file__).parent / "data"


def load_golden(name: str) -> list[dict[str, str]]:
    with open(DATA / f"golden_{name}.csv", newline="") as fh:
        return list(csv.DictReader(fh))


def golden_moves(cell: str) -> tuple[int, ...]:
    return tuple(int(m) for m in cell.split(",") if m)


def golden_outcome(cell: str) -> OutcomePair:
    return OutcomePair.parse(cell)


@pytest.fixture(scope="session")
def golden_3_5():
    return load_golden("3_5")


@pytest.fixture(scope="session")
def golden_3_8_11_13():
    return load_golden("3_8_11_13")


@pytest.fixture(scope="session")
def golden_4_5_9():
    return load_golden("4_5_9")


def subtraction_sets(min_size: int = 1, max_size: int = 5, max_action: int = 12):
    return st.lists(
        st.integers(1, max_action), min_size=min_size, max_size=max_size, unique=True
    ).map(SubtractionSet)


conventions = st.sampled_from(list(Convention))


# -- acceptance reporting -----------------------------------------------------

_acceptance_lines: list[str] = []


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    report = outcome.get_result()
    marker = item.get_closest_marker("acceptance")
    if marker is None or report.when != "call":
        return
    label = marker.args[0] if marker.args else item.name
    status = "PASS" if report.passed else "FAIL"
    _acceptance_lines.append(f"{status}  {label}")


def pytest_terminal_summary(terminalreporter):
    if not _acceptance_lines:
        return
    terminalreporter.section("acceptance criteria")
    for line in _acceptance_lines:
        terminalreporter.write_line(line)
