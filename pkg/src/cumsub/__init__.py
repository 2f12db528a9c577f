"""Cumulative self-interest subtraction games under deterministic tie-breaking."""

__version__ = "0.1.0"

from .core import (
    ALL_CONVENTIONS,
    Convention,
    DiscrepancyRecord,
    OutcomePair,
    PositionSolution,
    PreconditionError,
    Regime,
    RegimeKind,
    SubtractionSet,
    classify_regime,
    dual,
    feasible,
)
from .solver import (
    BudgetExceeded,
    SolveTable,
    naive_pspe,
    outcome_arrays,
    play_line,
    solve,
    zero_sum_solve,
    zs_play_line,
)

__all__ = [
    "ALL_CONVENTIONS",
    "BudgetExceeded",
    "Convention",
    "DiscrepancyRecord",
    "OutcomePair",
    "PositionSolution",
    "PreconditionError",
    "Regime",
    "RegimeKind",
    "SolveTable",
    "SubtractionSet",
    "classify_regime",
    "dual",
    "feasible",
    "naive_pspe",
    "outcome_arrays",
    "play_line",
    "solve",
    "zero_sum_solve",
    "zs_play_line",
]
