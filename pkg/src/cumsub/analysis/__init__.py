from .checks import (
    MONOTONICITY_RELATIONS,
    check_additive_formula,
    check_conservation,
    check_dominant_equality,
    check_dominant_extension,
    check_first_formula,
    check_first_player_advantage,
    check_main_theorem,
    check_periodicity,
    check_ratio_conjecture,
    check_tiebreak_monotonicity,
    check_zs_ava,
    is_additive,
    is_consecutive_ratio,
    predicted_first_discrepancy_2action,
    predicted_first_discrepancy_additive,
)
from .discrepancy import Criterion, discrepancy_table, first_discrepancy, mismatch_flags
from .periodicity import PeriodicityReport, detect_periodicity
from .sampling import SAMPLER_ALGORITHM, InfeasibleSample, SampleSpec, sample_random_sets
from .scan import (
    ScanPoint,
    parallel_map,
    scan_ava_vs_zero_sum,
    scan_sets,
    scan_three_action,
    scan_two_action,
)

__all__ = [
    "MONOTONICITY_RELATIONS",
    "SAMPLER_ALGORITHM",
    "Criterion",
    "InfeasibleSample",
    "PeriodicityReport",
    "SampleSpec",
    "ScanPoint",
    "check_additive_formula",
    "check_conservation",
    "check_dominant_equality",
    "check_dominant_extension",
    "check_first_formula",
    "check_first_player_advantage",
    "check_main_theorem",
    "check_periodicity",
    "check_ratio_conjecture",
    "check_tiebreak_monotonicity",
    "check_zs_ava",
    "detect_periodicity",
    "discrepancy_table",
    "first_discrepancy",
    "is_additive",
    "is_consecutive_ratio",
    "mismatch_flags",
    "parallel_map",
    "predicted_first_discrepancy_2action",
    "predicted_first_discrepancy_additive",
    "sample_random_sets",
    "scan_ava_vs_zero_sum",
    "scan_sets",
    "scan_three_action",
    "scan_two_action",
]
