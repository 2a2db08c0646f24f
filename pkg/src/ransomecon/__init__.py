"""Attacker-side economics of ransomware campaigns.

Closed-form expected value over attack lotteries, analytic break-even
solvers, deterministic seeded Monte Carlo of repeated attacks,
mitigation what-ifs, and a scenario-file front end with CSV output.
"""

from . import errors
from .breakeven import (
    SweepGrid,
    SweepResult,
    SweepRow,
    break_even_cost,
    break_even_multiplier,
    break_even_pay_probability,
    break_even_ransom,
    payout_multiple,
    reevaluate_row,
    run_sweep,
)
from .economics import (
    AttackEconomics,
    CostModel,
    Lottery,
    Money,
    Probability,
    expected_bank,
    expected_utility,
    lottery_expected_utility,
    per_trial_profit,
)
from .mitigation import (
    AnnualizationInputs,
    AnnualizedComparison,
    AttackSuccessReduction,
    BackupAdoption,
    CyberInsurance,
    DecrypterAvailability,
    MitigationAction,
    MitigationReport,
    apply_action,
    apply_portfolio,
    evaluate,
    required_pay_probability_for_target_ev,
)
from .output import format_money, format_probability, write_sweep_csv, write_trace_csv
from .scenario import ScenarioFile, SimulationSpec, parse_scenario, write_scenario
from .simulate import (
    TraceSummary,
    TrialTrace,
    derive_seed,
    replicate_figure1,
    run_trials,
    summarize,
)

__version__ = "0.1.0"

__all__ = [
    "AnnualizationInputs",
    "AnnualizedComparison",
    "AttackEconomics",
    "AttackSuccessReduction",
    "BackupAdoption",
    "CostModel",
    "CyberInsurance",
    "DecrypterAvailability",
    "Lottery",
    "MitigationAction",
    "MitigationReport",
    "Money",
    "Probability",
    "ScenarioFile",
    "SimulationSpec",
    "SweepGrid",
    "SweepResult",
    "SweepRow",
    "TraceSummary",
    "TrialTrace",
    "apply_action",
    "apply_portfolio",
    "break_even_cost",
    "break_even_multiplier",
    "break_even_pay_probability",
    "break_even_ransom",
    "derive_seed",
    "errors",
    "evaluate",
    "expected_bank",
    "expected_utility",
    "format_money",
    "format_probability",
    "lottery_expected_utility",
    "parse_scenario",
    "payout_multiple",
    "per_trial_profit",
    "reevaluate_row",
    "replicate_figure1",
    "required_pay_probability_for_target_ev",
    "run_sweep",
    "run_trials",
    "summarize",
    "write_scenario",
    "write_sweep_csv",
    "write_trace_csv",
]
