import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from ransomecon import (
    AttackEconomics,
    Money,
    Probability,
    derive_seed,
    expected_utility,
    replicate_figure1,
    run_trials,
    summarize,
    write_trace_csv,
)
from ransomecon.simulate import FIGURE1_RANSOM, FIGURE1_WIN_PROBS, figure1_economics

from conftest import BASE_COST, baseline_econ

MASTER_SEED = 0xDEC0DE


def joint_econ(p_win: float, ransom: float = 170404.0) -> AttackEconomics:
    return AttackEconomics.from_joint(Money(ransom), BASE_COST, Probability(p_win))


class TestRunTrials:
    def test_deterministic_for_identical_inputs(self):
        a = run_trials(baseline_econ(), 500, seed=42)
        b = run_trials(baseline_econ(), 500, seed=42)
        assert np.array_equal(a.outcomes, b.outcomes)
        assert np.array_equal(a.bank_series, b.bank_series)
        assert write_trace_csv(a) == write_trace_csv(b)

    def test_distinct_seeds_differ(self):
        a = run_trials(baseline_econ(), 500, seed=1)
        b = run_trials(baseline_econ(), 500, seed=2)
        assert not np.array_equal(a.outcomes, b.outcomes)

    def test_all_wins(self):
        trace = run_trials(baseline_econ(p_success=1.0, p_pay=1.0), 10, seed=7)
        assert trace.wins == 10
        assert trace.final_bank.amount == 10 * (170404.0 - 4200.0) == 1662040.0

    def test_all_losses(self):
        trace = run_trials(baseline_econ(p_success=0.0), 25, seed=7)
        assert trace.wins == 0
        assert trace.final_bank.amount == -4200.0 * 25

    def test_mean_profit_near_analytic(self):
        # per-trial std = x * sqrt(p (1 - p)) ~= 78268, so 3 SE ~= 7425 at k=1000
        econ = joint_econ(0.3024)
        trace = run_trials(econ, 1000, seed=MASTER_SEED)
        mean = trace.profits().mean()
        assert mean == pytest.approx(expected_utility(econ).amount, abs=7425.0)

    def test_b0_offsets_bank(self):
        plain = run_trials(baseline_econ(), 50, seed=3)
        offset = run_trials(baseline_econ(), 50, seed=3, b0=Money(1000.0))
        assert np.array_equal(offset.bank_series, plain.bank_series + 1000.0)

    def test_bank_steps_are_exact_with_integer_dollars(self):
        trace = run_trials(baseline_econ(), 200, seed=11)
        steps = np.diff(np.concatenate(([trace.b0.amount], trace.bank_series)))
        for step, won in zip(steps, trace.outcomes):
            assert step == (166204.0 if won else -4200.0)

    def test_accounting_reconstruction_is_exact(self):
        trace = run_trials(baseline_econ(), 1000, seed=MASTER_SEED)
        cost = trace.econ.cost.total().amount
        profits = np.where(trace.outcomes, trace.econ.ransom.amount - cost, -cost)
        rebuilt = trace.b0.amount + np.cumsum(profits)
        assert np.array_equal(rebuilt, trace.bank_series)

    def test_arrays_are_read_only(self):
        trace = run_trials(baseline_econ(), 10, seed=1)
        with pytest.raises(ValueError):
            trace.outcomes[0] = True
        with pytest.raises(ValueError):
            trace.bank_series[0] = 0.0

    @pytest.mark.parametrize("k", [0, -1])
    def test_rejects_non_positive_count(self, k):
        with pytest.raises(ValueError):
            run_trials(baseline_econ(), k, seed=1)

    @pytest.mark.parametrize("seed", [-1, 2**64])
    def test_rejects_out_of_range_seed(self, seed):
        with pytest.raises(ValueError):
            run_trials(baseline_econ(), 10, seed=seed)

    @given(seed=st.integers(min_value=0, max_value=2**64 - 1))
    @settings(max_examples=25)
    def test_trace_accounting_property(self, seed):
        trace = run_trials(baseline_econ(), 100, seed=seed)
        cost = trace.econ.cost.total().amount
        profits = np.where(trace.outcomes, trace.econ.ransom.amount - cost, -cost)
        assert np.array_equal(trace.b0.amount + np.cumsum(profits), trace.bank_series)
        assert trace.wins == int(trace.outcomes.sum())


class TestSummarize:
    def test_all_win_rate(self):
        trace = run_trials(baseline_econ(p_success=1.0, p_pay=1.0), 10, seed=1)
        assert summarize(trace).empirical_win_rate.value == 1.0

    def test_win_rate_is_definitional(self):
        trace = run_trials(baseline_econ(), 1000, seed=MASTER_SEED)
        summary = summarize(trace)
        assert summary.empirical_win_rate.value == trace.wins / 1000

    def test_final_bank_is_last_element(self):
        trace = run_trials(baseline_econ(), 77, seed=5)
        assert summarize(trace).final_bank.amount == trace.bank_series[-1]

    def test_sample_std_uses_n_minus_one(self):
        trace = run_trials(baseline_econ(), 100, seed=5)
        summary = summarize(trace)
        assert summary.sample_std_per_trial_profit.amount == pytest.approx(
            float(trace.profits().std(ddof=1))
        )

    def test_single_trial_std_is_zero(self):
        trace = run_trials(baseline_econ(), 1, seed=5)
        assert summarize(trace).sample_std_per_trial_profit.amount == 0.0


class TestDeriveSeed:
    def test_deterministic(self):
        assert derive_seed(MASTER_SEED, 3) == derive_seed(MASTER_SEED, 3)

    def test_streams_differ(self):
        seeds = {derive_seed(MASTER_SEED, i) for i in range(100)}
        assert len(seeds) == 100

    def test_in_range(self):
        for i in range(10):
            assert 0 <= derive_seed(MASTER_SEED, i) < 2**64

    def test_rejects_negative_stream(self):
        with pytest.raises(ValueError):
            derive_seed(MASTER_SEED, -1)


class TestReplicateFigure1:
    def test_common_seed_couples_runs_monotonically(self):
        traces = replicate_figure1((MASTER_SEED,) * 3)
        finals = [t.final_bank.amount for t in traces]
        assert finals[0] <= finals[1] <= finals[2]

    def test_final_banks_within_three_total_std(self):
        # total std of the final bank = x * sqrt(p (1 - p)) * sqrt(k)
        traces = replicate_figure1((MASTER_SEED,) * 3)
        for p, trace in zip(FIGURE1_WIN_PROBS, traces):
            expectation = 1000 * (p * FIGURE1_RANSOM - 4200.0)
            total_std = FIGURE1_RANSOM * math.sqrt(p * (1 - p)) * math.sqrt(1000)
            assert abs(trace.final_bank.amount - expectation) <= 3 * total_std

    def test_needs_three_seeds(self):
        with pytest.raises(ValueError):
            replicate_figure1((1, 2))

    def test_mean_ordering_over_thirty_seed_triples(self):
        finals = {p: [] for p in FIGURE1_WIN_PROBS}
        for i in range(30):
            seed = derive_seed(MASTER_SEED, i)
            for p, trace in zip(FIGURE1_WIN_PROBS, replicate_figure1((seed,) * 3)):
                finals[p].append(trace.final_bank.amount)
        means = [np.mean(finals[p]) for p in FIGURE1_WIN_PROBS]
        assert means[0] < means[1] < means[2]


class TestStatisticalSoundness:
    def test_grand_mean_and_win_rate_over_hundred_seeds(self):
        p = 0.3024
        econ = joint_econ(p)
        per_trial_std = FIGURE1_RANSOM * math.sqrt(p * (1 - p))
        profits = []
        wins = 0
        for i in range(100):
            trace = run_trials(econ, 1000, seed=derive_seed(MASTER_SEED, i))
            profits.append(trace.profits().mean())
            wins += trace.wins
        grand_mean = np.mean(profits)
        tolerance = 3 * per_trial_std / math.sqrt(100 * 1000)
        assert abs(grand_mean - expected_utility(econ).amount) <= tolerance
        win_rate = wins / (100 * 1000)
        assert abs(win_rate - p) <= 3 * math.sqrt(p * (1 - p) / (100 * 1000))

    def test_final_bank_slope_matches_k_times_ransom(self):
        # least-squares slope of final bank against p approximates k * x
        points_p, points_bank = [], []
        for i in range(50):
            seed = derive_seed(MASTER_SEED, 1000 + i)
            for p in FIGURE1_WIN_PROBS:
                trace = run_trials(figure1_economics(p), 1000, seed=seed)
                points_p.append(p)
                points_bank.append(trace.final_bank.amount)
        slope = np.polyfit(points_p, points_bank, 1)[0]
        assert slope == pytest.approx(1000 * FIGURE1_RANSOM, rel=0.05)
