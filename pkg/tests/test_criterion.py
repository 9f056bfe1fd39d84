import math

import pandas as pd
import pytest

from criterion import CriterionConfig, CriterionEvaluator, evaluate_criterion, full_trace_consistency, probe_kernel_bound
from criterion.report import ROW_COLUMNS
from lattice import build_rectangular
from sector_basis import binomial
from utils.errors import ValidationError

GRID = [0.0, 0.5, 1.0, 2.0, 4.0]


class TestCriterionConfig:

    def setup_method(self):
        self.lattice = build_rectangular([2, 5])

    def test_defaults_for_ten_vertices(self):
        cfg = CriterionConfig(self.lattice, betas=[1.0, 0.0, 1.0]).resolved()
        assert cfg.step == 1
        assert cfg.sectors == [5]
        assert cfg.betas == [0.0, 1.0]

    def test_defaults_for_twenty_vertices(self):
        cfg = CriterionConfig(build_rectangular([4, 5]), betas=[0.0]).resolved()
        assert cfg.step == 2
        assert cfg.sectors == [9, 10]

    def test_not_divisible_by_ten(self):
        with pytest.raises(ValidationError, match="v=12 is not divisible by 10"):
            CriterionConfig(build_rectangular([3, 4]), betas=[0.0]).resolved()

    def test_explicit_step_and_sectors_on_twelve(self):
        cfg = CriterionConfig(build_rectangular([3, 4]), betas=[0.0], step=1, sectors=[6, 5]).resolved()
        assert cfg.sectors == [5, 6]

    @pytest.mark.parametrize("kwargs", [
        {"betas": [-0.5]},
        {"betas": []},
        {"betas": [0.0], "factor": 0.0},
        {"betas": [0.0], "step": 1, "sectors": [0]},
        {"betas": [0.0], "step": 1, "sectors": [11]},
        {"betas": [0.0], "step": -1, "sectors": [3]},
    ])
    def test_rejected(self, kwargs):
        with pytest.raises(ValidationError):
            CriterionConfig(self.lattice, **kwargs).resolved()


class TestEvaluateCriterion:

    def setup_method(self):
        self.lattice = build_rectangular([2, 5])

    def test_infinite_temperature_margins(self):
        report = evaluate_criterion(CriterionConfig(self.lattice, betas=[0.0]))
        row = report.rows.iloc[0]
        assert list(report.rows.columns) == ROW_COLUMNS
        assert row["trace"] == 252
        assert row["lower_trace"] == 210
        assert row["criterion_margin"] == 168
        assert row["pass_criterion"]
        assert math.isclose(row["kernel_margin"], 168, rel_tol=1e-12)
        assert math.isclose(row["trace_kernel"], 42, rel_tol=1e-12)
        assert row["pass_kernel"]

    def test_infinite_temperature_larger_step(self):
        cfg = CriterionConfig(self.lattice, betas=[0.0], step=2, sectors=[3, 4, 5, 6])
        report = evaluate_criterion(cfg)
        expected = [2 * binomial(10, i - 2) - binomial(10, i) for i in (3, 4, 5, 6)]
        assert report.rows["criterion_margin"].tolist() == expected

    def test_default_grid(self):
        report = evaluate_criterion(CriterionConfig(self.lattice, betas=GRID, threads=2))
        assert len(report.rows) == len(GRID)
        assert report.consistent
        assert report.max_consistency_residual <= 1e-8
        assert report.first_passing_beta == 0.0
        traces = report.rows["trace"].tolist()
        assert all(a >= b for a, b in zip(traces, traces[1:]))
        if report.beta0_candidate is not None:
            later = report.rows.loc[report.rows["beta"] >= report.beta0_candidate]
            assert later["pass_criterion"].all()

    def test_factor_shifts_margin_by_lower_trace(self):
        base = evaluate_criterion(CriterionConfig(self.lattice, betas=[0.5, 1.0]))
        wide = evaluate_criterion(CriterionConfig(self.lattice, betas=[0.5, 1.0], factor=3.0))
        shift = wide.rows["criterion_margin"] - base.rows["criterion_margin"]
        assert shift.round(9).tolist() == base.rows["lower_trace"].round(9).tolist()
        assert wide.consistent

    def test_deterministic_across_thread_counts(self):
        one = evaluate_criterion(CriterionConfig(self.lattice, betas=GRID, threads=1))
        four = evaluate_criterion(CriterionConfig(self.lattice, betas=GRID, threads=4))
        pd.testing.assert_frame_equal(one.rows, four.rows)
        assert one.to_dict() == four.to_dict()

    def test_low_temperature_passes(self):
        report = evaluate_criterion(CriterionConfig(self.lattice, betas=[200.0]))
        row = report.rows.iloc[0]
        assert math.isclose(row["trace"], 1.0, rel_tol=1e-9)
        assert math.isclose(row["lower_trace"], 1.0, rel_tol=1e-9)
        assert row["pass_criterion"] and row["pass_kernel"]

    def test_kernel_counterexample_is_flagged(self, caplog):
        cfg = CriterionConfig(self.lattice, betas=[0.0], step=1, sectors=[2])
        with caplog.at_level("WARNING"):
            report = evaluate_criterion(cfg)
        # 45 - 10 kernel states against 10 lower states
        assert report.counterexamples == [{"beta": 0.0, "sector": 2, "kernel_margin": pytest.approx(-25.0)}]
        assert not report.all_pass_kernel
        assert report.rows.iloc[0]["criterion_margin"] == -25
        assert report.first_passing_beta is None
        assert report.summary()["kernel_counterexamples"] == 1
        assert "COUNTEREXAMPLE" in caplog.text

    def test_summary_carries_note(self):
        summary = evaluate_criterion(CriterionConfig(self.lattice, betas=[0.0])).summary()
        assert summary["lattice"] == "2x5"
        assert "Per-lattice" in summary["note"]


class TestKernelProbe:

    def test_single_bond(self):
        table = probe_kernel_bound(CriterionConfig(build_rectangular([1, 2]), betas=[0.0, 1.0], step=1, sectors=[1]))
        assert table["pass_kernel"].all()
        for row in table.itertuples():
            assert math.isclose(row.trace_kernel, math.exp(-2.0 * row.beta), rel_tol=1e-14)
            assert math.isclose(row.lower_trace, 1.0, rel_tol=1e-12)

    def test_step_zero_has_empty_kernel(self):
        lattice = build_rectangular([2, 3])
        table = probe_kernel_bound(CriterionConfig(lattice, betas=[0.5], step=0, sectors=[3]))
        assert table["trace_kernel"].tolist() == [0.0]
        assert table["kernel_margin"].tolist() == table["lower_trace"].tolist()

    def test_matches_evaluator_rows(self):
        cfg = CriterionConfig(build_rectangular([2, 5]), betas=[0.5, 2.0])
        table = probe_kernel_bound(cfg)
        report = CriterionEvaluator(cfg).evaluate()
        assert table["kernel_margin"].tolist() == report.rows["kernel_margin"].tolist()


class TestFullTrace:

    def test_single_bond(self):
        report = full_trace_consistency(build_rectangular([1, 2]), [0.0, 0.5, 1.0])
        assert report.passed
        assert report.zero_modes == 3
        for total in report.totals:
            assert math.isclose(total["total"], 3.0 + math.exp(-2.0 * total["beta"]), rel_tol=1e-12)

    def test_two_by_five(self):
        report = full_trace_consistency(build_rectangular([2, 5]), [0.0, 1.0, 5.0], threads=2)
        assert report.dimension_residual == 0
        assert report.zero_modes == 11
        assert report.totals[0]["total"] == 1024
        assert report.monotone and report.bounded_below
        assert report.passed
