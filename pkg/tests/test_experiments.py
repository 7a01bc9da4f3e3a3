"""Tests for the statistical harness, closed-form bounds and calibration."""

import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from kout_mincut.application.contraction import derive_seeds
from kout_mincut.application.experiments import (
    calibrate,
    calibrate_band,
    confirm,
    cut_degree_ratios,
    cut_epsilon,
    diameter_sum,
    exact_preservation_probability,
    inequality_holds,
    max_cut_degree_ratio,
    measure_component_count,
    measure_diameter_sum,
    measure_edge_budget,
    measure_preservation,
    measure_runtime_scaling,
    planted_side,
    preservation_floor,
)
from kout_mincut.application.graph import cut_from_side, generate
from kout_mincut.domain.exceptions import ExperimentError, PlantedCutError
from kout_mincut.domain.models import InstanceDescriptor, PipelineVariant, TrialBatch, TrialRecord


def _batch(values, measure="edge_budget", extra=None):
    records = [TrialRecord(seed=i, value=v, extra=extra[i] if extra else {}) for i, v in enumerate(values)]
    return TrialBatch.from_records(InstanceDescriptor(family="cycle", params=[8.0]), measure, records)


class TestBounds:
    """Test cases for the closed-form quantities."""

    def test_preservation_floor(self):
        """Test the one- and two-sample floors at eps = 1."""
        assert preservation_floor(1.0, k=1) == pytest.approx(math.exp(-4))
        assert preservation_floor(1.0) == pytest.approx(3.35e-4, rel=1e-2)
        assert preservation_floor(0.5, k=2) == pytest.approx(preservation_floor(0.5, k=1) ** 2)

    def test_preservation_floor_range(self):
        """Test that eps must lie in (0, 1]."""
        for eps in (0.0, 1.5):
            with pytest.raises(ExperimentError):
                preservation_floor(eps)

    def test_exact_probability(self, two_cliques_8_3):
        """Test the per-instance product on the planted cut."""
        cut = cut_from_side(two_cliques_8_3, range(8))
        ratios = cut_degree_ratios(two_cliques_8_3, cut)
        assert ratios == {0: 0.125, 1: 0.125, 2: 0.125, 8: 0.125, 9: 0.125, 10: 0.125}
        assert max_cut_degree_ratio(two_cliques_8_3, cut) == 0.125
        assert exact_preservation_probability(two_cliques_8_3, cut, k=1) == pytest.approx((7 / 8) ** 6)
        assert exact_preservation_probability(two_cliques_8_3, cut, k=2) == pytest.approx((7 / 8) ** 12)

    def test_cut_epsilon(self):
        """Test the slack of a cut relative to lambda."""
        assert cut_epsilon(3, 3) == 1.0
        assert cut_epsilon(5, 3) == pytest.approx(1 / 3)
        with pytest.raises(ExperimentError):
            cut_epsilon(6, 3)
        with pytest.raises(ExperimentError):
            cut_epsilon(1, 0)

    def test_inequality_example(self):
        """Test one point and the vectorized form."""
        assert inequality_holds(0.1, 0.5) is True
        holds = inequality_holds(np.array([0.1, 0.2]), np.array([0.5, 0.9]))
        assert holds.tolist() == [True, True]

    def test_inequality_domain(self):
        """Test that the claim is only evaluated on 0 < x <= y < 1."""
        for x, y in ((0.0, 0.5), (0.6, 0.5), (0.5, 1.0)):
            with pytest.raises(ExperimentError):
                inequality_holds(x, y)

    @given(st.floats(min_value=1e-3, max_value=0.99), st.floats(min_value=0.0, max_value=1.0))
    def test_inequality_holds_everywhere(self, y, fraction):
        """Test the claim over its whole domain."""
        x = max(1e-3, y * fraction)
        assert inequality_holds(x, y)


class TestDiameterSum:
    """Test cases for diameter_sum and measure_diameter_sum."""

    def test_path(self):
        """Test a sample covering a 3-vertex path and one covering a single edge."""
        g = generate("path", 3)
        assert diameter_sum(g, np.array([[0], [0], [1]])) == 2
        assert diameter_sum(g, np.array([[0], [0], [0]])) == 1

    def test_single_edge(self):
        """Test that delta = 1 reports raw sums without a ratio."""
        batch = measure_diameter_sum("path", [2], trials=5, seed=0)
        assert batch.values().tolist() == [1.0] * 5
        assert all(r.extra == {} for r in batch.records)
        assert batch.parameters["scale"] == 0.0

    def test_ratio(self):
        """Test the normalized ratio once delta >= 2."""
        batch = measure_diameter_sum("cycle", [10], trials=10, seed=1)
        scale = 10 * math.log(2) / 2
        assert batch.parameters["scale"] == pytest.approx(scale)
        for record in batch.records:
            assert record.extra["ratio"] == pytest.approx(record.value / scale)

    @pytest.mark.slow
    @pytest.mark.parametrize("size", [17, 33, 65])
    def test_fresh_ratios_stay_in_pilot_band(self, size):
        """Test that fresh-seed ratios on 16 disjoint cliques of degree size - 1 stay inside the pilot band."""
        pilot = measure_diameter_sum("disjoint_cliques", [16, size], trials=50, seed=size)
        lower, upper = calibrate_band(pilot, key="ratio")
        fresh = measure_diameter_sum("disjoint_cliques", [16, size], trials=100, seed=derive_seeds(size, 2)[1])
        report = confirm(fresh, upper, key="ratio", lower=lower)
        assert report.trials == 100
        assert report.passed, report.violating_seeds


class TestComponentCount:
    """Test cases for measure_component_count."""

    def test_disjoint_cliques(self):
        """Test that k-out never merges components of the input."""
        batch = measure_component_count("disjoint_cliques", [3, 4], k=2, trials=20, seed=0)
        assert batch.trial_count == 20
        assert batch.parameters["graph_components"] == 3
        assert batch.summary.min >= 3
        for record in batch.records:
            assert record.extra["ratio"] == pytest.approx(record.value * 3 / 12)

    def test_reproducible(self):
        """Test that the master seed fixes every trial."""
        first = measure_component_count("two_cliques", [8, 3], k=2, trials=10, seed=4)
        second = measure_component_count("two_cliques", [8, 3], k=2, trials=10, seed=4)
        assert first == second

    def test_negative_trials(self):
        """Test that a trial count must be non-negative."""
        with pytest.raises(ExperimentError):
            measure_component_count("cycle", [5], k=2, trials=-1, seed=0)


class TestPreservation:
    """Test cases for measure_preservation."""

    def test_planted_side(self):
        """Test the first clique of the planted families."""
        assert planted_side("two_cliques", [8, 3]) == list(range(8))
        assert planted_side("clique_chain", [3, 5, 2]) == list(range(5))
        with pytest.raises(ExperimentError):
            planted_side("cycle", [5])

    def test_two_cliques(self):
        """Test the measured frequency against the exact product and the floor."""
        batch = measure_preservation("two_cliques", [8, 3], eps=1.0, trials=400, seed=0)
        parameters = batch.parameters
        assert parameters["lambda"] == 3
        assert parameters["cut_size"] == 3
        assert parameters["exact_probability"] == pytest.approx((7 / 8) ** 12)
        assert abs(parameters["frequency"] - parameters["exact_probability"]) < 0.1
        assert parameters["above_floor"]
        assert parameters["max_cut_degree_ratio"] <= parameters["cut_degree_ratio_bound"]
        assert set(batch.values().tolist()) <= {0.0, 1.0}

    def test_one_out(self):
        """Test the single-sample probability."""
        batch = measure_preservation("two_cliques", [8, 3], eps=1.0, trials=50, seed=2, k=1)
        assert batch.parameters["exact_probability"] == pytest.approx((7 / 8) ** 6)
        assert batch.parameters["floor"] == pytest.approx(math.exp(-4))

    def test_singleton_side_rejected(self):
        """Test that a singleton planted cut is refused."""
        with pytest.raises(PlantedCutError):
            measure_preservation("two_cliques", [8, 3], eps=1.0, trials=5, seed=0, side=[0])

    def test_large_cut_rejected(self):
        """Test that a cut above (2 - eps) lambda is refused."""
        with pytest.raises(PlantedCutError):
            measure_preservation("two_cliques", [8, 3], eps=1.0, trials=5, seed=0, side=[0, 1])

    @pytest.mark.slow
    def test_frequency_over_many_trials(self):
        """Test 100,000 trials against the analytic floor and three sigma of the exact product."""
        batch = measure_preservation("two_cliques", [8, 3], eps=1.0, trials=100_000, seed=7)
        parameters = batch.parameters
        assert parameters["sigma_tolerance"] == 3.0
        assert parameters["frequency"] >= parameters["floor"]
        assert parameters["above_floor"]
        assert parameters["within_tolerance"], parameters["z_score"]


class TestEdgeBudget:
    """Test cases for measure_edge_budget."""

    def test_records(self, quick_config):
        """Test the per-trial measurements."""
        batch = measure_edge_budget("two_cliques", [8, 3], quick_config(16, q=6), trials=4, seed=0)
        assert batch.trial_count == 4
        assert batch.parameters["q"] == 6
        for record in batch.records:
            assert record.extra["edge_ratio"] == pytest.approx(record.value / 16)
            assert record.extra["supernodes"] >= 1
            assert record.extra["supernode_ratio"] == pytest.approx(record.extra["supernodes"] * 7 / 16)

    @pytest.mark.slow
    @pytest.mark.parametrize(
        ("family", "params"),
        [("two_cliques", [10, 3]), ("clique_chain", [4, 6, 2]), ("cycle", [20])],
    )
    def test_calibrated_budgets_hold_on_fresh_seeds(self, family, params):
        """Test pilot-calibrated supernode and edge budgets on 100 fresh-seed trials at the default configuration."""
        pilot = measure_edge_budget(family, params, None, trials=100, seed=3)
        fresh = measure_edge_budget(family, params, None, trials=100, seed=derive_seeds(3, 2)[1])
        assert pilot.parameters["low_degree_violations"] == 0
        assert fresh.parameters["low_degree_violations"] == 0
        for key in ("supernode_ratio", "edge_ratio"):
            report = confirm(fresh, calibrate(pilot, key=key), key=key)
            assert report.trials == 100
            assert report.passed, (key, report.violating_seeds)


class TestRuntimeScaling:
    """Test cases for measure_runtime_scaling."""

    def test_cycles(self):
        """Test one record per size and one growth factor per consecutive pair."""
        batch = measure_runtime_scaling("cycle", [[8], [16]], PipelineVariant.DIRECT, seed=0)
        assert batch.trial_count == 2
        assert [r.extra["n"] for r in batch.records] == [8, 16]
        assert len(batch.parameters["growth_per_doubling"]) == 1
        assert batch.parameters["variant"] == "direct"

    def test_degenerate_size_skipped(self):
        """Test that sizes with n < 2 are skipped."""
        batch = measure_runtime_scaling("path", [[1], [4]], PipelineVariant.DIRECT, seed=0)
        assert batch.trial_count == 1
        assert batch.parameters["growth_per_doubling"] == []


class TestCalibration:
    """Test cases for calibrate and confirm."""

    def test_default_slack(self):
        """Test that the pilot maximum is scaled by 1.5."""
        assert calibrate(_batch([1.0, 4.0, 2.0])) == pytest.approx(6.0)
        assert calibrate(_batch([1.0, 4.0]), slack=1.0) == 4.0

    def test_keyed(self):
        """Test calibration on a side measurement."""
        batch = _batch([5.0, 5.0], extra=[{"ratio": 0.5}, {"ratio": 2.0}])
        assert calibrate(batch, slack=2.0, key="ratio") == 4.0

    def test_invalid(self):
        """Test slack, empty and missing-key errors."""
        with pytest.raises(ExperimentError):
            calibrate(_batch([1.0]), slack=0.5)
        with pytest.raises(ExperimentError):
            calibrate(_batch([]))
        with pytest.raises(ExperimentError):
            calibrate(_batch([1.0]), key="ratio")

    def test_confirm(self):
        """Test violation counting."""
        report = confirm(_batch([1.0, 7.0, 3.0, 9.0]), bound=6.0)
        assert report.violations == 2
        assert report.violating_seeds == [1, 3]
        assert not report.passed
        assert confirm(_batch([1.0, 2.0]), bound=6.0).passed

    def test_confirm_keyed_measure_name(self):
        """Test that a keyed confirmation names the side measurement."""
        batch = _batch([1.0], measure="component_count", extra=[{"ratio": 0.3}])
        report = confirm(batch, bound=1.0, key="ratio")
        assert report.measure == "component_count.ratio"
        assert report.passed

    def test_band(self):
        """Test that the band divides the pilot minimum and multiplies the pilot maximum by the slack."""
        batch = _batch([5.0, 5.0, 5.0], extra=[{"ratio": 1.5}, {"ratio": 3.0}, {"ratio": 2.0}])
        assert calibrate_band(batch, key="ratio") == pytest.approx((1.0, 4.5))
        assert calibrate_band(_batch([2.0, 4.0]), slack=2.0) == (1.0, 8.0)
        with pytest.raises(ExperimentError):
            calibrate_band(_batch([]))

    def test_confirm_band(self):
        """Test that values below the lower bound count as violations."""
        report = confirm(_batch([0.2, 1.0, 9.0, 3.0]), bound=6.0, lower=0.5)
        assert report.violating_seeds == [0, 2]
        assert report.lower_bound == 0.5
        assert confirm(_batch([0.2]), bound=6.0).passed
