"""
Tests for the random-restart sharpness search.
"""

import numpy as np
import pytest
import structlog

from app.blocks.block import partition
from app.blocks.classify import classify
from app.catalog.registry import get_check
from app.constants import MatrixClass
from app.errors import NotApplicable, UnknownCheck
from app.sampling import search as search_module
from app.sampling.generators import SampleSpec, sample
from app.sampling.search import default_params, sharpness_search, sigma_schedule


class TestSchedule:
    def test_geometric_endpoints(self):
        s = sigma_schedule(100, 2.0)
        assert len(s) == 100
        assert s[0] == pytest.approx(1.0)
        assert s[-1] == pytest.approx(2e-4)
        assert np.all(np.diff(s) < 0)

    def test_degenerate_lengths(self):
        assert len(sigma_schedule(0, 1.0)) == 0
        assert list(sigma_schedule(1, 1.0)) == [0.5]

    def test_default_params_take_grid_midpoint(self):
        assert default_params(get_check("thm1")) == {"t": 0.5}
        assert default_params(get_check("eq8")) == {}


class TestSharpnessSearch:
    def test_zero_restarts_evaluates_the_sample(self):
        spec = SampleSpec(MatrixClass.GINIBRE, block_dim=1, seed=4)
        witness = sharpness_search("thm06", spec, restarts=0)
        assert np.array_equal(witness.matrix.data, sample(spec).data)
        expected = get_check("thm06").evaluate(partition(sample(spec)))
        assert witness.slack == expected.worst_slack
        assert witness.restart_slacks == ()

    def test_deterministic_and_worker_independent(self):
        spec = SampleSpec(MatrixClass.GINIBRE, block_dim=1, seed=9)
        first = sharpness_search("thm06", spec, restarts=3, iterations=40, workers=1)
        second = sharpness_search("thm06", spec, restarts=3, iterations=40, workers=3)
        assert first.slack == second.slack
        assert first.restart_slacks == second.restart_slacks
        assert np.array_equal(first.matrix.data, second.matrix.data)

    def test_trace_is_strictly_decreasing(self):
        spec = SampleSpec(MatrixClass.GINIBRE, block_dim=1, seed=1)
        witness = sharpness_search("shebr_upper", spec, restarts=1, iterations=200)
        trace = witness.trace
        assert trace[-1] == witness.slack
        assert all(b < a for a, b in zip(trace, trace[1:]))

    def test_best_restart_is_reported(self):
        spec = SampleSpec(MatrixClass.GINIBRE, block_dim=1, seed=2)
        witness = sharpness_search("pinching", spec, restarts=4, iterations=50)
        assert witness.slack == min(witness.restart_slacks)

    def test_search_stays_in_class_and_sound(self):
        spec = SampleSpec(MatrixClass.ACCRETIVE_DISSIPATIVE, block_dim=1, seed=6)
        witness = sharpness_search("thm08", spec, restarts=2, iterations=150)
        assert classify(witness.matrix).accretive_dissipative
        assert witness.result.holds
        assert witness.slack >= -1e-8 * (1 + abs(witness.result.rhs))

    def test_tight_check_approaches_zero_slack(self):
        """thm06 is attained by square-zero blocks; the search drives the slack toward 0."""
        spec = SampleSpec(MatrixClass.GINIBRE, block_dim=1, seed=3)
        start = sharpness_search("thm06", spec, restarts=0)
        best = sharpness_search("thm06", spec, restarts=3, iterations=1000)
        assert best.slack < start.slack
        assert best.slack <= 1e-3
        assert best.slack >= -1e-8 * (1 + abs(best.result.rhs))

    def test_restarts_log_with_search_context(self, monkeypatch):
        seen = []
        descend = search_module._descend

        def recording_descend(*args, **kwargs):
            seen.append(structlog.contextvars.get_contextvars())
            return descend(*args, **kwargs)

        monkeypatch.setattr(search_module, "_descend", recording_descend)
        spec = SampleSpec(MatrixClass.GINIBRE, block_dim=1, seed=8)
        sharpness_search("thm06", spec, restarts=3, iterations=5, workers=2)
        assert len(seen) == 3
        for context in seen:
            assert context["check_id"] == "thm06"
            assert context["matrix_class"] == "ginibre"
            assert context["block_dim"] == 1
            assert context["seed"] == 8
        assert "check_id" not in structlog.contextvars.get_contextvars()

    def test_finds_false_triangle_counterexample(self):
        spec = SampleSpec(MatrixClass.GINIBRE, block_dim=2, seed=42)
        witness = sharpness_search("probe_false_triangle_abs", spec, restarts=10, iterations=400)
        assert witness.slack < 0
        assert not witness.result.holds

    def test_non_applicable_start(self):
        spec = SampleSpec(MatrixClass.GINIBRE, block_dim=1, seed=0)
        with pytest.raises(NotApplicable):
            sharpness_search("eq8", spec, restarts=1, iterations=5)
        with pytest.raises(NotApplicable):
            sharpness_search("eq8", spec, restarts=0)

    def test_invalid_arguments(self):
        spec = SampleSpec(MatrixClass.GINIBRE, block_dim=1)
        with pytest.raises(UnknownCheck):
            sharpness_search("thm99", spec)
        with pytest.raises(ValueError):
            sharpness_search("thm06", spec, restarts=-1)

    def test_explicit_params(self):
        spec = SampleSpec(MatrixClass.GINIBRE, block_dim=1, seed=5)
        witness = sharpness_search("thm1", spec, restarts=1, iterations=10, params={"t": 0.25})
        assert witness.params == {"t": 0.25}


@pytest.mark.slow
def test_thm06_search_reaches_equality():
    spec = SampleSpec(MatrixClass.GINIBRE, block_dim=1, seed=42)
    witness = sharpness_search("thm06", spec)
    assert witness.slack <= 1e-6
