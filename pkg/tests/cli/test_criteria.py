"""Tests for the acceptance criteria and their registry."""

import logging

import pytest

from digit_dirichlet.cli.criteria import (
    CriterionResult,
    CriterionStatus,
    PoleCountGrowth,
    ZbLaurentAtZero,
    build_registry,
    criterion_registry,
)


class TestCriterionResult:
    """Tests for CriterionResult."""

    def test_judge(self) -> None:
        """judge maps the boolean onto PASSED or FAILED."""
        assert CriterionResult.judge(True, x=1).status == CriterionStatus.PASSED
        failed = CriterionResult.judge(False, x=2)
        assert failed.status == CriterionStatus.FAILED
        assert not failed.passed
        assert failed.measured == {"x": 2}

    def test_fail(self) -> None:
        """fail records an error status and message."""
        result = CriterionResult.fail("boom")
        assert result.status == CriterionStatus.ERROR
        assert result.error == "boom"


class TestBaseCriterion:
    """Tests for BaseCriterion.__call__."""

    def test_runtime_recorded(self, mock_registry) -> None:
        """Calling a criterion times it."""
        result = mock_registry.get("always")(2.0)
        assert result.passed
        assert result.measured == {"tol_scale": 2.0}
        assert result.runtime_s >= 0.0

    def test_library_errors_caught(self, mock_registry, caplog) -> None:
        """Library errors become an ERROR result with the error kind."""
        with caplog.at_level(logging.ERROR):
            result = mock_registry.get("raises")()
        assert result.status == CriterionStatus.ERROR
        assert result.error.startswith("NonConvergence")
        assert "raises" in caplog.text


class TestCriterionRegistry:
    """Tests for CriterionRegistry."""

    def test_register(self, mock_registry) -> None:
        """Registered criteria are found by name."""
        assert len(mock_registry) == 3
        assert "always" in mock_registry
        assert mock_registry.get("missing") is None

    def test_overwrite_warns(self, mock_registry, caplog) -> None:
        """Re-registering a name logs a warning."""
        with caplog.at_level(logging.WARNING):
            mock_registry.register(mock_registry.get("always"))
        assert "Overwriting" in caplog.text
        assert len(mock_registry) == 3

    def test_ordered_by_index(self, mock_registry) -> None:
        """names and list_criteria follow the index."""
        assert mock_registry.names == ["never", "always", "raises"]
        assert [c["index"] for c in mock_registry.list_criteria()] == [1, 2, 3]

    def test_invoke_unknown(self, mock_registry) -> None:
        """Invoking an unknown name is an error result."""
        result = mock_registry.invoke("missing")
        assert result.status == CriterionStatus.ERROR
        assert "missing" in result.error

    def test_invoke_known(self, mock_registry) -> None:
        """A registered name runs its criterion with the given scale."""
        assert "always" in mock_registry
        result = mock_registry.invoke("always", tol_scale=2.0)
        assert result.status == CriterionStatus.PASSED

    @pytest.mark.parametrize(
        "only, expected",
        [(["always"], ["always"]), (["mock"], ["never", "always"]), (["3", "never"], ["never", "raises"]), (None, ["never", "always", "raises"])],
    )
    def test_select(self, mock_registry, only, expected) -> None:
        """Selectors match names, groups and indices."""
        assert [c.name for c in mock_registry.select(only)] == expected

    def test_select_unknown(self, mock_registry) -> None:
        """A selector matching nothing raises KeyError."""
        with pytest.raises(KeyError):
            mock_registry.select(["nothing"])

    def test_run_all(self, mock_registry) -> None:
        """run_all returns (criterion, result) pairs in index order."""
        results = mock_registry.run_all()
        assert [(c.name, r.status) for c, r in results] == [
            ("never", CriterionStatus.FAILED),
            ("always", CriterionStatus.PASSED),
            ("raises", CriterionStatus.ERROR),
        ]

    def test_run_all_threaded(self, mock_registry, threaded_settings) -> None:
        """Worker threads keep the index order."""
        assert [c.name for c, _ in mock_registry.run_all(tol_scale=3.0)] == ["never", "always", "raises"]


class TestBuiltinCriteria:
    """Tests for the shipped criteria."""

    def test_thirteen_criteria(self) -> None:
        """The default registry holds criteria 1..13 with unique names."""
        registry = build_registry()
        assert [c.index for c in registry.ordered()] == list(range(1, 14))
        assert len(set(registry.names)) == 13
        assert len(criterion_registry) == 13

    def test_groups(self) -> None:
        """Groups used by --only cover every criterion."""
        groups = {c.group for c in criterion_registry.ordered()}
        assert groups == {"series", "residues", "delange", "beta", "poles", "grids", "symmetry"}

    def test_pole_count_growth(self) -> None:
        """Pole counts grow quadratically."""
        result = PoleCountGrowth()()
        assert result.passed
        assert len(result.measured["ratios"]) == 2

    def test_zb_laurent(self) -> None:
        """The Z_b Laurent data at 0 is certified."""
        assert ZbLaurentAtZero()().passed

    @pytest.mark.slow
    def test_full_suite(self) -> None:
        """Every acceptance criterion passes."""
        failures = [(c.name, r.error, r.measured) for c, r in criterion_registry.run_all() if not r.passed]
        assert failures == []
