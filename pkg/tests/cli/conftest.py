"""Mock acceptance criteria shared by the CLI tests."""

import pytest

from digit_dirichlet.cli.criteria import BaseCriterion, CriterionRegistry, CriterionResult
from digit_dirichlet.errors import NonConvergence


class PassingCriterion(BaseCriterion):
    """Mock criterion that always passes."""

    index = 2
    name = "always"
    group = "mock"
    description = "passes"

    def check(self, tol_scale: float) -> CriterionResult:
        return CriterionResult.judge(True, tol_scale=tol_scale)


class FailingCriterion(BaseCriterion):
    """Mock criterion whose measurement misses its threshold."""

    index = 1
    name = "never"
    group = "mock"
    description = "fails"

    def check(self, tol_scale: float) -> CriterionResult:
        return CriterionResult.judge(False, measured=1.0)


class RaisingCriterion(BaseCriterion):
    """Mock criterion whose computation raises."""

    index = 3
    name = "raises"
    group = "other"
    description = "raises NonConvergence"

    def check(self, tol_scale: float) -> CriterionResult:
        raise NonConvergence("quadrature stalled")


@pytest.fixture
def mock_registry() -> CriterionRegistry:
    """Fresh registry holding the three mock criteria."""
    registry = CriterionRegistry()
    for criterion in (PassingCriterion(), FailingCriterion(), RaisingCriterion()):
        registry.register(criterion)
    return registry
