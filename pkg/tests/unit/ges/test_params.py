"""
Tests for GES parameter validation.
"""

import pytest
from pydantic import ValidationError

from eulersense.errors import ParameterViolationError
from eulersense.ges.params import GesParams


class TestGesParams:
    def test_components(self) -> None:
        params = GesParams(n=20, k=3, t=2)
        assert params.components == [4, 5]
        assert not params.is_prime_power

    def test_prime_power(self) -> None:
        assert GesParams(n=9, k=2).is_prime_power

    def test_default_degree(self) -> None:
        assert GesParams(n=7, k=3).t == 1

    def test_t_must_be_below_k(self) -> None:
        with pytest.raises(ParameterViolationError):
            GesParams(n=7, k=3, t=3)

    def test_blocking_component(self) -> None:
        with pytest.raises(ParameterViolationError) as exc_info:
            GesParams(n=12, k=3, t=1)

        assert exc_info.value.component == 3
        assert "Component 3" in exc_info.value.message

    def test_field_bounds(self) -> None:
        with pytest.raises(ValidationError):
            GesParams(n=1, k=2)
