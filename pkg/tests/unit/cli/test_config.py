"""
Tests for run configuration and exit codes.
"""

import pytest
from pydantic import ValidationError

from eulersense.cli.config import ExitCode, RunConfig, exit_code_for
from eulersense.errors import (
    BlockPartitionInvalidError,
    CertificationError,
    GuaranteeViolationError,
    InvariantViolationError,
    MetadataMismatchError,
    NonFiniteInputError,
    NotPrimePowerError,
    ParameterViolationError,
    ParseError,
)


class TestExitCodeFor:
    @pytest.mark.parametrize(
        ("exc", "code"),
        [
            (ParameterViolationError("bad"), ExitCode.PARAMETER),
            (NotPrimePowerError(6), ExitCode.PARAMETER),
            (BlockPartitionInvalidError("bad"), ExitCode.PARAMETER),
            (ParseError("bad", line=3), ExitCode.IO),
            (MetadataMismatchError("bad"), ExitCode.IO),
            (FileNotFoundError("gone"), ExitCode.IO),
            (InvariantViolationError("bad"), ExitCode.INVARIANT),
            (CertificationError("bad"), ExitCode.CERTIFICATION),
            (GuaranteeViolationError("bad"), ExitCode.GUARANTEE),
            (NonFiniteInputError(), ExitCode.INVARIANT),
        ],
    )
    def test_mapping(self, exc: Exception, code: ExitCode) -> None:
        assert exit_code_for(exc) == code  # type: ignore[arg-type]

    def test_validation_error(self) -> None:
        with pytest.raises(ValidationError) as exc_info:
            RunConfig(command="construct", n=1)

        assert exit_code_for(exc_info.value) == ExitCode.PARAMETER

    def test_codes_are_stable(self) -> None:
        assert [int(code) for code in ExitCode] == [0, 1, 2, 3, 4, 5, 6]


class TestRunConfig:
    def test_artifact_drops_unset_and_verbosity(self) -> None:
        config = RunConfig(command="construct", n=7, k=6, verbosity=2)
        assert config.artifact() == {"command": "construct", "n": 7, "k": 6}

    def test_experiment_overrides(self) -> None:
        config = RunConfig(command="recover", n=8, k=7, s=(1, 2), seed=3, solver="omp")
        assert config.experiment_overrides() == {
            "n": 8,
            "k": 7,
            "seed": 3,
            "solver": "omp",
            "sparsities": (1, 2),
        }

    def test_unknown_command(self) -> None:
        with pytest.raises(ValidationError):
            RunConfig(command="explode")  # type: ignore[arg-type]

    def test_unknown_mutation(self) -> None:
        with pytest.raises(ValidationError):
            RunConfig(command="selftest", mutate="fields")  # type: ignore[arg-type]
