"""
Run configuration and exit codes of the ``eulersense`` command.

A :class:`RunConfig` is validated from the parsed command line before any
work starts, and echoed into every artifact the run writes, so identical
command lines produce identical content hashes.
"""

from enum import IntEnum
from typing import Any, Literal

from pydantic import BaseModel, Field, ValidationError

from eulersense.enums import CoherenceMethod, MatrixFormat, Solver, ValueDistribution
from eulersense.errors import (
    BlockPartitionInvalidError,
    CertificationError,
    DimensionMismatchError,
    EulerSenseError,
    GuaranteeViolationError,
    HypothesisViolatedError,
    InvariantViolationError,
    MetadataMismatchError,
    NotPrimePowerError,
    ParameterViolationError,
    ParseError,
)

Command = Literal["construct", "matrix", "analyze", "recover", "selftest"]


class ExitCode(IntEnum):
    """
    Process exit status. Stable across releases.

    - OK:            success
    - SELFTEST:      at least one selftest check failed
    - PARAMETER:     invalid parameters (n, k, t, d, s, config fields)
    - IO:            unreadable or malformed input, unwritable output
    - INVARIANT:     a built object broke a structural invariant
    - CERTIFICATION: a certified bound does not hold for the analysed matrix
    - GUARANTEE:     a recovery trial inside the guaranteed regime failed
    """

    OK = 0
    SELFTEST = 1
    PARAMETER = 2
    IO = 3
    INVARIANT = 4
    CERTIFICATION = 5
    GUARANTEE = 6


_EXIT_CODES: tuple[tuple[type[BaseException], ExitCode], ...] = (
    (ValidationError, ExitCode.PARAMETER),
    (ParameterViolationError, ExitCode.PARAMETER),
    (NotPrimePowerError, ExitCode.PARAMETER),
    (BlockPartitionInvalidError, ExitCode.PARAMETER),
    (HypothesisViolatedError, ExitCode.PARAMETER),
    (DimensionMismatchError, ExitCode.PARAMETER),
    (ParseError, ExitCode.IO),
    (MetadataMismatchError, ExitCode.IO),
    (OSError, ExitCode.IO),
    (CertificationError, ExitCode.CERTIFICATION),
    (GuaranteeViolationError, ExitCode.GUARANTEE),
    (InvariantViolationError, ExitCode.INVARIANT),
)


def exit_code_for(exc: EulerSenseError | ValidationError | OSError) -> ExitCode:
    """Map an exception raised during a run to its exit code."""
    for kind, code in _EXIT_CODES:
        if isinstance(exc, kind):
            return code
    # remaining library errors (singular fits, non-finite input) are internal faults
    return ExitCode.INVARIANT


class RunConfig(BaseModel, frozen=True):
    """
    Everything that determines the output of one command invocation.

    Unset parameters stay ``None`` and are left out of :meth:`artifact`, as is
    ``verbosity``, which only affects diagnostics.
    """

    command: Command
    n: int | None = Field(default=None, ge=2)
    k: int | None = Field(default=None, ge=2)
    t: int | None = Field(default=None, ge=1)
    d: int | None = Field(default=None, ge=1)
    s: tuple[int, ...] | None = None
    trials: int | None = Field(default=None, ge=1)
    seed: int | None = Field(default=None, ge=0)
    solver: Solver | None = None
    value_dist: ValueDistribution | None = None
    exhaustive: bool | None = None
    input: str | None = None
    config: str | None = None
    output: str | None = None
    format: MatrixFormat | None = None
    method: CoherenceMethod | None = None
    sample_pairs: int | None = Field(default=None, ge=1)
    mutate: Literal["composition"] | None = None
    outcomes: bool | None = None
    verbosity: int = 0

    def artifact(self) -> dict[str, Any]:
        """JSON form embedded in output files."""
        return self.model_dump(mode="json", exclude_none=True, exclude={"verbosity"})

    def experiment_overrides(self) -> dict[str, Any]:
        """Experiment fields given on the command line, keyed as in the config file."""
        fields = ("n", "k", "t", "d", "trials", "seed", "solver", "value_dist", "exhaustive")
        overrides = {
            name: getattr(self, name) for name in fields if getattr(self, name) is not None
        }
        if self.s is not None:
            overrides["sparsities"] = self.s
        return overrides
