"""
Error hierarchy for eulersense.

Every failure the library raises is a subclass of :class:`EulerSenseError`,
so callers can catch everything at once or be specific. Verification results
(axiom reports, coherence certification) are returned as report models, not
raised; the exceptions here cover invalid input and broken invariants.
"""

from typing import Any


class EulerSenseError(Exception):
    """
    Base exception for all eulersense errors.

    This is the parent class for all library-specific exceptions.
    """

    def __init__(self, message: str) -> None:
        self.message = message
        super().__init__(message)


class NotPrimePowerError(EulerSenseError):
    """Raised when a field order is not a prime power (e.g. 6 = 2·3)."""

    def __init__(self, value: int, message: str | None = None) -> None:
        super().__init__(message or f"{value} is not a prime power.")
        self.value = value


class DivisionByZeroError(EulerSenseError):
    """Raised when inverting the zero element of a finite field."""

    def __init__(self, message: str = "Zero has no multiplicative inverse.") -> None:
        super().__init__(message)


class ParameterViolationError(EulerSenseError):
    """
    Raised when construction or experiment parameters break a precondition.

    This includes:
    - ``t < k ≤ q − 1`` failing for a prime-power order
    - a composite order whose smallest prime-power component is too small
      for ``k`` (``component`` names it)
    - truncation to ``k′ ≤ t`` or ``k′ ≥ k``
    - signal parameters that do not fit the block partition
    """

    def __init__(self, message: str, component: int | None = None) -> None:
        super().__init__(message)
        self.component = component


class LengthMismatchError(EulerSenseError):
    """Raised when two k-tuples of different lengths are compared."""

    def __init__(self, message: str = "k-tuples have different lengths.") -> None:
        super().__init__(message)


class ValueOutOfRangeError(EulerSenseError):
    """Raised when a tuple value or row index falls outside its alphabet."""

    def __init__(self, message: str) -> None:
        super().__init__(message)


class InvariantViolationError(EulerSenseError):
    """
    Raised when a built object breaks a structural invariant.

    ``witness`` carries the offending indices (a column pair, a block, …)
    so the failure can be reproduced.
    """

    def __init__(self, message: str, witness: Any = None) -> None:
        super().__init__(message)
        self.witness = witness


class DimensionMismatchError(EulerSenseError):
    """Raised when a vector length does not match the matrix side it meets."""

    def __init__(self, expected: int, actual: int, message: str | None = None) -> None:
        super().__init__(message or f"Expected a vector of length {expected}, got {actual}.")
        self.expected = expected
        self.actual = actual


class ParseError(EulerSenseError):
    """
    Raised when a GES or matrix file cannot be parsed.

    ``line`` is the 1-based line number of the problem when known.
    """

    def __init__(self, message: str, line: int | None = None, path: str | None = None) -> None:
        location = ""
        if path is not None:
            location = f"{path}:{line}: " if line is not None else f"{path}: "
        elif line is not None:
            location = f"line {line}: "
        super().__init__(f"{location}{message}")
        self.line = line
        self.path = path


class MetadataMismatchError(EulerSenseError):
    """Raised when matrix metadata disagrees with the entries actually read."""

    def __init__(self, message: str) -> None:
        super().__init__(message)


class BlockPartitionInvalidError(EulerSenseError):
    """Raised when a block length does not partition the columns validly."""

    def __init__(self, message: str) -> None:
        super().__init__(message)


class IndexOutOfRangeError(EulerSenseError):
    """Raised when a block or column index is outside the matrix."""

    def __init__(self, message: str) -> None:
        super().__init__(message)


class NonFiniteInputError(EulerSenseError):
    """Raised when a numeric routine receives NaN or infinite entries."""

    def __init__(self, message: str = "Input contains NaN or infinite values.") -> None:
        super().__init__(message)


class SingularSubproblemError(EulerSenseError):
    """
    Raised when the least-squares re-fit of a greedy solver is singular.

    ``selected`` lists the column indices chosen so far.
    """

    def __init__(self, message: str, selected: list[int] | None = None) -> None:
        super().__init__(message)
        self.selected = selected or []


class HypothesisViolatedError(EulerSenseError):
    """Raised when a recovery guarantee is asked for outside its hypothesis."""

    def __init__(self, message: str) -> None:
        super().__init__(message)


class GuaranteeViolationError(EulerSenseError):
    """
    Raised when a trial inside the guaranteed recovery regime fails.

    This signals a bug, not bad luck: ``stats`` carries the full
    experiment outcome for inspection.
    """

    def __init__(self, message: str, stats: Any = None) -> None:
        super().__init__(message)
        self.stats = stats


class CertificationError(EulerSenseError):
    """Raised when a matrix fails a bound it is supposed to certify."""

    def __init__(self, message: str, failures: list[str] | None = None) -> None:
        super().__init__(message)
        self.failures = failures or []
