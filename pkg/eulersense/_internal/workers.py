"""
Worker-count resolution for parallel verification and recovery trials.

Resolves the pool size from the constructor argument or the ``GES_THREADS``
environment variable. ``0`` (or unset) means one worker per CPU.
"""

import logging
import os
from collections.abc import Callable, Iterable, Iterator
from concurrent.futures import ThreadPoolExecutor
from typing import TypeVar

from eulersense.errors import ParameterViolationError

logger = logging.getLogger(__name__)

T = TypeVar("T")
R = TypeVar("R")


class WorkerSettings:
    """
    Decides how many worker threads parallel loops may use.

    Resolution order:

    1. Explicit ``threads`` argument
    2. ``GES_THREADS`` environment variable
    3. ``os.cpu_count()``

    Args:
        threads: Worker cap. ``0`` or ``None`` defers to the environment / CPU count.
    """

    ENV_VAR = "GES_THREADS"

    def __init__(self, threads: int | None = None) -> None:
        if threads is None:
            raw = os.environ.get(self.ENV_VAR, "").strip()
            try:
                threads = int(raw) if raw else 0
            except ValueError:
                logger.warning("Ignoring non-integer %s=%r", self.ENV_VAR, raw)
                threads = 0
            if threads < 0:
                logger.warning("Ignoring negative %s=%r", self.ENV_VAR, raw)
                threads = 0
        if threads < 0:
            raise ParameterViolationError(f"Worker count must be non-negative, got {threads}.")
        self._requested = threads

    @property
    def workers(self) -> int:
        """Resolved worker count (always ≥ 1)."""
        if self._requested > 0:
            return self._requested
        return os.cpu_count() or 1

    def map(self, fn: Callable[[T], R], items: Iterable[T]) -> Iterator[R]:
        """
        Apply ``fn`` over ``items`` preserving input order.

        Runs inline when only one worker is available, so single-threaded
        runs never pay for a pool.
        """
        if self.workers == 1:
            return map(fn, items)
        with ThreadPoolExecutor(max_workers=self.workers) as pool:
            return iter(list(pool.map(fn, items)))

    def __repr__(self) -> str:
        return f"WorkerSettings(workers={self.workers})"
