"""
Module for resolving enumeration limits.

Limits are resolved in layers: an explicit argument wins, then the
CLONE_MINOR_CAP environment variable, then the built-in defaults.
"""

import os
import logging
import warnings
from dataclasses import dataclass, replace
from typing import Optional

from clone_minors.errors import CapExceededError, DomainError

logger = logging.getLogger(__name__)

ENV_CAP = "CLONE_MINOR_CAP"


@dataclass(frozen=True)
class EngineLimits:
    """
    Caps on exhaustive work.

    Attributes:
        boolean_cells: Largest table size k^n allowed when k = 2
        general_cells: Largest table size k^n allowed when k > 2
        brute_force_budget: Largest number of candidate tuples a brute-force
            minor search may try
    """
    boolean_cells: int = 32
    general_cells: int = 16
    brute_force_budget: int = 10 ** 8

    def cell_cap(self, k: int) -> int:
        return self.boolean_cells if k == 2 else self.general_cells

    def check_cells(self, k: int, n: int) -> None:
        """
        Raises CapExceededError when k^n is above the cap for base k.

        Args:
            k: Base-set size
            n: Arity
        """
        cap = self.cell_cap(k)
        if k ** n > cap:
            raise CapExceededError(f"table size {k}^{n} exceeds the cell cap", cap, k ** n)

    def check_budget(self, candidates: int) -> None:
        if candidates > self.brute_force_budget:
            raise CapExceededError(
                "brute-force search space exceeds the budget",
                self.brute_force_budget,
                candidates,
            )


DEFAULT_LIMITS = EngineLimits()


def load_limits(cells: Optional[int] = None, budget: Optional[int] = None) -> EngineLimits:
    """
    Builds the effective limits.

    Args:
        cells: Explicit cell cap for every base (overrides the environment)
        budget: Explicit brute-force budget

    Returns:
        EngineLimits instance
    """
    limits = DEFAULT_LIMITS

    # Option 1: explicit argument
    if cells is None:
        # Option 2: environment variable
        raw = os.environ.get(ENV_CAP)
        if raw:
            try:
                cells = int(raw)
                logger.debug("Using %s=%s", ENV_CAP, raw)
            except ValueError:
                warnings.warn(f"Ignoring non-integer {ENV_CAP}={raw!r}; using default caps.")
    if cells is not None:
        if cells < 1:
            raise DomainError("cell cap must be positive")
        limits = replace(limits, boolean_cells=cells, general_cells=cells)

    if budget is not None:
        limits = replace(limits, brute_force_budget=budget)

    return limits
