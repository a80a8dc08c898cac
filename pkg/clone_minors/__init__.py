"""
Clone Minors - library for deciding minors and equivalence of finite
operations relative to clones.
"""

__version__ = "0.1.0"

from clone_minors.core import CloneMinors
from clone_minors.operations import FiniteOp
from clone_minors.parsing import parse_op
from clone_minors.clones.registry import get_clone
from clone_minors.errors import (
    CloneMinorError,
    DomainError,
    CapExceededError,
    UnsupportedCloneError,
    ConsistencyError
)

__all__ = [
    "CloneMinors",
    "FiniteOp",
    "parse_op",
    "get_clone",
    "CloneMinorError",
    "DomainError",
    "CapExceededError",
    "UnsupportedCloneError",
    "ConsistencyError"
]
