"""
Module for parsing the text formats used on the command line.
"""

from typing import List, Tuple

from clone_minors.errors import DomainError
from clone_minors.operations import FiniteOp


def parse_op(text: str) -> FiniteOp:
    """
    Parses an operation written as "k:n:digits".

    Args:
        text: For example "2:2:0001" (Boolean AND). Entries may be separated
              by commas, which is required when k > 10.

    Returns:
        FiniteOp
    """
    parts = text.strip().split(":")
    if len(parts) != 3:
        raise DomainError(f"operation must look like 'k:n:digits', got {text!r}")
    try:
        k, n = int(parts[0]), int(parts[1])
    except ValueError:
        raise DomainError(f"base and arity must be integers in {text!r}") from None

    body = parts[2]
    try:
        if "," in body:
            values = [int(v) for v in body.split(",")]
        else:
            if k > 10:
                raise DomainError(f"entries of an operation on {k} elements must be comma-separated")
            values = [int(ch) for ch in body]
    except ValueError:
        raise DomainError(f"table entries must be digits in {text!r}") from None

    if k < 2 or n < 1:
        raise DomainError(f"need k >= 2 and n >= 1 in {text!r}")
    if len(values) != k ** n:
        raise DomainError(f"{text!r}: expected {k ** n} entries, got {len(values)}")
    return FiniteOp.from_values(k, n, values)


def parse_op_list(text: str) -> List[FiniteOp]:
    """Parses operations separated by whitespace or ';'."""
    items = [item for item in text.replace(";", " ").split() if item]
    if not items:
        raise DomainError("empty operation list")
    return [parse_op(item) for item in items]


def split_generated_id(clone_id: str) -> Tuple[bool, str]:
    """
    Tells whether a clone id has the form "gen:<op>,<op>,...".

    Returns:
        (True, generator text) for generated clones, (False, id) otherwise
    """
    if clone_id.startswith("gen:"):
        return True, clone_id[len("gen:"):]
    return False, clone_id


def parse_generators(text: str) -> List[FiniteOp]:
    """
    Parses the generator part of "gen:<op>,<op>,...".

    Operations are separated by commas; the generator list may be empty
    ("gen:") for the clone of projections.
    """
    if not text.strip():
        return []
    # "2:3:01010110,2:1:10" -- a comma followed by "<digits>:" starts a new op
    ops: List[str] = []
    current = ""
    for chunk in text.split(","):
        if current and _starts_op(chunk):
            ops.append(current)
            current = chunk
        else:
            current = f"{current},{chunk}" if current else chunk
    if current:
        ops.append(current)
    return [parse_op(item) for item in ops]


def _starts_op(chunk: str) -> bool:
    pieces = chunk.split(":")
    return len(pieces) == 3 and pieces[0].isdigit() and pieces[1].isdigit()
