"""
Shared fixtures and hypothesis strategies.
"""

import itertools

import pytest
from hypothesis import strategies as st

from clone_minors.operations import FiniteOp
from clone_minors.clones.registry import BOOLEAN_DISCRIMINATOR_IDS, get_clone


def boolean_ops(max_arity):
    """Every Boolean operation of arity 1..max_arity, by arity then table."""
    return [
        FiniteOp.from_values(2, n, values)
        for n in range(1, max_arity + 1)
        for values in itertools.product((0, 1), repeat=2 ** n)
    ]


def ops_of(k, min_arity=1, max_arity=3):
    """Strategy for operations on k elements."""
    return st.integers(min_arity, max_arity).flatmap(
        lambda n: st.lists(st.integers(0, k - 1), min_size=k ** n, max_size=k ** n).map(
            lambda values: FiniteOp.from_values(k, n, values)
        )
    )


boolean_op = ops_of(2)


@pytest.fixture(scope="session")
def small_ops():
    """The 20 Boolean operations of arity at most 2."""
    return boolean_ops(2)


@pytest.fixture(scope="session")
def boolean_clones():
    return {cid: get_clone(cid) for cid in BOOLEAN_DISCRIMINATOR_IDS}


@pytest.fixture(params=BOOLEAN_DISCRIMINATOR_IDS)
def discriminator_clone(request):
    return get_clone(request.param)
