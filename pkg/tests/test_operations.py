import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from clone_minors.errors import DomainError
from clone_minors.operations import (
    FiniteOp,
    compose,
    constant,
    dec,
    discriminator,
    dual,
    enc,
    essential_arity,
    image,
    matrix_codes,
    pad_arity,
    projection,
    restrict,
    table_matrix,
    xor_chain,
)
from clone_minors.parsing import parse_generators, parse_op, parse_op_list, split_generated_id
from clone_minors.clones.registry import get_clone
from clone_minors.minors.decide import equivalent
from tests.conftest import boolean_op, ops_of


def test_enc_dec_small():
    assert enc((1, 0, 1), 2) == 5
    assert dec(5, 2, 3) == (1, 0, 1)
    assert enc((2, 1), 3) == 7


def test_enc_rejects_out_of_range():
    with pytest.raises(DomainError):
        enc((0, 2), 2)
    with pytest.raises(DomainError):
        dec(8, 2, 3)


def test_discriminator_values():
    t = discriminator(3)
    for x in range(3):
        for y in range(3):
            for z in range(3):
                assert t(x, y, z) == (z if x == y else x)


def test_projection_table():
    assert projection(2, 2, 1).text == "2:2:0011"
    assert projection(2, 2, 2).text == "2:2:0101"


def test_compose_identity():
    g = parse_op("2:2:0001")
    assert compose(g, [projection(2, 2, 1), projection(2, 2, 2)]) == g


def test_compose_with_constants():
    g = parse_op("2:2:0110")
    h = compose(g, [constant(2, 1), projection(2, 1, 1)])
    assert h.text == "2:1:10"


def test_compose_arity_mismatch():
    with pytest.raises(DomainError):
        compose(parse_op("2:2:0110"), [projection(2, 1, 1)])


def test_xor_chain():
    assert xor_chain(2).text == "2:2:0110"
    assert xor_chain(3).text == "2:3:01101001"


def test_dual_of_and_is_or():
    assert dual(parse_op("2:2:0001")).text == "2:2:0111"


@given(boolean_op)
def test_dual_is_involution(f):
    assert dual(dual(f)) == f


@given(boolean_op)
def test_code_roundtrip(f):
    assert FiniteOp.from_code(2, f.n, f.code) == f


def test_table_matrix_codes():
    tables = table_matrix(3, 1)
    assert tables.shape == (27, 3)
    np.testing.assert_array_equal(matrix_codes(tables, 3), np.arange(27))
    assert table_matrix(2, 2)[1].tolist() == [0, 0, 0, 1]


def test_pad_arity_keeps_values():
    f = parse_op("2:1:10")
    g = pad_arity(f, 3)
    assert g.n == 3
    assert essential_arity(g) == 1
    for a in range(2):
        for b in range(2):
            for c in range(2):
                assert g(a, b, c) == f(a)


def test_restrict_relabels():
    f = FiniteOp.from_values(3, 1, [0, 0, 2])
    assert restrict(f, {0, 2}).text == "2:1:01"
    with pytest.raises(DomainError):
        restrict(FiniteOp.from_values(3, 1, [1, 0, 2]), {0, 2})


def test_restrict_needs_two_elements():
    with pytest.raises(DomainError):
        restrict(FiniteOp.from_values(3, 1, [0, 0, 0]), {0})
    with pytest.raises(DomainError):
        restrict(FiniteOp.from_values(3, 1, [0, 0, 0]), set())


@given(ops_of(3, max_arity=2))
def test_image_within_base(f):
    assert image(f) <= set(range(3))


@pytest.mark.parametrize(
    "text",
    ["2:2:001", "2:x:01", "2:1:02", "1:1:0", "11:1:0123456789a", "2:2"],
)
def test_parse_op_rejects(text):
    with pytest.raises(DomainError):
        parse_op(text)


def test_parse_op_comma_separated():
    f = parse_op("12:1:" + ",".join(str(v) for v in range(12)))
    assert f.k == 12
    assert f(11) == 11


def test_parse_op_list():
    ops = parse_op_list("2:1:01; 2:2:0001 2:1:10")
    assert [f.text for f in ops] == ["2:1:01", "2:2:0001", "2:1:10"]


def test_parse_generators():
    assert split_generated_id("gen:2:3:01010011") == (True, "2:3:01010011")
    assert split_generated_id("D") == (False, "D")
    ops = parse_generators("2:3:01010011,2:1:10")
    assert [f.text for f in ops] == ["2:3:01010011", "2:1:10"]
    assert parse_generators("") == []


@given(st.integers(1, 4))
def test_xor_chain_is_self_dual_for_odd(n):
    f = xor_chain(n)
    assert (dual(f) == f) == (n % 2 == 1)


def op_over(values, k, n):
    """Strategy for n-ary operations on k elements taking values in `values`."""
    return st.lists(st.sampled_from(values), min_size=k ** n, max_size=k ** n).map(
        lambda table: FiniteOp.from_values(k, n, table)
    )


@given(st.data())
def test_compose_is_associative(data):
    k = data.draw(st.integers(2, 3))
    a, b, c = (data.draw(st.integers(1, 2)) for _ in range(3))
    f = data.draw(op_over(range(k), k, a))
    gs = [data.draw(op_over(range(k), k, b)) for _ in range(a)]
    hs = [data.draw(op_over(range(k), k, c)) for _ in range(b)]
    assert compose(f, [compose(g, hs) for g in gs]) == compose(compose(f, gs), hs)


@given(st.data())
def test_compose_image_within_outer_image(data):
    k = data.draw(st.integers(2, 3))
    m, n = data.draw(st.integers(1, 3)), data.draw(st.integers(1, 2))
    f = data.draw(op_over(range(k), k, m))
    hs = [data.draw(op_over(range(k), k, n)) for _ in range(m)]
    assert image(compose(f, hs)) <= image(f)


@given(st.data())
def test_restrict_commutes_with_compose(data):
    subset = data.draw(st.sampled_from([(0, 1), (0, 2), (1, 2), (0, 1, 2)]))
    m, n = data.draw(st.integers(1, 2)), data.draw(st.integers(1, 2))
    f = data.draw(op_over(subset, 3, m))
    hs = [data.draw(op_over(subset, 3, n)) for _ in range(m)]
    expected = compose(restrict(f, subset), [restrict(h, subset) for h in hs])
    assert restrict(compose(f, hs), subset) == expected


@settings(deadline=None)
@given(ops_of(2, max_arity=2), st.integers(0, 2))
def test_padding_stays_equivalent_under_d(f, extra):
    assert equivalent(pad_arity(f, f.n + extra), f, get_clone("D"))


@settings(max_examples=30, deadline=None)
@given(ops_of(3, max_arity=1))
def test_padding_stays_equivalent_under_d_on_three_elements(f):
    assert equivalent(pad_arity(f, 2), f, get_clone("D", 3), method="decide")
