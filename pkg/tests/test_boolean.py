import pytest
from hypothesis import given

from clone_minors.errors import DomainError
from clone_minors.operations import FiniteOp, constant, table_matrix
from clone_minors.parsing import parse_op
from clone_minors.boolean.catalog import (
    INCLUSION_COVERS,
    BooleanCloneId,
    ClassLabel,
    boolean_minor,
    class_label,
    clone_id,
    d_c,
    im1,
    im2,
    is_subclone,
    label_keys,
)
from clone_minors.boolean.figures import NODES, expected_poset, formula, representative
from tests.conftest import boolean_op

ALL_IDS = [c.value for c in BooleanCloneId]


@pytest.mark.parametrize(
    "text, cid, label",
    [
        ("2:2:0001", "D", "F{0,01}^{01}"),
        ("2:1:00", "O", "[0]"),
        ("2:2:0110", "S", "F{0,1}"),
        ("2:2:0110", "D", "F{0,1}^{00}"),
        ("2:3:01101001", "D", "F{01}^{01}"),
        ("2:2:0110", "Tid", "N^{00}"),
        ("2:1:10", "T0", "N^{1*}"),
        ("2:1:10", "T1", "N^{*0}"),
        ("2:2:0111", "O", "N"),
    ],
)
def test_class_label_examples(text, cid, label):
    assert class_label(parse_op(text), cid).text == label


def test_d_c():
    assert [d_c(c) for c in ALL_IDS] == [1, 1, 1, 1, 2, 2]


def test_inclusions():
    assert is_subclone("D", "O")
    assert is_subclone("Tid", "T1")
    assert not is_subclone("S", "Tid")
    assert not is_subclone("T0", "T1")


def test_unknown_clone_id():
    with pytest.raises(DomainError):
        clone_id("M")


def test_image_families():
    f = parse_op("2:2:0001")
    assert im1(f) == {frozenset({0}), frozenset({1})}
    assert im2(f) == {frozenset({0, 1}), frozenset({0})}
    with pytest.raises(DomainError):
        im1(FiniteOp.from_values(3, 1, [0, 1, 2]))


@pytest.mark.parametrize("cid", ALL_IDS)
def test_label_keys_match_class_label(cid):
    tables = table_matrix(2, 3)
    keys = label_keys(tables, cid)
    for row, key in zip(tables[::7], keys[::7]):
        assert class_label(FiniteOp(2, 3, row.tobytes()), cid).key == key


@pytest.mark.parametrize("cid", ALL_IDS)
def test_from_key_roundtrip(cid):
    for name, _, table in NODES[cid]:
        label = class_label(parse_op(table), cid)
        assert ClassLabel.from_key(cid, label.key) == label
        assert label.text == name


def test_label_rejects_inconsistent_endpoints():
    with pytest.raises(DomainError):
        ClassLabel(BooleanCloneId.D, 0, 1, frozenset({frozenset({0})}))


@pytest.mark.parametrize("cid, size", [("D", 16), ("S", 7), ("Tid", 6), ("T0", 4), ("T1", 4), ("O", 3)])
def test_expected_poset_sizes(cid, size):
    assert len(expected_poset(cid)) == size


def test_representatives():
    assert representative("F{0,1,01}^{11}", "D").text == "2:3:10101001"
    assert representative(class_label(constant(2, 1), "Tid"), "Tid").text == "2:1:11"
    assert formula("F{0,01}^{01}", "D") == "xy"
    with pytest.raises(DomainError):
        representative("N", "D")


def test_published_representative_has_minimal_arity():
    # no class with a ternary representative meets arity 2
    tables = table_matrix(2, 2)
    seen = set(label_keys(tables, "D").tolist())
    seen |= set(label_keys(table_matrix(2, 1), "D").tolist())
    for name, _, table in NODES["D"]:
        f = parse_op(table)
        assert (class_label(f, "D").key in seen) == (f.n <= 2)


@given(boolean_op, boolean_op)
def test_boolean_minor_is_label_order(f, g):
    for cid in ALL_IDS:
        lower, upper = class_label(f, cid), class_label(g, cid)
        expected = lower.a == upper.a and lower.b == upper.b and lower.family <= upper.family
        assert boolean_minor(f, g, cid) == expected


@given(boolean_op, boolean_op)
def test_labels_coarsen_along_inclusions(f, g):
    for smaller, larger in INCLUSION_COVERS:
        if class_label(f, smaller) == class_label(g, smaller):
            assert class_label(f, larger) == class_label(g, larger)
