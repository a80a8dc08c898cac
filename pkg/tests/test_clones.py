import numpy as np
import pytest

from clone_minors.config import EngineLimits, load_limits
from clone_minors.errors import CapExceededError, DomainError, UnsupportedCloneError
from clone_minors.operations import (
    FiniteOp,
    constant,
    discriminator,
    identity,
    negation,
    table_matrix,
    xor_chain,
)
from clone_minors.parsing import parse_op
from clone_minors.clones.engine import GeneratedClone, generate_arity, restrict_clone
from clone_minors.clones.registry import BOOLEAN_DISCRIMINATOR_IDS, get_clone
from clone_minors.clones.relations import RHO_0, preserves_relation
from clone_minors.clones.subalgebras import find_subalgebras


@pytest.mark.parametrize("n, expected", [(1, 3), (2, 6), (3, 20)])
def test_monotone_counts_are_dedekind_numbers(n, expected):
    assert len(get_clone("M").members(n)) == expected


@pytest.mark.parametrize(
    "clone_id, n, expected",
    [("O", 2, 16), ("T0", 2, 8), ("T1", 2, 8), ("Tid", 2, 4), ("S", 2, 4), ("D", 2, 2),
     ("S", 3, 16), ("D", 3, 8), ("L", 2, 8)],
)
def test_boolean_clone_sizes(clone_id, n, expected):
    assert len(get_clone(clone_id).members(n)) == expected


@pytest.mark.parametrize("clone_id", BOOLEAN_DISCRIMINATOR_IDS)
def test_generators_match_predicate(clone_id):
    # closing the generators yields exactly the operations the predicate accepts
    clone = get_clone(clone_id)
    generated = generate_arity(GeneratedClone(2, clone_id, clone.generators), 3)
    assert {f.table for f in generated} == {f.table for f in clone.members(3)}


@pytest.mark.parametrize("clone_id", BOOLEAN_DISCRIMINATOR_IDS)
def test_boolean_discriminator_clones_contain_t(clone_id):
    assert get_clone(clone_id).is_discriminator()


def test_monotone_clone_is_not_discriminator():
    assert not get_clone("M").is_discriminator()


@pytest.mark.parametrize("clone_id, expected", [("D", 6), ("S", 2), ("Tid", 5)])
def test_internal_iso_counts(clone_id, expected):
    assert len(get_clone(clone_id).internal_isos()) == expected


def test_internal_isos_on_three_elements():
    assert len(get_clone("D", 3).internal_isos()) == 33


def _as_pairs(iso):
    return frozenset(iso.mapping.items())


@pytest.mark.parametrize("clone_id, k", [("D", 2), ("S", 2), ("Tid", 2), ("D", 3)])
def test_internal_isos_closed_under_inverse_and_composition(clone_id, k):
    clone = get_clone(clone_id, k)
    isos = clone.internal_isos()
    known = {_as_pairs(iso) for iso in isos}
    for iso in isos:
        assert _as_pairs(iso.inverse()) in known
        assert iso.then(iso.inverse()).is_identity()
        for other in isos:
            composed = iso.then(other)
            if composed is not None:
                assert _as_pairs(composed) in known
    for sub in clone.subalgebras():
        assert frozenset((v, v) for v in sub.elements) in known


def test_subalgebras_of_s():
    assert [s.elements for s in get_clone("S").subalgebras()] == [(0, 1)]


def test_subalgebras_of_d3_are_all_subsets():
    assert len(find_subalgebras([discriminator(3)], 3)) == 7


def test_generated_d3_binary_part_is_projections():
    members = get_clone("D", 3).members(2)
    assert {f.text for f in members} == {"3:2:000111222", "3:2:012012012"}


def test_generated_membership_agrees_with_enumeration():
    clone = get_clone("D", 3)
    tables = table_matrix(3, 1)
    mask = clone.contains_mask(tables, 1)
    assert mask.sum() == 1
    assert tables[mask][0].tolist() == [0, 1, 2]


def test_generated_membership_on_three_elements_stays_within_cap():
    clone = get_clone("gen:3:1:120", 3)
    assert clone.contains(identity(3))
    assert clone.contains(parse_op("3:1:201"))
    assert clone.contains(parse_op("3:2:000111222"))
    assert not clone.contains(constant(3, 0))


def test_predicate_clone_without_generators():
    with pytest.raises(UnsupportedCloneError):
        get_clone("R0").internal_isos()


def test_rho0_membership():
    r0 = get_clone("R0")
    assert r0.contains(parse_op("2:2:0001"))
    assert not r0.contains(xor_chain(2))
    assert not r0.contains(negation())
    assert preserves_relation(parse_op("2:2:0001"), RHO_0)


def test_e_and_k_on_three_elements():
    e, k = get_clone("E", 3), get_clone("K", 3)
    # proper subclones of D: the discriminator itself is missing
    t = discriminator(3)
    assert not e.contains(t)
    assert not k.contains(t)
    x = FiniteOp.from_values(3, 1, [0, 1, 2])
    assert e.contains(x) and k.contains(x)


def test_unknown_clone_ids():
    with pytest.raises(DomainError):
        get_clone("Q")
    with pytest.raises(DomainError):
        get_clone("T0", 3)
    with pytest.raises(DomainError):
        get_clone("D", 1)


def test_generated_clone_from_id():
    clone = get_clone("gen:2:3:01001101,2:1:10")
    assert clone.k == 2
    assert len(clone.members(2)) == 4
    assert clone.is_discriminator()


def test_restrict_clone_to_two_points():
    restricted = restrict_clone(get_clone("D", 3), {0, 2})
    assert restricted.k == 2
    assert {f.table for f in restricted.members(2)} == {f.table for f in get_clone("D").members(2)}


def test_restrict_clone_rejects_open_subset():
    with pytest.raises(DomainError):
        restrict_clone(get_clone("S"), {1})


def test_cell_cap():
    limits = EngineLimits(boolean_cells=8)
    with pytest.raises(CapExceededError) as info:
        limits.check_cells(2, 4)
    assert info.value.cap == 8
    assert info.value.attempted == 16


def test_load_limits_environment(monkeypatch):
    monkeypatch.setenv("CLONE_MINOR_CAP", "64")
    assert load_limits().boolean_cells == 64
    assert load_limits(cells=4).general_cells == 4
    monkeypatch.setenv("CLONE_MINOR_CAP", "lots")
    with pytest.warns(UserWarning):
        assert load_limits().boolean_cells == 32


def test_member_matrix_is_sorted_and_read_only():
    tables = get_clone("T0").member_matrix(2)
    codes = tables.astype(np.int64) @ np.array([8, 4, 2, 1])
    assert list(codes) == sorted(codes)
    with pytest.raises(ValueError):
        tables[0, 0] = 1
