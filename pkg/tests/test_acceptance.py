"""
End-to-end checks of the Boolean classification, the decision procedures,
the arity reduction and the order-theoretic laws.
"""

import itertools
import random

import numpy as np
import pytest

from clone_minors.operations import FiniteOp, compose, constant, image, pad_arity, projection, projections
from clone_minors.boolean.catalog import INCLUSION_COVERS, boolean_minor, class_label, is_subclone
from clone_minors.boolean.figures import expected_poset
from clone_minors.clones.engine import GeneratedClone, generate_arity
from clone_minors.clones.registry import BOOLEAN_DISCRIMINATOR_IDS, get_clone
from clone_minors.minors.classes import enumerate_classes
from clone_minors.minors.decide import minor_bruteforce, minor_decide, minor_decide_O
from clone_minors.minors.nu import compose_nu, is_order_preserving, is_surjective, nu_map
from clone_minors.bounds.counting import check_bound, count_N, stirling
from clone_minors.bounds.reduction import reduce_to_d_ary
from clone_minors.bounds.witnesses import chain_holds, witness_matrix
from tests.conftest import boolean_ops

CLASS_COUNTS = {"D": 16, "S": 7, "Tid": 6, "T0": 4, "T1": 4, "O": 3}


@pytest.fixture(scope="module")
def posets():
    return {cid: enumerate_classes(get_clone(cid), 4) for cid in BOOLEAN_DISCRIMINATOR_IDS}


@pytest.mark.parametrize("cid", BOOLEAN_DISCRIMINATOR_IDS)
def test_class_counts(posets, cid):
    assert len(posets[cid]) == CLASS_COUNTS[cid]


@pytest.mark.parametrize("cid", BOOLEAN_DISCRIMINATOR_IDS)
def test_posets_match_published_diagrams(posets, cid):
    published = expected_poset(cid)
    assert published.same_shape(posets[cid]), published.differences(posets[cid])
    for node in posets[cid].nodes:
        assert node.representative.n == published.node(node.label).representative.n


@pytest.mark.parametrize("cid", BOOLEAN_DISCRIMINATOR_IDS)
def test_decide_agrees_with_brute_force(small_ops, cid):
    clone = get_clone(cid)
    for f, g in itertools.product(small_ops, repeat=2):
        decided = minor_decide(f, g, clone).holds
        assert decided == minor_bruteforce(f, g, clone).holds, (f.text, g.text)
        assert decided == boolean_minor(f, g, cid), (f.text, g.text)


@pytest.mark.parametrize("cid", BOOLEAN_DISCRIMINATOR_IDS)
def test_fast_minor_agrees_with_decide_up_to_ternary(cid):
    clone = get_clone(cid)
    ops = boolean_ops(3)
    rng = random.Random(11)
    for _ in range(300):
        f, g = rng.choice(ops), rng.choice(ops)
        assert boolean_minor(f, g, cid) == minor_decide(f, g, clone).holds, (f.text, g.text)


def _random_op(rng, n):
    return FiniteOp.from_values(2, n, [rng.randrange(2) for _ in range(2 ** n)])


def _shuffled_minor(rng, f):
    order = list(range(1, f.n + 1))
    rng.shuffle(order)
    return pad_arity(compose(f, [projection(2, f.n, i) for i in order]), 4)


@pytest.mark.parametrize("cid", BOOLEAN_DISCRIMINATOR_IDS)
def test_labels_agree_with_equivalence(cid):
    clone = get_clone(cid)
    rng = random.Random(13)
    for step in range(120):
        f = _random_op(rng, rng.choice([3, 4]))
        # every other pair is equivalent by construction
        g = _shuffled_minor(rng, f) if step % 2 else _random_op(rng, rng.choice([3, 4]))
        same = minor_decide(f, g, clone).holds and minor_decide(g, f, clone).holds
        assert (class_label(f, cid) == class_label(g, cid)) == same, (f.text, g.text)
        if step % 2:
            assert same


def test_empty_generators_give_projections():
    clone = GeneratedClone(2, "gen:", ())
    for n in (1, 2, 3):
        assert set(generate_arity(clone, n)) == set(projections(2, n))


def test_subalgebras_of_constant_clone():
    clone = GeneratedClone(2, "gen:2:1:00", (constant(2, 0),))
    assert [s.elements for s in clone.subalgebras()] == [(0,), (0, 1)]


def test_all_operations_criterion(small_ops):
    clone = get_clone("O")
    for f, g in itertools.product(small_ops, repeat=2):
        expected = image(f) <= image(g)
        assert minor_decide_O(f, g) == expected
        assert minor_bruteforce(f, g, clone).holds == expected


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_reduction_to_ternary_exhaustive(n):
    for code in range(2 ** 2 ** n):
        f = FiniteOp.from_code(2, n, code)
        g = reduce_to_d_ary(f, 3, verify="auto")
        assert g.n == 3
        assert class_label(g, "D") == class_label(f, "D")


def test_reduction_to_ternary_sampled():
    rng = random.Random(5)
    for _ in range(200):
        f = FiniteOp.from_values(2, 5, [rng.randrange(2) for _ in range(32)])
        g = reduce_to_d_ary(f, 3, verify="decide")
        assert class_label(g, "D") == class_label(f, "D")


@pytest.mark.parametrize("k", [2, 3, 4])
def test_counting_inequality(k):
    assert check_bound(k).ok


def test_counting_inequality_for_two():
    assert count_N(2, 2) == 3
    assert stirling(3, 2) == 3


@pytest.mark.parametrize("clone_id", ["M", "R0"])
def test_infinite_index_chains(clone_id):
    frame = witness_matrix(clone_id, 3)
    expected = np.array([[m <= n for n in range(1, 4)] for m in range(1, 4)])
    np.testing.assert_array_equal(frame.to_numpy(dtype=bool), expected)
    assert chain_holds(frame)


def _two_chains():
    covers = list(INCLUSION_COVERS)
    return [(a, b, c) for a, b in covers for b2, c in covers if b == b2]


def test_nu_laws(posets):
    clones = {cid: get_clone(cid) for cid in BOOLEAN_DISCRIMINATOR_IDS}
    maps = {}
    for smaller, larger in INCLUSION_COVERS:
        nu = nu_map(clones[smaller], clones[larger], posets[smaller], posets[larger])
        assert is_surjective(nu, posets[larger])
        assert is_order_preserving(nu, posets[smaller], posets[larger])
        maps[smaller, larger] = nu
    for a, b, c in _two_chains():
        direct = nu_map(clones[a], clones[c], posets[a], posets[c])
        assert compose_nu(maps[a, b], maps[b, c]) == direct


def test_nu_s_d_preserves_heights(posets):
    d, s = posets["D"], posets["S"]
    nu = nu_map(get_clone("D"), get_clone("S"), d, s)
    heights_d, heights_s = d.heights(), s.heights()
    assert all(heights_d[label] == heights_s[image] for label, image in nu.items())


def test_nu_tid_d_preserves_components(posets):
    d, tid = posets["D"], posets["Tid"]
    nu = nu_map(get_clone("D"), get_clone("Tid"), d, tid)
    targets = tid.components()
    for component in d.components():
        images = {nu[label] for label in component}
        assert any(images <= target for target in targets)


def test_reflexivity():
    ops = boolean_ops(3)
    for cid in BOOLEAN_DISCRIMINATOR_IDS:
        assert all(boolean_minor(f, f, cid) for f in ops)


def test_transitivity():
    ops = boolean_ops(3)
    rng = random.Random(11)
    for _ in range(10 ** 4):
        f, g, h = rng.choice(ops), rng.choice(ops), rng.choice(ops)
        cid = rng.choice(BOOLEAN_DISCRIMINATOR_IDS)
        if boolean_minor(f, g, cid) and boolean_minor(g, h, cid):
            assert boolean_minor(f, h, cid)


def test_clone_monotonicity(small_ops):
    pairs = [
        (a, b) for a in BOOLEAN_DISCRIMINATOR_IDS for b in BOOLEAN_DISCRIMINATOR_IDS
        if a != b and is_subclone(a, b)
    ]
    for f, g in itertools.product(small_ops, repeat=2):
        for smaller, larger in pairs:
            if boolean_minor(f, g, smaller):
                assert boolean_minor(f, g, larger)
