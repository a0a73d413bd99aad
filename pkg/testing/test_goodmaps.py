"""
Unit tests for fixed-locus goodness, equivariant lifts and nodal checks.

Run from project root:
    python -m pytest testing/test_goodmaps.py -v
"""

import sys
import os
import pytest

# Ensure project root is on the path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from api.validators import load_spec  # noqa: E402
from model import corpus  # noqa: E402
from model.fingroup import close  # noqa: E402
from model.utils.errors import (  # noqa: E402
    IdentityElement, NoLifts, OrderMismatch, SemanticError, TrivialFixedSpace,
)
from services.goodmap_calculator import EQUIVALENCE, GoodMapCalculator  # noqa: E402


def group(entry):
    return close(load_spec(entry).generators)


@pytest.fixture
def z4():
    return group(corpus.z4_mixed())


@pytest.fixture
def klein():
    return group(corpus.klein_four())


# ──────────────────────────────────────────────────
# 1. Splitting problem
# ──────────────────────────────────────────────────
def test_z4_quotient_structure(z4):
    g = z4.element_from_word('0.0')
    problem = GoodMapCalculator.quotient_structure(z4, g)
    assert len(problem.centralizer) == 4
    assert set(problem.kernel) == {0, g}
    assert problem.quotient_order == 2
    assert len(problem.cosets) == 2


def test_z4_is_not_good(z4):
    verdict = GoodMapCalculator.fixed_locus_goodness(z4, z4.element_from_word('0.0'))
    assert not verdict.is_good
    assert verdict.verdict == 'not_good'
    assert verdict.splittings == ()
    assert verdict.classes == 0


def test_klein_reflection_is_good(klein):
    g = klein.element_from_word('0')
    verdict = GoodMapCalculator.fixed_locus_goodness(klein, g)
    assert verdict.is_good
    assert verdict.problem.quotient_order == 2
    assert len(verdict.splittings) == 2
    assert verdict.classes == 2
    for images in verdict.splittings:
        assert all(x not in verdict.problem.kernel for x in images)


def test_trivial_quotient_is_good():
    """C(g) = K_g: the quotient is trivial and the empty section splits."""
    G = group({
        'kind': 'matrix_group', 'dimension': 2, 'conductor': 1,
        'generators': [[['-1', '0'], ['0', '1']]],
    })
    g = G.element_from_word('0')
    verdict = GoodMapCalculator.fixed_locus_goodness(G, g)
    assert verdict.problem.quotient_order == 1
    assert verdict.is_good
    assert verdict.classes == 1
    assert verdict.to_json()['splittings'] == ['e']


def test_second_klein_reflection_is_good(klein):
    verdict = GoodMapCalculator.fixed_locus_goodness(klein, klein.element_from_word('1'))
    assert verdict.to_json()['verdict'] == 'good'


def test_element_without_fixed_vectors_rejected():
    G = group(corpus.cyclic_sl2(3))
    with pytest.raises(TrivialFixedSpace):
        GoodMapCalculator.fixed_locus_goodness(G, 1)


def test_identity_rejected(klein):
    with pytest.raises(IdentityElement):
        GoodMapCalculator.fixed_locus_goodness(klein, 0)


def test_verdict_json_renders_words(klein):
    data = GoodMapCalculator.fixed_locus_goodness(klein, klein.element_from_word('0')).to_json()
    assert data['problem']['quotientOrder'] == 2
    assert all(isinstance(s, str) for s in data['splittings'])


def test_truncation_flag(klein):
    verdict = GoodMapCalculator.fixed_locus_goodness(klein, klein.element_from_word('0'), max_splittings=1)
    assert verdict.truncated
    assert len(verdict.splittings) == 1
    assert verdict.to_json()['truncated'] is True


def test_cross_validation_agrees(z4, klein):
    assert GoodMapCalculator.cross_validate_goodness(z4, z4.element_from_word('0.0')).passed
    assert GoodMapCalculator.cross_validate_goodness(klein, klein.element_from_word('0')).passed


# ──────────────────────────────────────────────────
# 2. Equivariant lifts
# ──────────────────────────────────────────────────
def test_klein_has_two_compatible_systems(klein):
    lifts = GoodMapCalculator.enumerate_equivariant_lifts(klein, [0], 2, 1)
    assert len(lifts.lifts) == 2
    assert len(lifts.equivalence_classes) == 2
    assert lifts.to_json()['equivalence'] == EQUIVALENCE
    assert {klein.element_from_word('0'), klein.element_from_word('0.1')} == set(lifts.lifts)


def test_minus_identity_single_lift():
    G = group(corpus.sign_pair())
    lifts = GoodMapCalculator.enumerate_equivariant_lifts(G, [0, 1], 2, 1)
    assert lifts.lifts == (1,)
    assert len(lifts.equivalence_classes) == 1


def test_z4_has_no_lifts(z4):
    with pytest.raises(NoLifts) as err:
        GoodMapCalculator.enumerate_equivariant_lifts(z4, [1], 2, 1)
    assert err.value.exit_code == 0


def test_permutation_matrices_never_act_by_minus_one():
    G = group(corpus.symmetric_three())
    with pytest.raises(NoLifts):
        GoodMapCalculator.enumerate_equivariant_lifts(G, [2], 2, 1)


def test_non_abelian_stabilizer_merges_lifts():
    """D4 on the first two axes times a sign on the third: six lifts, four classes."""
    G = group({
        'kind': 'matrix_group', 'dimension': 3, 'conductor': 1,
        'generators': [
            [['0', '-1', '0'], ['1', '0', '0'], ['0', '0', '1']],
            [['1', '0', '0'], ['0', '-1', '0'], ['0', '0', '1']],
            [['1', '0', '0'], ['0', '1', '0'], ['0', '0', '-1']],
        ],
    })
    assert G.order == 16
    lifts = GoodMapCalculator.enumerate_equivariant_lifts(G, [2], 2, 1)
    assert len(lifts.lifts) == 6
    assert sorted(len(c) for c in lifts.equivalence_classes) == [1, 1, 2, 2]


def test_lift_arguments_validated(klein):
    with pytest.raises(SemanticError):
        GoodMapCalculator.enumerate_equivariant_lifts(klein, [5], 2, 1)
    with pytest.raises(SemanticError):
        GoodMapCalculator.enumerate_equivariant_lifts(klein, [0], 1, 1)
    with pytest.raises(SemanticError):
        GoodMapCalculator.enumerate_equivariant_lifts(klein, [0], 4, 2)
    with pytest.raises(SemanticError):
        GoodMapCalculator.enumerate_equivariant_lifts(klein, [], 2, 1)


# ──────────────────────────────────────────────────
# 3. Nodes and multiplicities
# ──────────────────────────────────────────────────
def test_nodal_check_inverse_pair(z4):
    g = z4.element_from_word('0')
    assert GoodMapCalculator.nodal_check(g, z4.inverse(g), z4)


def test_nodal_check_same_element_of_order_four(z4):
    g = z4.element_from_word('0')
    assert not GoodMapCalculator.nodal_check(g, g, z4)


def test_nodal_check_transposition():
    G = group(corpus.symmetric_three())
    t = next(cc for cc in G.conjugacy_classes if cc.size == 3).representative_index
    assert GoodMapCalculator.nodal_check(t, t, G)


def test_nodal_orders_must_match(z4):
    with pytest.raises(OrderMismatch):
        GoodMapCalculator.nodal_check(z4.element_from_word('0'), z4.element_from_word('0.0'), z4)


def test_multiplicities_are_orders(z4):
    assert GoodMapCalculator.multiplicities(z4, [0, z4.element_from_word('0'), z4.element_from_word('0.0')]) == [1, 4, 2]
