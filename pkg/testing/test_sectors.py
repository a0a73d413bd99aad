"""
Unit tests for degree shifting numbers, inertia decompositions and the
sector identity checks.

Run from project root:
    python -m pytest testing/test_sectors.py -v
"""

import sys
import os
import pytest
from fractions import Fraction

# Ensure project root is on the path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from api.validators import load_spec  # noqa: E402
from model import corpus  # noqa: E402
from model.fingroup import EigenvalueProfile, close  # noqa: E402
from model.utils.errors import NonEffectiveAction, UnsupportedGeometry  # noqa: E402
from model.wps import WeightedProjectiveSpace  # noqa: E402
from services.sector_calculator import SectorCalculator  # noqa: E402


def decompose(entry, geometry=None):
    spec = load_spec(entry)
    return SectorCalculator.inertia(close(spec.generators), geometry or spec.geometry)


# ──────────────────────────────────────────────────
# 1. Degree shifting numbers
# ──────────────────────────────────────────────────
def test_identity_profile_has_no_shift():
    assert SectorCalculator.degree_shift(EigenvalueProfile(order=1, multiplicities=(3,))) == 0


@pytest.mark.parametrize('n', [2, 3, 5, 7])
def test_sl2_cyclic_generator_has_shift_one(n):
    multiplicities = [0] * n
    multiplicities[1] += 1
    multiplicities[n - 1] += 1
    assert SectorCalculator.degree_shift(EigenvalueProfile(order=n, multiplicities=tuple(multiplicities))) == 1


def test_reflection_has_shift_one_half():
    assert SectorCalculator.degree_shift(EigenvalueProfile(order=2, multiplicities=(1, 1))) == Fraction(1, 2)


# ──────────────────────────────────────────────────
# 2. Inertia decompositions
# ──────────────────────────────────────────────────
def test_trivial_group_has_one_sector():
    dec = decompose(corpus.trivial(3))
    assert len(dec.sectors) == 1
    s = dec.sectors[0]
    assert s.is_untwisted and s.iota == 0 and s.fixed_dim == 3


def test_minus_identity_in_sl2():
    dec = decompose(corpus.sign_pair())
    assert [s.iota for s in dec.sectors] == [0, 1]
    assert [s.fixed_dim for s in dec.sectors] == [2, 0]


def test_z4_mixed_sectors_by_word():
    dec = decompose(corpus.z4_mixed())
    assert len(dec.sectors) == 4
    expected = {
        'e': (Fraction(0), 2),
        '0': (Fraction(3, 4), 0),
        '0.0': (Fraction(1, 2), 1),
        '0.0.0': (Fraction(5, 4), 0),
    }
    for word, (iota, fixed) in expected.items():
        s = dec.sector_by_word(word)
        assert (s.iota, s.fixed_dim) == (iota, fixed), word


def test_untwisted_sector_first_and_inverse_pairs():
    dec = decompose(corpus.quaternion())
    assert dec.sectors[0].is_untwisted
    for s in dec.sectors:
        partner = dec.sectors[s.inverse_sector_index]
        assert partner.inverse_sector_index == s.class_index


def test_point_geometry_has_zero_shifts():
    dec = decompose(corpus.symmetric_three('point'))
    assert dec.complex_dimension == 0
    assert all(s.iota == 0 and s.fixed_dim == 0 for s in dec.sectors)
    assert sorted(s.class_size for s in dec.sectors) == [1, 2, 3]


def test_unknown_geometry_rejected():
    spec = load_spec(corpus.klein_four())
    with pytest.raises(UnsupportedGeometry):
        SectorCalculator.inertia(close(spec.generators), 'wps')


def test_sector_json_shape():
    data = decompose(corpus.sign_pair()).to_json()
    assert data['groupOrder'] == 2
    assert data['sectors'][1] == {
        'class': 1, 'repr': '0', 'iota': '1', 'fixedDim': 0, 'inverse': 1, 'order': 2, 'classSize': 1,
    }


# ──────────────────────────────────────────────────
# 3. Sector identities
# ──────────────────────────────────────────────────
@pytest.mark.parametrize('n', [2, 3, 4, 6, 9])
def test_cyclic_sl2_passes_all_checks(n):
    dec = decompose(corpus.cyclic_sl2(n))
    report = SectorCalculator.check_sector_identities(dec)
    assert report.passed, report.failures
    assert set(dec.iotas) <= {0, 1}


def test_non_sl_line_quotient_detected():
    dec = decompose(corpus.cyclic_line(3))
    assert sorted(dec.iotas) == [0, Fraction(1, 3), Fraction(2, 3)]
    report = SectorCalculator.check_sector_identities(dec)
    integrality = report.check('integrality')
    assert integrality.passed
    assert 'all determinants 1: False' in integrality.detail
    assert report.passed


def test_trivial_group_passes_vacuously():
    assert SectorCalculator.check_sector_identities(decompose(corpus.trivial())).passed


@pytest.mark.parametrize('entry', [
    corpus.z4_mixed(), corpus.symmetric_three(), corpus.quaternion(), corpus.klein_four('point'),
])
def test_checks_pass_on_corpus_groups(entry):
    report = SectorCalculator.check_sector_identities(decompose(entry))
    assert report.passed, report.failures
    assert [c.name for c in report.checks] == [
        'integrality', 'determinant_congruence', 'complementarity', 'involution', 'positivity',
    ]


@pytest.mark.parametrize('weights', [(1, 1, 1), (1, 1, 2), (1, 2), (2, 3, 5), (1, 3, 3)])
def test_weighted_projective_identities(weights):
    assert SectorCalculator.check_wps_sector_identities(WeightedProjectiveSpace(weights)).passed


@pytest.mark.parametrize('weights', [(2, 2), (2, 4), (3, 3, 6), (2, 2, 4)])
def test_weights_with_common_factor_rejected(weights):
    with pytest.raises(NonEffectiveAction) as exc:
        WeightedProjectiveSpace(weights)
    assert exc.value.exit_code == 2
    assert exc.value.details['gcd'] > 1


def test_wps_corpus_is_effective_and_passes():
    spaces = corpus.wps_corpus(10)
    assert (2, 2) not in [X.weights for X in spaces]
    assert (1, 2, 3) in [X.weights for X in spaces]
    for X in spaces:
        report = SectorCalculator.check_wps_sector_identities(X)
        assert report.passed, (X.label(), report.failures)
