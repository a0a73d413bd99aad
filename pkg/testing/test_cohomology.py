"""
Unit tests for orbifold Poincare tables, weighted projective sectors,
Euler numbers and the McKay class-count report.

Run from project root:
    python -m pytest testing/test_cohomology.py -v
"""

import sys
import os
import pytest
from fractions import Fraction

# Ensure project root is on the path
sys.path.insert(0, os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

from api.validators import load_spec  # noqa: E402
from model import corpus  # noqa: E402
from model.fingroup import close  # noqa: E402
from model.graded import GradedDimensions  # noqa: E402
from model.utils.errors import NotSL, SemanticError, UnsupportedGeometry  # noqa: E402
from model.wps import WeightedProjectiveSpace  # noqa: E402
from services.cohomology_calculator import CohomologyCalculator  # noqa: E402
from services.sector_calculator import SectorCalculator  # noqa: E402


def decompose(entry):
    spec = load_spec(entry)
    return SectorCalculator.inertia(close(spec.generators), spec.geometry)


def P(*weights):
    return WeightedProjectiveSpace(tuple(weights))


# ──────────────────────────────────────────────────
# 1. Linear and point quotients
# ──────────────────────────────────────────────────
def test_point_s3_table():
    table = CohomologyCalculator.orbifold_poincare_linear(decompose(corpus.symmetric_three('point')))
    assert table.as_dict() == {0: 3}
    assert table.total_dim == 3


def test_minus_identity_table():
    table = CohomologyCalculator.orbifold_poincare_linear(decompose(corpus.sign_pair()))
    assert table.as_dict() == {0: 1, 2: 1}


def test_line_z3_table_has_fractional_degrees():
    table = CohomologyCalculator.orbifold_poincare_linear(decompose(corpus.cyclic_line(3)))
    assert table.as_dict() == {0: 1, Fraction(2, 3): 1, Fraction(4, 3): 1}
    assert list(table.to_json().items()) == [('0', 1), ('2/3', 1), ('4/3', 1)]


def test_point_euler_is_class_count():
    assert CohomologyCalculator.orbifold_euler(decompose(corpus.symmetric_three('point'))) == 3


@pytest.mark.parametrize('n', [2, 3, 5, 8])
def test_an_euler_number(n):
    assert CohomologyCalculator.orbifold_euler(decompose(corpus.cyclic_sl2(n))) == n


# ──────────────────────────────────────────────────
# 2. Weighted projective spaces
# ──────────────────────────────────────────────────
def test_projective_plane_has_only_untwisted_sector():
    sectors = CohomologyCalculator.wps_sectors(P(1, 1, 1))
    assert len(sectors) == 1
    assert sectors[0].q == 0 and sectors[0].iota == 0


def test_p112_sectors():
    sectors = CohomologyCalculator.wps_sectors(P(1, 1, 2))
    assert [s.q for s in sectors] == [0, Fraction(1, 2)]
    half = sectors[1]
    assert half.fixed_weights == (2,)
    assert half.iota == 1
    assert half.dimension == 0


def test_p12_sectors():
    sectors = CohomologyCalculator.wps_sectors(P(1, 2))
    assert sectors[1].q == Fraction(1, 2)
    assert sectors[1].iota == Fraction(1, 2)


@pytest.mark.parametrize('weights, expected', [
    ((1, 1, 1), {0: 1, 2: 1, 4: 1}),
    ((1, 1, 2), {0: 1, 2: 2, 4: 1}),
    ((1, 2), {0: 1, 1: 1, 2: 1}),
])
def test_wps_poincare_tables(weights, expected):
    assert CohomologyCalculator.orbifold_poincare_wps(P(*weights)).as_dict() == expected


def test_p112_euler():
    X = P(1, 1, 2)
    assert CohomologyCalculator.orbifold_euler(X) == 4
    assert CohomologyCalculator.wps_euler_by_sector(X) == [3, 1]


@pytest.mark.parametrize('weights', [(1, 2, 3), (2, 3), (1, 1, 4), (3, 4, 5)])
def test_wps_tables_satisfy_duality(weights):
    X = P(*weights)
    table = CohomologyCalculator.orbifold_poincare_wps(X)
    assert table.duality_defect(2 * X.complex_dimension) is None
    assert table.evaluate_at_one() == CohomologyCalculator.orbifold_euler(X)


def test_wps_involution():
    assert CohomologyCalculator.wps_sector_involution(P(1, 3)) == [0, 2, 1]


def test_weights_validated():
    with pytest.raises(SemanticError):
        P(3)
    with pytest.raises(SemanticError):
        P(1, 0)


def test_graded_dimensions_drop_zero_entries():
    table = GradedDimensions.from_counts({Fraction(2): 0, Fraction(0): 1})
    assert table.entries == ((Fraction(0), 1),)


# ──────────────────────────────────────────────────
# 3. McKay class count
# ──────────────────────────────────────────────────
@pytest.mark.parametrize('n', [2, 3, 4, 7])
def test_cyclic_mckay(n):
    report = CohomologyCalculator.mckay_report(decompose(corpus.cyclic_sl2(n)))
    assert report.class_count == n
    assert report.degrees.as_dict() == {0: 1, 2: n - 1}
    assert report.junior_classes == n - 1
    assert report.bijection_holds


def test_quaternion_mckay():
    report = CohomologyCalculator.mckay_report(decompose(corpus.quaternion()))
    assert report.class_count == 5
    assert report.degrees.as_dict() == {0: 1, 2: 4}
    assert report.to_json()['predictedBettiTotal'] == 5


def test_mckay_rejects_non_sl():
    with pytest.raises(NotSL):
        CohomologyCalculator.mckay_report(decompose(corpus.cyclic_line(3)))


def test_mckay_rejects_point_geometry():
    with pytest.raises(UnsupportedGeometry):
        CohomologyCalculator.mckay_report(decompose(corpus.quaternion('point')))
